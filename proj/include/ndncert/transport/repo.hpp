/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */
/*
 * Copyright (c) 2026, ndncert-lite contributors.
 *
 * This file is part of ndncert-lite, a certificate management system based on NDN.
 *
 * ndncert-lite is free software: you can redistribute it and/or modify it under the terms
 * of the GNU General Public License as published by the Free Software Foundation, either
 * version 3 of the License, or (at your option) any later version.
 *
 * ndncert-lite is distributed in the hope that it will be useful, but WITHOUT ANY
 * WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A
 * PARTICULAR PURPOSE.  See the GNU General Public License for more details.
 */

#ifndef NDNCERT_TRANSPORT_REPO_HPP
#define NDNCERT_TRANSPORT_REPO_HPP

#include "ndncert/cert/validator.hpp"
#include "ndncert/transport/forwarder.hpp"

#include <filesystem>

namespace ndncert {

/**
 * @brief Certificate store that keeps serving after the issuer goes away.
 *
 * With a directory, every certificate is also written there as one base64 file
 * (the same format as the certificate export) and the directory is loaded on start.
 */
class Repo
{
public:
  /// In-memory only.
  Repo() = default;

  /// @throw Error(StorageFailure) if the directory cannot be created or read
  explicit
  Repo(std::filesystem::path dir);

  void
  insert(const Certificate& cert);

  void
  erase(const Name& certName);

  std::optional<Certificate>
  find(const Name& certName) const;

  /// Highest-version certificate whose name starts with @p prefix.
  std::optional<Certificate>
  findLatest(const Name& prefix) const;

  /// All certificates under @p prefix, in name order.
  std::vector<Certificate>
  list(const Name& prefix = Name()) const;

  size_t
  size() const;

  /// Answers an exact cert name, a full name with implicit digest, or (CanBePrefix) any prefix.
  InterestHandler
  handler() const;

  /// Lookup by key name for validateChain.
  CertificateFetcher
  fetcher() const;

private:
  std::filesystem::path
  fileFor(const Name& certName) const;

private:
  std::filesystem::path m_dir;
  mutable std::shared_mutex m_mutex;
  std::map<Name, Certificate> m_certs;
};

/// Fetches certificates by key name through @p face (CanBePrefix, latest version); misses yield nothing.
CertificateFetcher
makeNetworkFetcher(Face& face, Milliseconds timeout = Milliseconds(2000));

} // namespace ndncert

#endif // NDNCERT_TRANSPORT_REPO_HPP
