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

#ifndef NDNCERT_REQUESTER_KEY_STORE_HPP
#define NDNCERT_REQUESTER_KEY_STORE_HPP

#include "ndncert/cert/certificate.hpp"

#include <filesystem>
#include <mutex>

namespace ndncert {

/**
 * @brief Requester-side store of key pairs and installed certificates.
 *
 * Layout under the root, one subdirectory per identity:
 *
 *     <root>/<id-dir>/identity        identity URI, one line
 *     <root>/<id-dir>/<key-id>.key    base64 PKCS#8, mode 0600
 *     <root>/<id-dir>/<cert-id>.cert  base64 certificate
 *
 * <id-dir> and <cert-id> are hex of the first 16 bytes of SHA-256 over the identity
 * or certificate name TLV. Every file is replaced atomically, so a concurrent reader
 * sees either the old or the new certificate during renewal.
 */
class KeyStore
{
public:
  explicit
  KeyStore(std::filesystem::path root);

  /// $NDNCERT_HOME, else $HOME/.ndncert
  static std::filesystem::path
  defaultRoot();

  const std::filesystem::path&
  root() const noexcept
  {
    return m_root;
  }

  /// Generates and stores a new key for @p identity.
  crypto::KeyPair
  generateKey(const Name& identity);

  void
  saveKey(const crypto::KeyPair& key);

  /// @throw Error(InvalidArgument) if no such key is stored
  crypto::KeyPair
  loadKey(const Name& keyName) const;

  bool
  hasKey(const Name& keyName) const;

  void
  installCertificate(const Certificate& cert);

  /// All stored certificates of @p identity, unordered.
  std::vector<Certificate>
  certificates(const Name& identity) const;

  /// Highest-version certificate of @p identity.
  std::optional<Certificate>
  latestCertificate(const Name& identity) const;

  std::vector<Name>
  identities() const;

  std::filesystem::path
  identityDir(const Name& identity) const;

private:
  std::filesystem::path
  ensureIdentityDir(const Name& identity);

private:
  std::filesystem::path m_root;
  mutable std::mutex m_mutex;
};

} // namespace ndncert

#endif // NDNCERT_REQUESTER_KEY_STORE_HPP
