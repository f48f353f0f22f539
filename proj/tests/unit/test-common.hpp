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

#ifndef NDNCERT_TESTS_TEST_COMMON_HPP
#define NDNCERT_TESTS_TEST_COMMON_HPP

#include "ndncert/cert/validator.hpp"
#include "ndncert/encoding/packet.hpp"

#include <filesystem>
#include <map>
#include <random>

namespace ndncert {
namespace tests {

using Rng = std::mt19937_64;

Bytes
makeRandomBytes(Rng& rng, size_t minLen, size_t maxLen);

Component
makeRandomComponent(Rng& rng);

Name
makeRandomName(Rng& rng, size_t maxComponents = 8);

SignatureInfo
makeRandomSignatureInfo(Rng& rng);

Interest
makeRandomInterest(Rng& rng);

Data
makeRandomData(Rng& rng);

/// Whole-second time point near "now", so ISO round trips are exact.
TimePoint
roundedNow();

/// A key pair with a certificate for it.
struct TestIdentity
{
  crypto::KeyPair key;
  Certificate cert;
};

/// Self-signed identity valid over [notBefore, notBefore + lifetime].
TestIdentity
makeAnchorIdentity(const Name& identity, TimePoint notBefore, Clock::duration lifetime);

/// Identity whose certificate is issued by @p issuer.
TestIdentity
makeIssuedIdentity(const Name& identity, const TestIdentity& issuer, TimePoint notBefore,
                   Clock::duration lifetime, uint64_t version = 1);

/// In-memory certificate lookup for validateChain().
class MemoryCertStore
{
public:
  void
  add(const Certificate& cert);

  void
  remove(const Name& certName);

  CertificateFetcher
  fetcher() const;

private:
  std::map<Name, Data> m_certs;
};

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir
{
public:
  explicit
  TempDir(std::string_view tag = "ndncert");

  ~TempDir();

  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path&
  path() const noexcept
  {
    return m_path;
  }

private:
  std::filesystem::path m_path;
};

} // namespace tests
} // namespace ndncert

#endif // NDNCERT_TESTS_TEST_COMMON_HPP
