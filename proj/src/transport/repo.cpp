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

#include "ndncert/transport/repo.hpp"
#include "ndncert/security/crypto.hpp"

namespace ndncert {

namespace fs = std::filesystem;

Repo::Repo(fs::path dir)
  : m_dir(std::move(dir))
{
  std::error_code ec;
  fs::create_directories(m_dir, ec);
  if (ec) {
    throw Error(ErrorCode::StorageFailure, "cannot create repo directory " + m_dir.string() + ": " + ec.message());
  }
  for (const auto& entry : fs::directory_iterator(m_dir, ec)) {
    if (entry.path().extension() != ".cert") {
      continue;
    }
    auto cert = loadCertificate(entry.path());
    m_certs.insert_or_assign(cert.name(), std::move(cert));
  }
  if (ec) {
    throw Error(ErrorCode::StorageFailure, "cannot list " + m_dir.string() + ": " + ec.message());
  }
}

fs::path
Repo::fileFor(const Name& certName) const
{
  auto digest = crypto::sha256(certName.wireEncode());
  return m_dir / (toHex(ByteView(digest.data(), 16)) + ".cert");
}

void
Repo::insert(const Certificate& cert)
{
  std::unique_lock lock(m_mutex);
  if (!m_dir.empty()) {
    saveCertificate(cert, fileFor(cert.name()));
  }
  m_certs.insert_or_assign(cert.name(), cert);
}

void
Repo::erase(const Name& certName)
{
  std::unique_lock lock(m_mutex);
  if (m_certs.erase(certName) > 0 && !m_dir.empty()) {
    std::error_code ec;
    fs::remove(fileFor(certName), ec);
  }
}

std::optional<Certificate>
Repo::find(const Name& certName) const
{
  std::shared_lock lock(m_mutex);
  auto it = m_certs.find(certName);
  if (it == m_certs.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<Certificate>
Repo::findLatest(const Name& prefix) const
{
  std::shared_lock lock(m_mutex);
  const Certificate* best = nullptr;
  for (auto it = m_certs.lower_bound(prefix); it != m_certs.end() && prefix.isPrefixOf(it->first); ++it) {
    // same key name sorts by version component, but different keys interleave
    if (best == nullptr || it->second.version() > best->version()) {
      best = &it->second;
    }
  }
  if (best == nullptr) {
    return std::nullopt;
  }
  return *best;
}

std::vector<Certificate>
Repo::list(const Name& prefix) const
{
  std::shared_lock lock(m_mutex);
  std::vector<Certificate> out;
  for (auto it = m_certs.lower_bound(prefix); it != m_certs.end() && prefix.isPrefixOf(it->first); ++it) {
    out.push_back(it->second);
  }
  return out;
}

size_t
Repo::size() const
{
  std::shared_lock lock(m_mutex);
  return m_certs.size();
}

InterestHandler
Repo::handler() const
{
  return [this] (const Interest& interest) -> std::optional<Data> {
    const Name& name = interest.name();
    if (!name.empty() && name[-1].type() == tlv::ImplicitSha256DigestComponent) {
      auto cert = find(name.getPrefix(-1));
      if (cert && cert->fullName() == name) {
        return cert->data();
      }
      return std::nullopt;
    }
    if (auto cert = find(name)) {
      return cert->data();
    }
    if (interest.canBePrefix()) {
      if (auto cert = findLatest(name)) {
        return cert->data();
      }
    }
    return std::nullopt;
  };
}

CertificateFetcher
Repo::fetcher() const
{
  return [this] (const Name& keyName) {
    std::vector<Data> out;
    for (const auto& cert : list(keyName)) {
      out.push_back(cert.data());
    }
    return out;
  };
}

CertificateFetcher
makeNetworkFetcher(Face& face, Milliseconds timeout)
{
  return [&face, timeout] (const Name& keyName) {
    std::vector<Data> out;
    try {
      out.push_back(expressWithRetries(face, [&] {
        Interest interest(keyName);
        interest.setCanBePrefix(true);
        return interest;
      }, 3, timeout));
    }
    catch (const Error& e) {
      if (e.code() != ErrorCode::Timeout) {
        throw;
      }
    }
    return out;
  };
}

} // namespace ndncert
