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

#include "ndncert/requester/key-store.hpp"
#include "ndncert/file-util.hpp"
#include "ndncert/security/key-file.hpp"

#include <cstdlib>

namespace ndncert {

namespace {

const std::string IDENTITY_FILE = "identity";

std::string
nameDigestHex(const Name& name)
{
  auto digest = crypto::sha256(name.wireEncode());
  return toHex(ByteView(digest.data(), 16));
}

} // namespace

KeyStore::KeyStore(std::filesystem::path root)
  : m_root(std::move(root))
{
  if (m_root.empty()) {
    throw Error(ErrorCode::InvalidArgument, "key store root must not be empty");
  }
}

std::filesystem::path
KeyStore::defaultRoot()
{
  if (const char* home = std::getenv("NDNCERT_HOME"); home != nullptr && *home != '\0') {
    return home;
  }
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return std::filesystem::path(home) / ".ndncert";
  }
  throw Error(ErrorCode::ConfigError, "neither NDNCERT_HOME nor HOME is set");
}

std::filesystem::path
KeyStore::identityDir(const Name& identity) const
{
  return m_root / nameDigestHex(identity);
}

std::filesystem::path
KeyStore::ensureIdentityDir(const Name& identity)
{
  auto dir = identityDir(identity);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::StorageFailure, "cannot create " + dir.string() + ": " + ec.message());
  }
  std::filesystem::permissions(dir, std::filesystem::perms::owner_all, ec);
  if (!std::filesystem::exists(dir / IDENTITY_FILE)) {
    writeFileAtomic(dir / IDENTITY_FILE, identity.toUri() + "\n");
  }
  return dir;
}

crypto::KeyPair
KeyStore::generateKey(const Name& identity)
{
  auto key = crypto::KeyPair::generate(identity);
  saveKey(key);
  return key;
}

void
KeyStore::saveKey(const crypto::KeyPair& key)
{
  std::lock_guard lock(m_mutex);
  auto dir = ensureIdentityDir(key.identity());
  savePrivateKey(key.privateKey(), dir / (key.keyName()[-1].toUri() + ".key"));
}

bool
KeyStore::hasKey(const Name& keyName) const
{
  if (!isKeyName(keyName)) {
    return false;
  }
  return std::filesystem::exists(identityDir(keyNameToIdentity(keyName)) / (keyName[-1].toUri() + ".key"));
}

crypto::KeyPair
KeyStore::loadKey(const Name& keyName) const
{
  if (!hasKey(keyName)) {
    throw Error(ErrorCode::InvalidArgument, "no stored key " + keyName.toUri());
  }
  auto path = identityDir(keyNameToIdentity(keyName)) / (keyName[-1].toUri() + ".key");
  crypto::KeyPair key(loadPrivateKey(path), keyName);
  if (crypto::makeKeyName(key.identity(), key.publicKey()) != keyName) {
    throw Error(ErrorCode::MalformedKey, path.string() + " does not hold key " + keyName.toUri());
  }
  return key;
}

void
KeyStore::installCertificate(const Certificate& cert)
{
  std::lock_guard lock(m_mutex);
  auto dir = ensureIdentityDir(cert.identity());
  saveCertificate(cert, dir / (nameDigestHex(cert.name()) + ".cert"));
}

std::vector<Certificate>
KeyStore::certificates(const Name& identity) const
{
  std::vector<Certificate> certs;
  auto dir = identityDir(identity);
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.path().extension() != ".cert") {
      continue;
    }
    auto cert = loadCertificate(entry.path());
    if (cert.identity() == identity) {
      certs.push_back(std::move(cert));
    }
  }
  return certs;
}

std::optional<Certificate>
KeyStore::latestCertificate(const Name& identity) const
{
  std::optional<Certificate> best;
  for (auto& cert : certificates(identity)) {
    if (!best || cert.version() > best->version() ||
        (cert.version() == best->version() && cert.validity().notAfter > best->validity().notAfter)) {
      best = std::move(cert);
    }
  }
  return best;
}

std::vector<Name>
KeyStore::identities() const
{
  std::vector<Name> out;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(m_root, ec)) {
    auto file = entry.path() / IDENTITY_FILE;
    if (entry.is_directory() && std::filesystem::exists(file)) {
      out.emplace_back(std::string(trim(readTextFile(file))));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace ndncert
