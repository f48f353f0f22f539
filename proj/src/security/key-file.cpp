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

#include "ndncert/security/key-file.hpp"
#include "ndncert/encoding/base64.hpp"
#include "ndncert/file-util.hpp"

namespace ndncert {

crypto::PrivateKey
loadPrivateKey(const std::filesystem::path& path)
{
  auto text = readTextFile(path);
  return crypto::PrivateKey::fromPkcs8(base64Decode(trim(text)));
}

void
savePrivateKey(const crypto::PrivateKey& key, const std::filesystem::path& path)
{
  auto der = key.pkcs8();
  auto text = base64Encode(der) + "\n";
  crypto::secureErase(der);
  writeFileAtomic(path, text, true);
  crypto::secureErase(std::span<uint8_t>(reinterpret_cast<uint8_t*>(text.data()), text.size()));
}

} // namespace ndncert
