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

#ifndef NDNCERT_SECURITY_KEY_FILE_HPP
#define NDNCERT_SECURITY_KEY_FILE_HPP

#include "ndncert/security/crypto.hpp"

#include <filesystem>

namespace ndncert {

/// Key files hold base64 PKCS#8, one line.
crypto::PrivateKey
loadPrivateKey(const std::filesystem::path& path);

/// Written 0600 via temp file and rename.
void
savePrivateKey(const crypto::PrivateKey& key, const std::filesystem::path& path);

} // namespace ndncert

#endif // NDNCERT_SECURITY_KEY_FILE_HPP
