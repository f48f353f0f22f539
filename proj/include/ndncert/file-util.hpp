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

#ifndef NDNCERT_FILE_UTIL_HPP
#define NDNCERT_FILE_UTIL_HPP

#include "ndncert/common.hpp"

#include <filesystem>

namespace ndncert {

/// @throw Error(StorageFailure)
std::string
readTextFile(const std::filesystem::path& path);

/**
 * @brief Replaces @p path atomically (write to a sibling temp file, fsync, rename).
 *
 * With @p ownerOnly the file is created with mode 0600.
 * @throw Error(StorageFailure)
 */
void
writeFileAtomic(const std::filesystem::path& path, std::string_view contents, bool ownerOnly = false);

/// Strips leading and trailing ASCII whitespace.
std::string_view
trim(std::string_view s);

} // namespace ndncert

#endif // NDNCERT_FILE_UTIL_HPP
