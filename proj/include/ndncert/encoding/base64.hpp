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

#ifndef NDNCERT_ENCODING_BASE64_HPP
#define NDNCERT_ENCODING_BASE64_HPP

#include "ndncert/common.hpp"

namespace ndncert {

/// RFC 4648 base64 with padding, no line breaks.
std::string
base64Encode(ByteView data);

/**
 * @brief Strict decoder: rejects whitespace, bad padding, and non-zero trailing bits,
 *        so every byte string has exactly one accepted encoding.
 * @throw Error(MalformedTlv)
 */
Bytes
base64Decode(std::string_view text);

} // namespace ndncert

#endif // NDNCERT_ENCODING_BASE64_HPP
