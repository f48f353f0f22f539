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

#include "ndncert/encoding/base64.hpp"

#include <array>

namespace ndncert {

namespace {

constexpr char ALPHABET[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

constexpr std::array<int8_t, 256>
makeReverse()
{
  std::array<int8_t, 256> table{};
  for (auto& v : table) {
    v = -1;
  }
  for (int i = 0; i < 64; ++i) {
    table[static_cast<uint8_t>(ALPHABET[i])] = static_cast<int8_t>(i);
  }
  return table;
}

constexpr auto REVERSE = makeReverse();

[[noreturn]] void
bad(const char* why)
{
  throw Error(ErrorCode::MalformedTlv, std::string("invalid base64: ") + why);
}

} // namespace

std::string
base64Encode(ByteView data)
{
  std::string out;
  out.reserve((data.size() + 2) / 3 * 4);
  size_t i = 0;
  for (; i + 3 <= data.size(); i += 3) {
    uint32_t v = (data[i] << 16) | (data[i + 1] << 8) | data[i + 2];
    out.push_back(ALPHABET[(v >> 18) & 63]);
    out.push_back(ALPHABET[(v >> 12) & 63]);
    out.push_back(ALPHABET[(v >> 6) & 63]);
    out.push_back(ALPHABET[v & 63]);
  }
  size_t rest = data.size() - i;
  if (rest == 1) {
    uint32_t v = data[i] << 16;
    out.push_back(ALPHABET[(v >> 18) & 63]);
    out.push_back(ALPHABET[(v >> 12) & 63]);
    out += "==";
  }
  else if (rest == 2) {
    uint32_t v = (data[i] << 16) | (data[i + 1] << 8);
    out.push_back(ALPHABET[(v >> 18) & 63]);
    out.push_back(ALPHABET[(v >> 12) & 63]);
    out.push_back(ALPHABET[(v >> 6) & 63]);
    out.push_back('=');
  }
  return out;
}

Bytes
base64Decode(std::string_view text)
{
  if (text.size() % 4 != 0) {
    bad("length not a multiple of 4");
  }
  Bytes out;
  out.reserve(text.size() / 4 * 3);
  for (size_t i = 0; i < text.size(); i += 4) {
    bool last = i + 4 == text.size();
    int pad = 0;
    if (last) {
      if (text[i + 3] == '=') {
        pad = text[i + 2] == '=' ? 2 : 1;
      }
    }
    uint32_t v = 0;
    for (int j = 0; j < 4; ++j) {
      char c = text[i + j];
      if (j >= 4 - pad) {
        v <<= 6;
        continue;
      }
      int d = REVERSE[static_cast<uint8_t>(c)];
      if (d < 0) {
        bad("character outside alphabet");
      }
      v = (v << 6) | static_cast<uint32_t>(d);
    }
    out.push_back(static_cast<uint8_t>(v >> 16));
    if (pad < 2) {
      out.push_back(static_cast<uint8_t>(v >> 8));
    }
    if (pad < 1) {
      out.push_back(static_cast<uint8_t>(v));
    }
    if ((pad == 1 && (v & 0xFF) != 0) || (pad == 2 && (v & 0xFFFF) != 0)) {
      bad("non-zero trailing bits");
    }
  }
  return out;
}

} // namespace ndncert
