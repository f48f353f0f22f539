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

#include "ndncert/encoding/tlv.hpp"

#include <algorithm>

namespace ndncert {
namespace tlv {

size_t
sizeOfVarNumber(uint64_t n) noexcept
{
  if (n < 253)
    return 1;
  if (n <= 0xFFFF)
    return 3;
  if (n <= 0xFFFFFFFF)
    return 5;
  return 9;
}

void
writeVarNumber(Bytes& out, uint64_t n)
{
  auto writeBe = [&out] (uint64_t v, int width) {
    for (int i = width - 1; i >= 0; --i) {
      out.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }
  };
  if (n < 253) {
    out.push_back(static_cast<uint8_t>(n));
  }
  else if (n <= 0xFFFF) {
    out.push_back(253);
    writeBe(n, 2);
  }
  else if (n <= 0xFFFFFFFF) {
    out.push_back(254);
    writeBe(n, 4);
  }
  else {
    out.push_back(255);
    writeBe(n, 8);
  }
}

size_t
sizeOfNonNegativeInteger(uint64_t n) noexcept
{
  if (n <= 0xFF)
    return 1;
  if (n <= 0xFFFF)
    return 2;
  if (n <= 0xFFFFFFFF)
    return 4;
  return 8;
}

Encoder&
Encoder::appendTlv(uint32_t type, ByteView value)
{
  writeVarNumber(m_buf, type);
  writeVarNumber(m_buf, value.size());
  m_buf.insert(m_buf.end(), value.begin(), value.end());
  return *this;
}

Encoder&
Encoder::appendNonNegativeInteger(uint32_t type, uint64_t value)
{
  size_t width = sizeOfNonNegativeInteger(value);
  uint8_t buf[8];
  for (size_t i = 0; i < width; ++i) {
    buf[i] = static_cast<uint8_t>(value >> (8 * (width - 1 - i)));
  }
  return appendTlv(type, ByteView(buf, width));
}

Encoder&
Encoder::appendEmpty(uint32_t type)
{
  return appendTlv(type, ByteView());
}

Encoder&
Encoder::appendRaw(ByteView wire)
{
  m_buf.insert(m_buf.end(), wire.begin(), wire.end());
  return *this;
}

Encoder&
Encoder::appendNested(uint32_t type, const std::function<void(Encoder&)>& fill)
{
  Encoder inner;
  fill(inner);
  return appendTlv(type, inner.bytes());
}

Bytes
encodeTlv(uint32_t type, ByteView value)
{
  Encoder enc;
  enc.appendTlv(type, value);
  return enc.release();
}

uint64_t
Reader::readVarNumber()
{
  if (m_pos >= m_buf.size()) {
    throw Error(ErrorCode::Truncated, "missing TLV type or length");
  }
  uint8_t first = m_buf[m_pos++];
  if (first < 253) {
    return first;
  }
  size_t width = first == 253 ? 2 : first == 254 ? 4 : 8;
  if (m_buf.size() - m_pos < width) {
    throw Error(ErrorCode::Truncated, "VAR-NUMBER extends past end of buffer");
  }
  uint64_t n = 0;
  for (size_t i = 0; i < width; ++i) {
    n = (n << 8) | m_buf[m_pos++];
  }
  if (sizeOfVarNumber(n) != width + 1) {
    throw Error(ErrorCode::MalformedTlv, "non-minimal VAR-NUMBER encoding");
  }
  return n;
}

Element
Reader::next()
{
  size_t start = m_pos;
  uint64_t type = readVarNumber();
  if (type == 0 || type > 0xFFFFFFFF) {
    throw Error(ErrorCode::MalformedTlv, "TLV type out of range");
  }
  uint64_t length = readVarNumber();
  if (length > m_buf.size() - m_pos) {
    throw Error(ErrorCode::Truncated, "TLV length " + std::to_string(length) +
                " exceeds remaining " + std::to_string(m_buf.size() - m_pos) + " bytes");
  }
  Element e;
  e.type = static_cast<uint32_t>(type);
  e.value = m_buf.subspan(m_pos, length);
  m_pos += length;
  e.wire = m_buf.subspan(start, m_pos - start);
  return e;
}

Element
parseSingle(ByteView wire)
{
  Reader reader(wire);
  Element e = reader.next();
  if (!reader.atEnd()) {
    throw Error(ErrorCode::MalformedTlv, "trailing bytes after TLV");
  }
  return e;
}

Element
parseSingle(ByteView wire, uint32_t expectedType)
{
  Element e = parseSingle(wire);
  if (e.type != expectedType) {
    throw Error(ErrorCode::MalformedTlv, "expected TLV type " + std::to_string(expectedType) +
                ", got " + std::to_string(e.type));
  }
  return e;
}

uint64_t
readNonNegativeInteger(const Element& e)
{
  size_t n = e.value.size();
  if (n != 1 && n != 2 && n != 4 && n != 8) {
    throw Error(ErrorCode::MalformedTlv, "NonNegativeInteger of invalid length");
  }
  uint64_t v = 0;
  for (auto b : e.value) {
    v = (v << 8) | b;
  }
  if (sizeOfNonNegativeInteger(v) != n) {
    throw Error(ErrorCode::MalformedTlv, "non-minimal NonNegativeInteger");
  }
  return v;
}

ElementMap::ElementMap(ByteView value, std::initializer_list<uint32_t> known,
                       std::initializer_list<uint32_t> repeatable)
{
  auto contains = [] (std::initializer_list<uint32_t> list, uint32_t t) {
    return std::find(list.begin(), list.end(), t) != list.end();
  };

  Reader reader(value);
  while (!reader.atEnd()) {
    Element e = reader.next();
    if (!contains(known, e.type)) {
      if (isCritical(e.type)) {
        throw Error(ErrorCode::UnknownCriticalField,
                    "unrecognized critical TLV type " + std::to_string(e.type));
      }
      continue;
    }
    if (!contains(repeatable, e.type) && find(e.type) != nullptr) {
      throw Error(ErrorCode::DuplicateField, "repeated TLV type " + std::to_string(e.type));
    }
    m_elements.push_back(e);
  }
}

const Element*
ElementMap::find(uint32_t type) const
{
  for (const auto& e : m_elements) {
    if (e.type == type)
      return &e;
  }
  return nullptr;
}

const Element&
ElementMap::require(uint32_t type) const
{
  const Element* e = find(type);
  if (e == nullptr) {
    throw Error(ErrorCode::MissingField, "required TLV type " + std::to_string(type) + " absent");
  }
  return *e;
}

std::vector<Element>
ElementMap::all(uint32_t type) const
{
  std::vector<Element> out;
  for (const auto& e : m_elements) {
    if (e.type == type)
      out.push_back(e);
  }
  return out;
}

} // namespace tlv
} // namespace ndncert
