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

#include "ndncert/encoding/name.hpp"

#include <algorithm>
#include <charconv>

namespace ndncert {

namespace {

constexpr std::string_view DIGEST_PREFIX = "sha256digest=";
constexpr std::string_view PARAMS_PREFIX = "params-sha256=";

bool
needsEscape(uint8_t c)
{
  return c <= 0x20 || c >= 0x7F || c == '/' || c == '%' || c == '=';
}

std::string
escape(ByteView value)
{
  static constexpr char DIGITS[] = "0123456789ABCDEF";
  bool allPeriods = std::all_of(value.begin(), value.end(), [] (uint8_t c) { return c == '.'; });
  if (allPeriods) {
    return std::string(value.size(), '.') + "...";
  }
  std::string out;
  for (auto c : value) {
    if (needsEscape(c)) {
      out.push_back('%');
      out.push_back(DIGITS[c >> 4]);
      out.push_back(DIGITS[c & 0x0F]);
    }
    else {
      out.push_back(static_cast<char>(c));
    }
  }
  return out;
}

int
hexDigit(char c)
{
  if (c >= '0' && c <= '9')
    return c - '0';
  if (c >= 'a' && c <= 'f')
    return c - 'a' + 10;
  if (c >= 'A' && c <= 'F')
    return c - 'A' + 10;
  return -1;
}

Bytes
unescape(std::string_view text)
{
  if (!text.empty() && std::all_of(text.begin(), text.end(), [] (char c) { return c == '.'; })) {
    if (text.size() < 3) {
      throw Error(ErrorCode::MalformedName, "component '" + std::string(text) + "' is reserved");
    }
    return Bytes(text.size() - 3, '.');
  }
  Bytes out;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '%') {
      if (i + 2 >= text.size()) {
        throw Error(ErrorCode::MalformedName, "truncated percent-escape");
      }
      int hi = hexDigit(text[i + 1]);
      int lo = hexDigit(text[i + 2]);
      if (hi < 0 || lo < 0) {
        throw Error(ErrorCode::MalformedName, "invalid percent-escape");
      }
      out.push_back(static_cast<uint8_t>((hi << 4) | lo));
      i += 2;
    }
    else {
      out.push_back(static_cast<uint8_t>(text[i]));
    }
  }
  return out;
}

} // namespace

Component
Component::fromString(std::string_view text)
{
  return Component(tlv::GenericNameComponent, Bytes(text.begin(), text.end()));
}

Component
Component::fromUri(std::string_view segment)
{
  auto parseDigest = [&] (std::string_view prefix, uint32_t type) {
    Bytes digest;
    try {
      digest = fromHex(segment.substr(prefix.size()));
    }
    catch (const Error&) {
      throw Error(ErrorCode::MalformedName, "invalid digest component");
    }
    if (digest.size() != 32) {
      throw Error(ErrorCode::MalformedName, "digest component must be 32 bytes");
    }
    return Component(type, std::move(digest));
  };

  if (segment.starts_with(DIGEST_PREFIX)) {
    return parseDigest(DIGEST_PREFIX, tlv::ImplicitSha256DigestComponent);
  }
  if (segment.starts_with(PARAMS_PREFIX)) {
    return parseDigest(PARAMS_PREFIX, tlv::ParametersSha256DigestComponent);
  }
  auto eq = segment.find('=');
  if (eq != std::string_view::npos) {
    uint32_t type = 0;
    auto typeText = segment.substr(0, eq);
    auto [ptr, ec] = std::from_chars(typeText.data(), typeText.data() + typeText.size(), type);
    if (ec != std::errc() || ptr != typeText.data() + typeText.size() || type == 0) {
      throw Error(ErrorCode::MalformedName, "invalid typed component '" + std::string(segment) + "'");
    }
    return Component(type, unescape(segment.substr(eq + 1)));
  }
  return Component(tlv::GenericNameComponent, unescape(segment));
}

Component
Component::fromNumber(uint64_t n)
{
  return fromString(std::to_string(n));
}

std::optional<uint64_t>
Component::toNumber() const
{
  if (!isGeneric() || m_value.empty() || m_value.size() > 20) {
    return std::nullopt;
  }
  if (m_value.size() > 1 && m_value[0] == '0') {
    return std::nullopt;
  }
  uint64_t n = 0;
  auto first = reinterpret_cast<const char*>(m_value.data());
  auto [ptr, ec] = std::from_chars(first, first + m_value.size(), n);
  if (ec != std::errc() || ptr != first + m_value.size()) {
    return std::nullopt;
  }
  return n;
}

std::string
Component::toUri() const
{
  switch (m_type) {
    case tlv::ImplicitSha256DigestComponent:
      return std::string(DIGEST_PREFIX) + toHex(m_value);
    case tlv::ParametersSha256DigestComponent:
      return std::string(PARAMS_PREFIX) + toHex(m_value);
    case tlv::GenericNameComponent:
      return escape(m_value);
    default:
      return std::to_string(m_type) + "=" + escape(m_value);
  }
}

Bytes
Component::wireEncode() const
{
  return tlv::encodeTlv(m_type, m_value);
}

std::strong_ordering
Component::operator<=>(const Component& other) const
{
  if (auto c = m_type <=> other.m_type; c != 0)
    return c;
  if (auto c = m_value.size() <=> other.m_value.size(); c != 0)
    return c;
  return std::lexicographical_compare_three_way(m_value.begin(), m_value.end(),
                                                other.m_value.begin(), other.m_value.end());
}

Name::Name(std::string_view uri)
{
  size_t pos = 0;
  while (pos <= uri.size()) {
    size_t slash = uri.find('/', pos);
    if (slash == std::string_view::npos) {
      slash = uri.size();
    }
    auto segment = uri.substr(pos, slash - pos);
    if (!segment.empty()) {
      m_components.push_back(Component::fromUri(segment));
    }
    pos = slash + 1;
  }
}

const Component&
Name::at(ptrdiff_t i) const
{
  ptrdiff_t n = static_cast<ptrdiff_t>(m_components.size());
  ptrdiff_t idx = i < 0 ? n + i : i;
  if (idx < 0 || idx >= n) {
    throw std::out_of_range("Name component index " + std::to_string(i) + " out of range");
  }
  return m_components[static_cast<size_t>(idx)];
}

Name
Name::getPrefix(ptrdiff_t n) const
{
  ptrdiff_t size = static_cast<ptrdiff_t>(m_components.size());
  ptrdiff_t count = n < 0 ? size + n : n;
  count = std::clamp<ptrdiff_t>(count, 0, size);
  return Name(std::vector<Component>(m_components.begin(), m_components.begin() + count));
}

Name
Name::getSubName(size_t start, size_t count) const
{
  if (start >= m_components.size()) {
    return Name();
  }
  size_t end = count > m_components.size() - start ? m_components.size() : start + count;
  return Name(std::vector<Component>(m_components.begin() + start, m_components.begin() + end));
}

Name&
Name::append(Component c)
{
  m_components.push_back(std::move(c));
  return *this;
}

Name&
Name::append(const Name& suffix)
{
  m_components.insert(m_components.end(), suffix.m_components.begin(), suffix.m_components.end());
  return *this;
}

bool
Name::isPrefixOf(const Name& other) const noexcept
{
  if (m_components.size() > other.m_components.size()) {
    return false;
  }
  return std::equal(m_components.begin(), m_components.end(), other.m_components.begin());
}

Name
Name::withoutDigest() const
{
  Name out(*this);
  while (!out.m_components.empty() && out.m_components.back().isDigest()) {
    out.m_components.pop_back();
  }
  return out;
}

std::string
Name::toUri() const
{
  if (m_components.empty()) {
    return "/";
  }
  std::string out;
  for (const auto& c : m_components) {
    out.push_back('/');
    out += c.toUri();
  }
  return out;
}

Bytes
Name::wireEncode() const
{
  tlv::Encoder enc;
  enc.appendNested(tlv::Name, [this] (tlv::Encoder& inner) {
    for (const auto& c : m_components) {
      inner.appendTlv(c.type(), c.value());
    }
  });
  return enc.release();
}

Name
Name::wireDecode(const tlv::Element& e)
{
  if (e.type != tlv::Name) {
    throw Error(ErrorCode::MalformedTlv, "expected Name TLV");
  }
  std::vector<Component> comps;
  tlv::Reader reader(e.value);
  while (!reader.atEnd()) {
    auto c = reader.next();
    comps.emplace_back(c.type, Bytes(c.value.begin(), c.value.end()));
  }
  return Name(std::move(comps));
}

Name
Name::wireDecode(ByteView wire)
{
  return wireDecode(tlv::parseSingle(wire, tlv::Name));
}

std::strong_ordering
Name::operator<=>(const Name& other) const
{
  return std::lexicographical_compare_three_way(m_components.begin(), m_components.end(),
                                                other.m_components.begin(), other.m_components.end());
}

std::ostream&
operator<<(std::ostream& os, const Name& name)
{
  return os << name.toUri();
}

std::ostream&
operator<<(std::ostream& os, const Component& c)
{
  return os << c.toUri();
}

} // namespace ndncert

size_t
std::hash<ndncert::Name>::operator()(const ndncert::Name& name) const noexcept
{
  size_t h = 1469598103934665603ULL;
  for (const auto& c : name) {
    h = (h ^ c.type()) * 1099511628211ULL;
    for (auto b : c.value()) {
      h = (h ^ b) * 1099511628211ULL;
    }
    h = (h ^ 0xFF) * 1099511628211ULL;
  }
  return h;
}
