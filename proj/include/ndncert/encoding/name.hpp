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

#ifndef NDNCERT_ENCODING_NAME_HPP
#define NDNCERT_ENCODING_NAME_HPP

#include "ndncert/encoding/tlv.hpp"

#include <compare>
#include <optional>
#include <ostream>

namespace ndncert {

class Component
{
public:
  Component() = default;

  Component(uint32_t type, Bytes value)
    : m_type(type)
    , m_value(std::move(value))
  {
  }

  /// Generic component holding the bytes of @p text verbatim (no unescaping).
  static Component
  fromString(std::string_view text);

  /// Parses one URI segment, e.g. "alice", "%00%01", "sha256digest=ab...".
  static Component
  fromUri(std::string_view segment);

  static Component
  fromNumber(uint64_t n);

  uint32_t
  type() const noexcept
  {
    return m_type;
  }

  const Bytes&
  value() const noexcept
  {
    return m_value;
  }

  bool
  isGeneric() const noexcept
  {
    return m_type == tlv::GenericNameComponent;
  }

  bool
  isDigest() const noexcept
  {
    return m_type == tlv::ImplicitSha256DigestComponent ||
           m_type == tlv::ParametersSha256DigestComponent;
  }

  /// Decimal value of a generic component, if it is a canonical decimal number.
  std::optional<uint64_t>
  toNumber() const;

  std::string
  toUri() const;

  Bytes
  wireEncode() const;

  /// NDN canonical order: type, then length, then bytes.
  std::strong_ordering
  operator<=>(const Component& other) const;

  bool
  operator==(const Component& other) const = default;

private:
  uint32_t m_type = tlv::GenericNameComponent;
  Bytes m_value;
};

/**
 * @brief Hierarchical NDN name.
 *
 * Text form is '/'-separated; bytes outside printable ASCII, plus '/', '%' and '=',
 * are percent-escaped. An empty generic component is written "...".
 */
class Name
{
public:
  Name() = default;

  explicit
  Name(std::vector<Component> components)
    : m_components(std::move(components))
  {
  }

  /// Parses a URI; throws Error(MalformedName) on bad escapes.
  Name(std::string_view uri);

  Name(const char* uri)
    : Name(std::string_view(uri))
  {
  }

  Name(const std::string& uri)
    : Name(std::string_view(uri))
  {
  }

  size_t
  size() const noexcept
  {
    return m_components.size();
  }

  bool
  empty() const noexcept
  {
    return m_components.empty();
  }

  /// Negative indices count from the end.
  const Component&
  at(ptrdiff_t i) const;

  const Component&
  operator[](ptrdiff_t i) const
  {
    return at(i);
  }

  /// First @p n components; negative @p n drops -n components from the end.
  Name
  getPrefix(ptrdiff_t n) const;

  Name
  getSubName(size_t start, size_t count = static_cast<size_t>(-1)) const;

  Name&
  append(Component c);

  Name&
  append(std::string_view text)
  {
    return append(Component::fromString(text));
  }

  Name&
  append(const char* text)
  {
    return append(Component::fromString(text));
  }

  Name&
  append(const std::string& text)
  {
    return append(Component::fromString(text));
  }

  Name&
  append(const Name& suffix);

  bool
  isPrefixOf(const Name& other) const noexcept;

  /// Copy without trailing digest components.
  Name
  withoutDigest() const;

  std::string
  toUri() const;

  /// Encoded Name TLV (type 7).
  Bytes
  wireEncode() const;

  static Name
  wireDecode(const tlv::Element& e);

  static Name
  wireDecode(ByteView wire);

  const std::vector<Component>&
  components() const noexcept
  {
    return m_components;
  }

  auto begin() const noexcept { return m_components.begin(); }
  auto end() const noexcept { return m_components.end(); }

  std::strong_ordering
  operator<=>(const Name& other) const;

  bool
  operator==(const Name& other) const = default;

private:
  std::vector<Component> m_components;
};

std::ostream&
operator<<(std::ostream& os, const Name& name);

std::ostream&
operator<<(std::ostream& os, const Component& c);

} // namespace ndncert

template<>
struct std::hash<ndncert::Name>
{
  size_t
  operator()(const ndncert::Name& name) const noexcept;
};

#endif // NDNCERT_ENCODING_NAME_HPP
