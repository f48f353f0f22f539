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

#ifndef NDNCERT_CERT_NAME_PATTERN_HPP
#define NDNCERT_CERT_NAME_PATTERN_HPP

#include "ndncert/encoding/name.hpp"

namespace ndncert {

/// Component-wise name pattern.
///
/// Written like a name URI where a component "*" matches exactly one component and
/// "**" matches zero or more. Any other component, including escaped forms such as
/// "%2A", matches literally. Example: "/ndn/*" matches "/ndn/alice" but not "/ndn"
/// or "/ndn/alice/laptop"; "/ndn/**" matches all three.
class NamePattern
{
public:
  /// @throw Error(InvalidArgument) for malformed text
  explicit
  NamePattern(std::string_view text);

  bool
  matches(const Name& name) const;

  const std::string&
  toString() const noexcept
  {
    return m_text;
  }

  bool
  operator==(const NamePattern& other) const
  {
    return m_text == other.m_text;
  }

private:
  enum class Kind { Literal, One, Any };

  struct Element
  {
    Kind kind;
    Component literal;
  };

  std::string m_text;
  std::vector<Element> m_elements;
};

} // namespace ndncert

#endif // NDNCERT_CERT_NAME_PATTERN_HPP
