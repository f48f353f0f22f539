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

#include "ndncert/cert/name-pattern.hpp"

namespace ndncert {

NamePattern::NamePattern(std::string_view text)
  : m_text(text)
{
  if (text.empty() || text.front() != '/') {
    throw Error(ErrorCode::InvalidArgument, "name pattern must start with '/': " + m_text);
  }
  size_t pos = 1;
  while (pos < text.size()) {
    auto end = text.find('/', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    auto segment = text.substr(pos, end - pos);
    if (segment == "*") {
      m_elements.push_back({Kind::One, {}});
    }
    else if (segment == "**") {
      m_elements.push_back({Kind::Any, {}});
    }
    else if (segment.empty()) {
      throw Error(ErrorCode::InvalidArgument, "empty component in name pattern " + m_text);
    }
    else {
      try {
        m_elements.push_back({Kind::Literal, Component::fromUri(segment)});
      }
      catch (const Error& e) {
        throw Error(ErrorCode::InvalidArgument, "bad name pattern " + m_text + ": " + e.detail());
      }
    }
    pos = end + 1;
  }
}

bool
NamePattern::matches(const Name& name) const
{
  // Glob matching with backtracking only at the most recent "**".
  size_t p = 0;
  size_t n = 0;
  std::optional<size_t> starP;
  size_t starN = 0;
  while (n < name.size()) {
    if (p < m_elements.size() && m_elements[p].kind == Kind::Any) {
      starP = p++;
      starN = n;
    }
    else if (p < m_elements.size() &&
             (m_elements[p].kind == Kind::One || m_elements[p].literal == name[n])) {
      ++p;
      ++n;
    }
    else if (starP) {
      p = *starP + 1;
      n = ++starN;
    }
    else {
      return false;
    }
  }
  while (p < m_elements.size() && m_elements[p].kind == Kind::Any) {
    ++p;
  }
  return p == m_elements.size();
}

} // namespace ndncert
