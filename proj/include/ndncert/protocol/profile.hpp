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

#ifndef NDNCERT_PROTOCOL_PROFILE_HPP
#define NDNCERT_PROTOCOL_PROFILE_HPP

#include "ndncert/cert/name-pattern.hpp"
#include "ndncert/protocol/messages.hpp"

namespace ndncert {

/// Delegation of a sub-namespace to another issuer.
struct RedirectRule
{
  NamePattern pattern;
  Name caPrefix;
  Name certName;

  bool
  operator==(const RedirectRule&) const = default;
};

/// What an issuer publishes under <ca>/CA/INFO.
struct CaProfile
{
  Name caPrefix;
  std::optional<Certificate> caCertificate;
  Seconds maxValidity{0};
  std::vector<std::string> challenges;
  std::vector<NamePattern> namePatterns;
  std::vector<RedirectRule> redirects;
  uint64_t version = 0;

  /// True when @p identity matches one of the name patterns.
  bool
  allowsIdentity(const Name& identity) const;

  /// First redirect whose pattern matches @p identity.
  const RedirectRule*
  findRedirect(const Name& identity) const;

  Bytes
  encode() const;

  /// @throw Error(MalformedPayload)
  static CaProfile
  decode(ByteView content);

  bool
  operator==(const CaProfile& other) const
  {
    return encode() == other.encode();
  }
};

/// <ca>/CA/INFO/<version>
Name
makeProfileName(const Name& caPrefix, uint64_t version);

} // namespace ndncert

#endif // NDNCERT_PROTOCOL_PROFILE_HPP
