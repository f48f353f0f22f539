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

#include "ndncert/protocol/profile.hpp"

#include <algorithm>

namespace ndncert {

bool
CaProfile::allowsIdentity(const Name& identity) const
{
  return std::any_of(namePatterns.begin(), namePatterns.end(),
                     [&] (const NamePattern& p) { return p.matches(identity); });
}

const RedirectRule*
CaProfile::findRedirect(const Name& identity) const
{
  for (const auto& r : redirects) {
    if (r.pattern.matches(identity)) {
      return &r;
    }
  }
  return nullptr;
}

Bytes
CaProfile::encode() const
{
  tlv::Encoder enc;
  enc.appendTlv(tlv::CaPrefix, caPrefix.wireEncode());
  enc.appendNonNegativeInteger(tlv::ProfileVersion, version);
  if (caCertificate) {
    enc.appendTlv(tlv::CaCertificate, caCertificate->wireEncode());
  }
  enc.appendNonNegativeInteger(tlv::MaxValidityPeriod, static_cast<uint64_t>(maxValidity.count()));
  for (const auto& c : challenges) {
    enc.appendTlv(tlv::OfferedChallenge, std::string_view(c));
  }
  for (const auto& p : namePatterns) {
    enc.appendTlv(tlv::NamePattern, std::string_view(p.toString()));
  }
  for (const auto& r : redirects) {
    enc.appendNested(tlv::Redirect, [&] (tlv::Encoder& inner) {
      inner.appendTlv(tlv::NamePattern, std::string_view(r.pattern.toString()));
      inner.appendTlv(tlv::RedirectCaPrefix, r.caPrefix.wireEncode());
      inner.appendTlv(tlv::RedirectCertName, r.certName.wireEncode());
    });
  }
  return enc.release();
}

CaProfile
CaProfile::decode(ByteView content)
{
  try {
    tlv::ElementMap fields(content, {tlv::CaPrefix, tlv::ProfileVersion, tlv::CaCertificate,
                                     tlv::MaxValidityPeriod, tlv::OfferedChallenge, tlv::NamePattern,
                                     tlv::Redirect},
                           {tlv::OfferedChallenge, tlv::NamePattern, tlv::Redirect});
    CaProfile p;
    p.caPrefix = Name::wireDecode(fields.require(tlv::CaPrefix).value);
    p.version = tlv::readNonNegativeInteger(fields.require(tlv::ProfileVersion));
    if (auto cert = fields.find(tlv::CaCertificate)) {
      p.caCertificate = Certificate::wireDecode(cert->value);
    }
    p.maxValidity = Seconds(static_cast<int64_t>(tlv::readNonNegativeInteger(fields.require(tlv::MaxValidityPeriod))));
    for (const auto& e : fields.all(tlv::OfferedChallenge)) {
      p.challenges.push_back(asString(e.value));
    }
    for (const auto& e : fields.all(tlv::NamePattern)) {
      p.namePatterns.emplace_back(asString(e.value));
    }
    for (const auto& e : fields.all(tlv::Redirect)) {
      tlv::ElementMap inner(e.value, {tlv::NamePattern, tlv::RedirectCaPrefix, tlv::RedirectCertName});
      p.redirects.push_back({NamePattern(asString(inner.require(tlv::NamePattern).value)),
                             Name::wireDecode(inner.require(tlv::RedirectCaPrefix).value),
                             Name::wireDecode(inner.require(tlv::RedirectCertName).value)});
    }
    return p;
  }
  catch (const Error& e) {
    throw Error(ErrorCode::MalformedPayload, "CA profile: " + e.detail());
  }
}

Name
makeProfileName(const Name& caPrefix, uint64_t version)
{
  return makeInfoPrefix(caPrefix).append(Component::fromNumber(version));
}

} // namespace ndncert
