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

#include "ndncert/encoding/packet.hpp"
#include "ndncert/security/crypto.hpp"

#include <cstdio>
#include <ctime>

namespace ndncert {

std::string
toIsoString(TimePoint tp)
{
  std::time_t t = Clock::to_time_t(std::chrono::time_point_cast<Seconds>(tp));
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d%02d%02dT%02d%02d%02d", tm.tm_year + 1900, tm.tm_mon + 1,
                tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
  return buf;
}

TimePoint
fromIsoString(std::string_view s)
{
  if (s.size() != 15 || s[8] != 'T') {
    throw Error(ErrorCode::MalformedTlv, "timestamp must be YYYYMMDDTHHMMSS");
  }
  auto num = [&] (size_t pos, size_t len) {
    int v = 0;
    for (size_t i = pos; i < pos + len; ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw Error(ErrorCode::MalformedTlv, "non-digit in timestamp");
      }
      v = v * 10 + (s[i] - '0');
    }
    return v;
  };
  std::tm tm{};
  tm.tm_year = num(0, 4) - 1900;
  tm.tm_mon = num(4, 2) - 1;
  tm.tm_mday = num(6, 2);
  tm.tm_hour = num(9, 2);
  tm.tm_min = num(11, 2);
  tm.tm_sec = num(13, 2);
  if (tm.tm_mon > 11 || tm.tm_mday < 1 || tm.tm_mday > 31 || tm.tm_hour > 23 || tm.tm_min > 59 ||
      tm.tm_sec > 60) {
    throw Error(ErrorCode::MalformedTlv, "timestamp field out of range");
  }
  return Clock::from_time_t(timegm(&tm));
}

ValidityPeriod
ValidityPeriod::make(TimePoint notBefore, TimePoint notAfter)
{
  return {std::chrono::floor<Seconds>(notBefore), std::chrono::floor<Seconds>(notAfter)};
}

Bytes
ValidityPeriod::wireEncode() const
{
  tlv::Encoder enc;
  enc.appendNested(tlv::ValidityPeriod, [this] (tlv::Encoder& inner) {
    inner.appendTlv(tlv::NotBefore, toIsoString(notBefore));
    inner.appendTlv(tlv::NotAfter, toIsoString(notAfter));
  });
  return enc.release();
}

ValidityPeriod
ValidityPeriod::wireDecode(const tlv::Element& e)
{
  tlv::ElementMap m(e.value, {tlv::NotBefore, tlv::NotAfter});
  ValidityPeriod v;
  v.notBefore = fromIsoString(asString(m.require(tlv::NotBefore).value));
  v.notAfter = fromIsoString(asString(m.require(tlv::NotAfter).value));
  return v;
}

Bytes
SignatureInfo::wireEncode() const
{
  tlv::Encoder enc;
  enc.appendNested(tlv::SignatureInfo, [this] (tlv::Encoder& inner) {
    inner.appendNonNegativeInteger(tlv::SignatureType, static_cast<uint64_t>(m_type));
    if (m_keyLocator) {
      inner.appendTlv(tlv::KeyLocator, m_keyLocator->wireEncode());
    }
    if (m_validity) {
      inner.appendRaw(m_validity->wireEncode());
    }
  });
  return enc.release();
}

SignatureInfo
SignatureInfo::wireDecode(const tlv::Element& e)
{
  tlv::ElementMap m(e.value, {tlv::SignatureType, tlv::KeyLocator, tlv::ValidityPeriod});
  SignatureInfo info;
  auto type = tlv::readNonNegativeInteger(m.require(tlv::SignatureType));
  if (type != static_cast<uint64_t>(SignatureType::DigestSha256) &&
      type != static_cast<uint64_t>(SignatureType::EcdsaSha256)) {
    throw Error(ErrorCode::MalformedTlv, "unsupported SignatureType " + std::to_string(type));
  }
  info.m_type = static_cast<SignatureType>(type);
  if (auto kl = m.find(tlv::KeyLocator)) {
    info.m_keyLocator = Name::wireDecode(kl->value);
  }
  if (auto vp = m.find(tlv::ValidityPeriod)) {
    info.m_validity = ValidityPeriod::wireDecode(*vp);
  }
  return info;
}

Interest::Interest(Name name)
  : m_name(std::move(name))
{
  refreshNonce();
}

void
Interest::refreshNonce()
{
  crypto::fillRandom(m_nonce);
}

Bytes
Interest::encodeBody() const
{
  tlv::Encoder enc;
  if (m_appParams) {
    enc.appendTlv(tlv::ApplicationParameters, *m_appParams);
  }
  enc.appendTlv(tlv::SignatureNonce, m_nonce);
  enc.appendNonNegativeInteger(tlv::SignatureTime, m_timestamp);
  if (m_sigInfo) {
    enc.appendRaw(m_sigInfo->wireEncode());
  }
  if (m_sigValue) {
    enc.appendTlv(tlv::SignatureValue, *m_sigValue);
  }
  return enc.release();
}

Bytes
Interest::signedPortion() const
{
  if (!m_sigInfo) {
    throw Error(ErrorCode::MissingField, "Interest has no SignatureInfo");
  }
  tlv::Encoder enc;
  enc.appendRaw(m_name.withoutDigest().wireEncode());
  if (m_appParams) {
    enc.appendTlv(tlv::ApplicationParameters, *m_appParams);
  }
  enc.appendTlv(tlv::SignatureNonce, m_nonce);
  enc.appendNonNegativeInteger(tlv::SignatureTime, m_timestamp);
  enc.appendRaw(m_sigInfo->wireEncode());
  return enc.release();
}

Digest
Interest::computeParametersDigest() const
{
  return crypto::sha256(encodeBody());
}

void
Interest::appendParametersDigest()
{
  auto digest = computeParametersDigest();
  m_name = m_name.withoutDigest();
  m_name.append(Component(tlv::ParametersSha256DigestComponent, Bytes(digest.begin(), digest.end())));
}

bool
Interest::hasValidParametersDigest() const
{
  if (m_name.empty() || m_name[-1].type() != tlv::ParametersSha256DigestComponent) {
    return false;
  }
  auto digest = computeParametersDigest();
  return crypto::constantTimeEquals(m_name[-1].value(), digest);
}

bool
Interest::matchesData(const Data& data) const
{
  if (!m_name.empty() && m_name[-1].type() == tlv::ImplicitSha256DigestComponent) {
    return m_name == data.fullName();
  }
  if (m_canBePrefix) {
    return m_name.isPrefixOf(data.name());
  }
  return m_name == data.name();
}

Bytes
Interest::wireEncode() const
{
  if (m_sigValue && !m_sigInfo) {
    throw Error(ErrorCode::MissingField, "SignatureValue without SignatureInfo");
  }
  tlv::Encoder enc;
  enc.appendNested(tlv::Interest, [this] (tlv::Encoder& inner) {
    inner.appendRaw(m_name.wireEncode());
    if (m_canBePrefix) {
      inner.appendEmpty(tlv::CanBePrefix);
    }
    if (m_mustBeFresh) {
      inner.appendEmpty(tlv::MustBeFresh);
    }
    inner.appendRaw(encodeBody());
  });
  return enc.release();
}

Interest
Interest::wireDecode(ByteView wire)
{
  return wireDecode(tlv::parseSingle(wire, tlv::Interest));
}

Interest
Interest::wireDecode(const tlv::Element& e)
{
  if (e.type != tlv::Interest) {
    throw Error(ErrorCode::MalformedTlv, "expected Interest TLV");
  }
  tlv::ElementMap m(e.value, {tlv::Name, tlv::CanBePrefix, tlv::MustBeFresh,
                              tlv::ApplicationParameters, tlv::SignatureNonce, tlv::SignatureTime,
                              tlv::SignatureInfo, tlv::SignatureValue});
  Interest i;
  i.m_name = Name::wireDecode(m.require(tlv::Name));
  i.m_canBePrefix = m.find(tlv::CanBePrefix) != nullptr;
  i.m_mustBeFresh = m.find(tlv::MustBeFresh) != nullptr;
  if (auto p = m.find(tlv::ApplicationParameters)) {
    i.m_appParams = Bytes(p->value.begin(), p->value.end());
  }
  const auto& nonce = m.require(tlv::SignatureNonce);
  if (nonce.value.size() != i.m_nonce.size()) {
    throw Error(ErrorCode::MalformedTlv, "Interest nonce must be 8 bytes");
  }
  std::copy(nonce.value.begin(), nonce.value.end(), i.m_nonce.begin());
  i.m_timestamp = tlv::readNonNegativeInteger(m.require(tlv::SignatureTime));
  if (auto si = m.find(tlv::SignatureInfo)) {
    i.m_sigInfo = SignatureInfo::wireDecode(*si);
  }
  if (auto sv = m.find(tlv::SignatureValue)) {
    if (!i.m_sigInfo) {
      throw Error(ErrorCode::MissingField, "SignatureValue without SignatureInfo");
    }
    i.m_sigValue = Bytes(sv->value.begin(), sv->value.end());
  }
  return i;
}

Bytes
Data::signedPortion() const
{
  tlv::Encoder enc;
  enc.appendRaw(m_name.wireEncode());
  if (m_contentType != tlv::ContentType_Blob || m_freshness) {
    enc.appendNested(tlv::MetaInfo, [this] (tlv::Encoder& meta) {
      if (m_contentType != tlv::ContentType_Blob) {
        meta.appendNonNegativeInteger(tlv::ContentType, m_contentType);
      }
      if (m_freshness) {
        meta.appendNonNegativeInteger(tlv::FreshnessPeriod, static_cast<uint64_t>(m_freshness->count()));
      }
    });
  }
  enc.appendTlv(tlv::Content, m_content);
  enc.appendRaw(m_sigInfo.wireEncode());
  return enc.release();
}

Bytes
Data::wireEncode() const
{
  if (m_sigValue.empty()) {
    throw Error(ErrorCode::MissingField, "Data has no SignatureValue");
  }
  Bytes body = signedPortion();
  tlv::Encoder inner;
  inner.appendRaw(body);
  inner.appendTlv(tlv::SignatureValue, m_sigValue);
  return tlv::encodeTlv(tlv::Data, inner.bytes());
}

Data
Data::wireDecode(ByteView wire)
{
  return wireDecode(tlv::parseSingle(wire, tlv::Data));
}

Data
Data::wireDecode(const tlv::Element& e)
{
  if (e.type != tlv::Data) {
    throw Error(ErrorCode::MalformedTlv, "expected Data TLV");
  }
  tlv::ElementMap m(e.value, {tlv::Name, tlv::MetaInfo, tlv::Content, tlv::SignatureInfo,
                              tlv::SignatureValue});
  Data d;
  d.m_name = Name::wireDecode(m.require(tlv::Name));
  if (auto meta = m.find(tlv::MetaInfo)) {
    tlv::ElementMap mm(meta->value, {tlv::ContentType, tlv::FreshnessPeriod});
    if (auto ct = mm.find(tlv::ContentType)) {
      d.m_contentType = tlv::readNonNegativeInteger(*ct);
    }
    if (auto fp = mm.find(tlv::FreshnessPeriod)) {
      d.m_freshness = Milliseconds(tlv::readNonNegativeInteger(*fp));
    }
  }
  if (auto c = m.find(tlv::Content)) {
    d.m_content.assign(c->value.begin(), c->value.end());
  }
  d.m_sigInfo = SignatureInfo::wireDecode(m.require(tlv::SignatureInfo));
  const auto& sv = m.require(tlv::SignatureValue);
  if (sv.value.empty()) {
    throw Error(ErrorCode::MissingField, "empty SignatureValue");
  }
  d.m_sigValue.assign(sv.value.begin(), sv.value.end());
  return d;
}

Name
Data::fullName() const
{
  auto digest = computeImplicitDigest(wireEncode());
  Name full(m_name);
  full.append(Component(tlv::ImplicitSha256DigestComponent, Bytes(digest.begin(), digest.end())));
  return full;
}

Packet
decodePacket(ByteView bytes, size_t* consumed)
{
  tlv::Reader reader(bytes);
  tlv::Element e = reader.next();
  if (consumed != nullptr) {
    *consumed = reader.position();
  }
  else if (!reader.atEnd()) {
    throw Error(ErrorCode::MalformedTlv, "trailing bytes after packet");
  }
  switch (e.type) {
    case tlv::Interest:
      return Interest::wireDecode(e);
    case tlv::Data:
      return Data::wireDecode(e);
    default:
      throw Error(ErrorCode::MalformedTlv, "not an Interest or Data (type " + std::to_string(e.type) + ")");
  }
}

Digest
computeImplicitDigest(ByteView packet)
{
  return crypto::sha256(packet);
}

} // namespace ndncert
