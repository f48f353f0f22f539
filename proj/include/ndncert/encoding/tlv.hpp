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

#ifndef NDNCERT_ENCODING_TLV_HPP
#define NDNCERT_ENCODING_TLV_HPP

#include "ndncert/common.hpp"

#include <functional>
#include <initializer_list>
#include <optional>

namespace ndncert {
namespace tlv {

// Core NDN packet types
enum : uint32_t {
  ImplicitSha256DigestComponent   = 1,
  ParametersSha256DigestComponent = 2,
  Interest                        = 5,
  Data                            = 6,
  Name                            = 7,
  GenericNameComponent            = 8,
  MustBeFresh                     = 18,
  MetaInfo                        = 20,
  Content                         = 21,
  SignatureInfo                   = 22,
  SignatureValue                  = 23,
  ContentType                     = 24,
  FreshnessPeriod                 = 25,
  SignatureType                   = 27,
  KeyLocator                      = 28,
  CanBePrefix                     = 33,
  ApplicationParameters           = 36,
  ValidityPeriod                  = 253,
  NotBefore                       = 254,
  NotAfter                        = 255,
};

// Application range; all even so an older decoder may skip them.
enum : uint32_t {
  SignatureNonce     = 128,
  SignatureTime      = 130,
  EcdhPub            = 132,
  CertRequest        = 134,
  Salt               = 136,
  RequestId          = 138,
  ChallengeId        = 140,
  RequestStatus      = 142,
  ChallengeStatus    = 144,
  ParameterKey       = 146,
  ParameterValue     = 148,
  IssuedCertName     = 150,
  OfferedChallenge   = 152,
  Redirect           = 154,
  RedirectCaPrefix   = 156,
  RedirectCertName   = 158,
  InitializationVector = 160,
  EncryptedPayload   = 162,
  AuthenticationTag  = 164,
  ProfileVersion     = 166,
  NamePattern        = 168,
  MaxValidityPeriod  = 170,
  CaCertificate      = 172,
  CaPrefix           = 174,
  ErrorCode          = 176,
  ErrorInfo          = 178,
  RevocationRecord   = 180,
  RevocationReason   = 182,
  RevokedBy          = 184,
  SignerCertificate  = 186,
  LogRecord          = 188,
  LogSequence        = 190,
  LogRecordType      = 192,
  PayloadDigest      = 194,
  PrevHash           = 196,
  RecordHash         = 198,
};

enum ContentTypeValue : uint64_t {
  ContentType_Blob = 0,
  ContentType_Key  = 2,
};

/// NDN evolvability rule: types below 32 and odd types must be understood.
constexpr bool
isCritical(uint32_t type) noexcept
{
  return type < 32 || (type & 1) == 1;
}

size_t
sizeOfVarNumber(uint64_t n) noexcept;

void
writeVarNumber(Bytes& out, uint64_t n);

size_t
sizeOfNonNegativeInteger(uint64_t n) noexcept;

/// Appends TLVs to a growing buffer; always emits the shortest encodings.
class Encoder
{
public:
  Encoder&
  appendTlv(uint32_t type, ByteView value);

  Encoder&
  appendTlv(uint32_t type, std::string_view value)
  {
    return appendTlv(type, asBytes(value));
  }

  Encoder&
  appendNonNegativeInteger(uint32_t type, uint64_t value);

  Encoder&
  appendEmpty(uint32_t type);

  /// Appends already-encoded TLV bytes verbatim.
  Encoder&
  appendRaw(ByteView wire);

  /// Writes a TLV whose value is produced by @p fill.
  Encoder&
  appendNested(uint32_t type, const std::function<void(Encoder&)>& fill);

  const Bytes&
  bytes() const noexcept
  {
    return m_buf;
  }

  Bytes
  release() noexcept
  {
    return std::move(m_buf);
  }

private:
  Bytes m_buf;
};

Bytes
encodeTlv(uint32_t type, ByteView value);

/// A parsed TLV that views (does not own) the underlying buffer.
struct Element
{
  uint32_t type = 0;
  ByteView value;
  ByteView wire;
};

/// Sequential TLV reader; throws Error(Truncated) / Error(MalformedTlv).
class Reader
{
public:
  explicit
  Reader(ByteView buf) noexcept
    : m_buf(buf)
  {
  }

  bool
  atEnd() const noexcept
  {
    return m_pos >= m_buf.size();
  }

  Element
  next();

  size_t
  position() const noexcept
  {
    return m_pos;
  }

private:
  uint64_t
  readVarNumber();

  ByteView m_buf;
  size_t m_pos = 0;
};

/// Parses exactly one TLV occupying the whole of @p wire.
Element
parseSingle(ByteView wire);

/// Parses exactly one TLV of @p expectedType occupying the whole of @p wire.
Element
parseSingle(ByteView wire, uint32_t expectedType);

uint64_t
readNonNegativeInteger(const Element& e);

/**
 * @brief Children of a TLV value, indexed by type.
 *
 * Unknown critical types raise UnknownCriticalField, unknown non-critical
 * types are skipped, and a second occurrence of a type not listed as
 * repeatable raises DuplicateField.
 */
class ElementMap
{
public:
  ElementMap(ByteView value, std::initializer_list<uint32_t> known,
             std::initializer_list<uint32_t> repeatable = {});

  const Element*
  find(uint32_t type) const;

  const Element&
  require(uint32_t type) const;

  std::vector<Element>
  all(uint32_t type) const;

  /// All known children in wire order.
  const std::vector<Element>&
  elements() const noexcept
  {
    return m_elements;
  }

private:
  std::vector<Element> m_elements;
};

} // namespace tlv
} // namespace ndncert

#endif // NDNCERT_ENCODING_TLV_HPP
