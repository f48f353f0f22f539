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

#ifndef NDNCERT_ENCODING_PACKET_HPP
#define NDNCERT_ENCODING_PACKET_HPP

#include "ndncert/encoding/name.hpp"

#include <array>
#include <optional>
#include <variant>

namespace ndncert {

using Digest = std::array<uint8_t, 32>;
using InterestNonce = std::array<uint8_t, 8>;

enum class SignatureType : uint64_t {
  DigestSha256 = 0,
  EcdsaSha256 = 3,
};

/// Certificate validity, carried inside SignatureInfo at one-second resolution.
struct ValidityPeriod
{
  TimePoint notBefore;
  TimePoint notAfter;

  /// Both ends truncated to whole seconds, as they will be on the wire.
  static ValidityPeriod
  make(TimePoint notBefore, TimePoint notAfter);

  Clock::duration
  duration() const
  {
    return notAfter - notBefore;
  }

  /// notBefore - tolerance <= t <= notAfter
  bool
  contains(TimePoint t, Clock::duration notBeforeTolerance = Clock::duration::zero()) const
  {
    return t + notBeforeTolerance >= notBefore && t <= notAfter;
  }

  Bytes
  wireEncode() const;

  static ValidityPeriod
  wireDecode(const tlv::Element& e);

  bool
  operator==(const ValidityPeriod&) const = default;
};

/// "YYYYMMDDTHHMMSS" in UTC.
std::string
toIsoString(TimePoint tp);

TimePoint
fromIsoString(std::string_view s);

class SignatureInfo
{
public:
  SignatureInfo() = default;

  explicit
  SignatureInfo(SignatureType type, std::optional<Name> keyLocator = std::nullopt)
    : m_type(type)
    , m_keyLocator(std::move(keyLocator))
  {
  }

  SignatureType
  type() const noexcept
  {
    return m_type;
  }

  void
  setType(SignatureType t) noexcept
  {
    m_type = t;
  }

  const std::optional<Name>&
  keyLocator() const noexcept
  {
    return m_keyLocator;
  }

  void
  setKeyLocator(std::optional<Name> name)
  {
    m_keyLocator = std::move(name);
  }

  const std::optional<ValidityPeriod>&
  validityPeriod() const noexcept
  {
    return m_validity;
  }

  void
  setValidityPeriod(std::optional<ValidityPeriod> v)
  {
    m_validity = std::move(v);
  }

  Bytes
  wireEncode() const;

  static SignatureInfo
  wireDecode(const tlv::Element& e);

  bool
  operator==(const SignatureInfo&) const = default;

private:
  SignatureType m_type = SignatureType::DigestSha256;
  std::optional<Name> m_keyLocator;
  std::optional<ValidityPeriod> m_validity;
};

class Data;

/**
 * @brief Interest packet.
 *
 * Every Interest carries an 8-byte nonce and a millisecond timestamp; together with
 * ApplicationParameters and SignatureInfo they form the signed portion.
 */
class Interest
{
public:
  Interest() = default;

  /// Fresh random nonce; timestamp left at 0 until set.
  explicit
  Interest(Name name);

  const Name&
  name() const noexcept
  {
    return m_name;
  }

  void
  setName(Name name)
  {
    m_name = std::move(name);
  }

  bool
  canBePrefix() const noexcept
  {
    return m_canBePrefix;
  }

  Interest&
  setCanBePrefix(bool v) noexcept
  {
    m_canBePrefix = v;
    return *this;
  }

  bool
  mustBeFresh() const noexcept
  {
    return m_mustBeFresh;
  }

  Interest&
  setMustBeFresh(bool v) noexcept
  {
    m_mustBeFresh = v;
    return *this;
  }

  const std::optional<Bytes>&
  applicationParameters() const noexcept
  {
    return m_appParams;
  }

  void
  setApplicationParameters(std::optional<Bytes> params)
  {
    m_appParams = std::move(params);
  }

  const InterestNonce&
  nonce() const noexcept
  {
    return m_nonce;
  }

  void
  setNonce(const InterestNonce& nonce) noexcept
  {
    m_nonce = nonce;
  }

  void
  refreshNonce();

  uint64_t
  timestamp() const noexcept
  {
    return m_timestamp;
  }

  void
  setTimestamp(uint64_t ms) noexcept
  {
    m_timestamp = ms;
  }

  const std::optional<SignatureInfo>&
  signatureInfo() const noexcept
  {
    return m_sigInfo;
  }

  void
  setSignatureInfo(std::optional<SignatureInfo> info)
  {
    m_sigInfo = std::move(info);
  }

  const std::optional<Bytes>&
  signatureValue() const noexcept
  {
    return m_sigValue;
  }

  void
  setSignatureValue(std::optional<Bytes> value)
  {
    m_sigValue = std::move(value);
  }

  /**
   * @brief Bytes covered by the signature.
   *
   * Name (digest components stripped) || ApplicationParameters || SignatureNonce ||
   * SignatureTime || SignatureInfo, each as an encoded TLV.
   * @throw Error(MissingField) if SignatureInfo is absent
   */
  Bytes
  signedPortion() const;

  /// SHA-256 over every encoded element after the Name/selector block.
  Digest
  computeParametersDigest() const;

  /// Replaces any trailing digest component with a fresh ParametersSha256DigestComponent.
  void
  appendParametersDigest();

  /// True when the name ends in a ParametersSha256DigestComponent matching the body.
  bool
  hasValidParametersDigest() const;

  /// Exact name match, prefix match under CanBePrefix, or full-name match on an implicit digest.
  bool
  matchesData(const Data& data) const;

  Bytes
  wireEncode() const;

  static Interest
  wireDecode(ByteView wire);

  static Interest
  wireDecode(const tlv::Element& e);

  bool
  operator==(const Interest&) const = default;

private:
  Bytes
  encodeBody() const;

private:
  Name m_name;
  bool m_canBePrefix = false;
  bool m_mustBeFresh = false;
  std::optional<Bytes> m_appParams;
  InterestNonce m_nonce{};
  uint64_t m_timestamp = 0;
  std::optional<SignatureInfo> m_sigInfo;
  std::optional<Bytes> m_sigValue;
};

class Data
{
public:
  Data() = default;

  explicit
  Data(Name name)
    : m_name(std::move(name))
  {
  }

  const Name&
  name() const noexcept
  {
    return m_name;
  }

  void
  setName(Name name)
  {
    m_name = std::move(name);
  }

  uint64_t
  contentType() const noexcept
  {
    return m_contentType;
  }

  void
  setContentType(uint64_t t) noexcept
  {
    m_contentType = t;
  }

  const std::optional<Milliseconds>&
  freshnessPeriod() const noexcept
  {
    return m_freshness;
  }

  void
  setFreshnessPeriod(std::optional<Milliseconds> p) noexcept
  {
    m_freshness = p;
  }

  const Bytes&
  content() const noexcept
  {
    return m_content;
  }

  void
  setContent(Bytes content)
  {
    m_content = std::move(content);
  }

  const SignatureInfo&
  signatureInfo() const noexcept
  {
    return m_sigInfo;
  }

  SignatureInfo&
  signatureInfo() noexcept
  {
    return m_sigInfo;
  }

  void
  setSignatureInfo(SignatureInfo info)
  {
    m_sigInfo = std::move(info);
  }

  const Bytes&
  signatureValue() const noexcept
  {
    return m_sigValue;
  }

  void
  setSignatureValue(Bytes value)
  {
    m_sigValue = std::move(value);
  }

  /// Name || MetaInfo || Content || SignatureInfo, as encoded TLVs.
  Bytes
  signedPortion() const;

  /// @throw Error(MissingField) when the packet is unsigned
  Bytes
  wireEncode() const;

  static Data
  wireDecode(ByteView wire);

  static Data
  wireDecode(const tlv::Element& e);

  /// Name with the implicit SHA-256 digest of the encoded packet appended.
  Name
  fullName() const;

  bool
  operator==(const Data&) const = default;

private:
  Name m_name;
  uint64_t m_contentType = tlv::ContentType_Blob;
  std::optional<Milliseconds> m_freshness;
  Bytes m_content;
  SignatureInfo m_sigInfo;
  Bytes m_sigValue;
};

using Packet = std::variant<Interest, Data>;

/**
 * @brief Decodes one Interest or Data.
 *
 * When @p consumed is null the buffer must hold exactly one packet; otherwise the
 * number of bytes the outer TLV occupied is stored there and trailing bytes are left alone.
 */
Packet
decodePacket(ByteView bytes, size_t* consumed = nullptr);

/// SHA-256 over a complete encoded packet.
Digest
computeImplicitDigest(ByteView packet);

} // namespace ndncert

#endif // NDNCERT_ENCODING_PACKET_HPP
