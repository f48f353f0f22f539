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

#ifndef NDNCERT_PROTOCOL_MESSAGES_HPP
#define NDNCERT_PROTOCOL_MESSAGES_HPP

#include "ndncert/cert/certificate.hpp"

namespace ndncert {

using RequestId = std::array<uint8_t, 8>;

constexpr size_t MAX_PARAMETER_KEY_SIZE = 32;
constexpr size_t MAX_PARAMETER_VALUE_SIZE = 1024;

/// Issuer-side request status, also reported to the requester.
enum class RequestStatus : uint64_t {
  BeforeChallenge = 0,
  Challenge = 1,
  Success = 2,
  Failure = 3,
};

std::string_view
toString(RequestStatus status);

/// Wire parameter keys used by the built-in challenges.
namespace param {
inline constexpr std::string_view SELECTED_CHALLENGE = "selected-challenge";
inline constexpr std::string_view CODE = "code";
inline constexpr std::string_view EMAIL = "email";
inline constexpr std::string_view CERT = "cert";
inline constexpr std::string_view PROOF = "proof";
inline constexpr std::string_view NONCE = "nonce";
inline constexpr std::string_view REMAINING_TRIES = "remaining-tries";
inline constexpr std::string_view EXPIRES_AT = "expires-at";
} // namespace param

/// Ordered key/value parameters carried inside the encrypted payload.
class ParameterMap
{
public:
  /// @throw Error(MalformedParams) for oversized or duplicate keys, or oversized values
  ParameterMap&
  set(std::string_view key, ByteView value);

  ParameterMap&
  set(std::string_view key, std::string_view value)
  {
    return set(key, asBytes(value));
  }

  const Bytes*
  find(std::string_view key) const;

  std::optional<std::string>
  getString(std::string_view key) const;

  /// @throw Error(MissingParameter)
  const Bytes&
  require(std::string_view key) const;

  const std::vector<std::pair<std::string, Bytes>>&
  entries() const noexcept
  {
    return m_entries;
  }

  bool
  empty() const noexcept
  {
    return m_entries.empty();
  }

  bool
  operator==(const ParameterMap&) const = default;

private:
  std::vector<std::pair<std::string, Bytes>> m_entries;
};

// ---- names ---------------------------------------------------------------------------------

/// <ca>/CA/NEW
Name
makeNewName(const Name& caPrefix);

/// <ca>/CA/CHALLENGE/<request-id>
Name
makeChallengeName(const Name& caPrefix, const RequestId& id);

/// <ca>/CA/INFO
Name
makeInfoPrefix(const Name& caPrefix);

/// <ca>/CA/INFO/32=metadata
Name
makeInfoMetadataName(const Name& caPrefix);

/// <ca>/CA/REVOKE
Name
makeRevokeName(const Name& caPrefix);

/// <ca>/CA/REVOKED
Name
makeRevokedListPrefix(const Name& caPrefix);

enum class RequestKind { New, Challenge, Info, Revoke, RevokedList, Unknown };

/// Classifies an Interest name relative to @p caPrefix.
RequestKind
classifyRequest(const Name& caPrefix, const Name& interestName);

/// Request id carried in a CHALLENGE Interest name; throws Error(MalformedPayload).
RequestId
requestIdFromChallengeName(const Name& caPrefix, const Name& interestName);

// ---- NEW -----------------------------------------------------------------------------------

struct NewRequest
{
  Bytes ecdhPub;
  Certificate certRequest;

  Bytes
  encode() const;

  /// @throw Error(MalformedPayload), Error(InvalidPoint)
  static NewRequest
  decode(ByteView params);
};

struct RedirectEntry
{
  Name caPrefix;
  Name certName;

  bool
  operator==(const RedirectEntry&) const = default;
};

/// NEW reply: either a session offer or a redirect list.
struct NewResponse
{
  InterestNonce nonce{};
  Bytes ecdhPub;
  crypto::Salt salt{};
  RequestId requestId{};
  std::vector<std::string> challenges;
  std::vector<RedirectEntry> redirects;

  bool
  isRedirect() const noexcept
  {
    return !redirects.empty();
  }

  Bytes
  encode() const;

  /// @throw Error(MalformedPayload) unless exactly one of offer / redirect is present
  static NewResponse
  decode(ByteView content);
};

// ---- CHALLENGE -----------------------------------------------------------------------------

/// Plaintext of one encrypted CHALLENGE message, in either direction.
struct ChallengeMessage
{
  std::string challengeId;
  RequestStatus status = RequestStatus::BeforeChallenge;
  std::string challengeStatus;
  ParameterMap params;
  std::optional<Name> issuedCertName;

  Bytes
  encode() const;

  /// @throw Error(MalformedPayload), Error(MalformedParams)
  static ChallengeMessage
  decode(ByteView plaintext);

  bool
  operator==(const ChallengeMessage&) const = default;
};

/// Outer, unencrypted fields of a sealed message.
struct SealedPayload
{
  std::optional<InterestNonce> nonce; ///< present in replies
  RequestId requestId{};
  crypto::Iv iv{};
  Bytes ciphertext;
  crypto::Tag tag{};

  Bytes
  encode() const;

  static SealedPayload
  decode(ByteView wire);
};

// ---- errors --------------------------------------------------------------------------------

/// Content of an issuer error reply.
struct ErrorReply
{
  InterestNonce nonce{};
  ErrorCode code = ErrorCode::None;
  std::string info;

  Bytes
  encode() const;

  /// nullopt when @p content is not an error reply
  static std::optional<ErrorReply>
  tryDecode(ByteView content);
};

/// Throws Error(code, info) if @p data carries an ErrorReply.
void
throwIfErrorReply(const Data& data);

/// Reads the SignatureNonce that replies place first in their content.
std::optional<InterestNonce>
replyNonce(ByteView content);

} // namespace ndncert

#endif // NDNCERT_PROTOCOL_MESSAGES_HPP
