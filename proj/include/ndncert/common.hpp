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

#ifndef NDNCERT_COMMON_HPP
#define NDNCERT_COMMON_HPP

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ndncert {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

using Clock = std::chrono::system_clock;
using TimePoint = Clock::time_point;
using Milliseconds = std::chrono::milliseconds;
using Seconds = std::chrono::seconds;

/**
 * @brief Every failure the library can report.
 *
 * The numeric values are part of the wire format (issuer error replies carry them)
 * and of the CLI exit-code mapping, so new codes are only ever appended.
 */
enum class ErrorCode : uint32_t {
  None = 0,
  // wire codec
  Truncated,
  UnknownCriticalField,
  DuplicateField,
  MissingField,
  MalformedTlv,
  MalformedName,
  // crypto
  InvalidPoint,
  AuthenticationFailed,
  CryptoFailure,
  MalformedKey,
  // certificates
  MalformedCertName,
  ValidityTooLong,
  ClockSkew,
  InvalidValidity,
  // protocol
  BadSignature,
  Replayed,
  StaleTimestamp,
  MalformedPayload,
  UnknownRequestId,
  IvReplay,
  // challenges
  UnknownChallenge,
  MissingParameter,
  ChallengeExpired,
  OutOfAttempts,
  MalformedParams,
  // issuer
  NameNotAllowed,
  ChallengeFailed,
  Unauthorized,
  UnknownCert,
  AlreadyRevoked,
  StorageFailure,
  RenewDenied,
  // transport
  DuplicatePrefix,
  Timeout,
  BindError,
  // requester
  Unfetchable,
  UntrustedProfile,
  Redirected,
  IssuerError,
  ValidationFailed,
  // cli / config
  ConfigError,
  InvalidArgument,
};

std::string_view
toString(ErrorCode code);

std::ostream&
operator<<(std::ostream& os, ErrorCode code);

/// Parses the symbolic name produced by toString(); returns ErrorCode::None when unknown.
ErrorCode
errorCodeFromString(std::string_view name);

class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode
  code() const noexcept
  {
    return m_code;
  }

  /// Message without the code prefix.
  const std::string&
  detail() const noexcept
  {
    return m_detail;
  }

private:
  ErrorCode m_code;
  std::string m_detail;
};

/// Milliseconds since the Unix epoch.
uint64_t
toUnixMillis(TimePoint tp);

TimePoint
fromUnixMillis(uint64_t ms);

std::string
toHex(ByteView bytes);

Bytes
fromHex(std::string_view hex);

inline ByteView
asBytes(std::string_view s)
{
  return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

inline Bytes
toBytes(std::string_view s)
{
  auto v = asBytes(s);
  return {v.begin(), v.end()};
}

inline std::string
asString(ByteView b)
{
  return {reinterpret_cast<const char*>(b.data()), b.size()};
}

} // namespace ndncert

#endif // NDNCERT_COMMON_HPP
