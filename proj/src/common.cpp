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

#include "ndncert/common.hpp"
#include "ndncert/time-source.hpp"

#include <array>
#include <ostream>

namespace ndncert {

namespace {

constexpr std::array<std::string_view, 43> ERROR_NAMES = {
  "None",
  "Truncated", "UnknownCriticalField", "DuplicateField", "MissingField", "MalformedTlv",
  "MalformedName",
  "InvalidPoint", "AuthenticationFailed", "CryptoFailure", "MalformedKey",
  "MalformedCertName", "ValidityTooLong", "ClockSkew", "InvalidValidity",
  "BadSignature", "Replayed", "StaleTimestamp", "MalformedPayload", "UnknownRequestId",
  "IvReplay",
  "UnknownChallenge", "MissingParameter", "ChallengeExpired", "OutOfAttempts",
  "MalformedParams",
  "NameNotAllowed", "ChallengeFailed", "Unauthorized", "UnknownCert", "AlreadyRevoked",
  "StorageFailure", "RenewDenied",
  "DuplicatePrefix", "Timeout", "BindError",
  "Unfetchable", "UntrustedProfile", "Redirected", "IssuerError", "ValidationFailed",
  "ConfigError", "InvalidArgument",
};

static_assert(ERROR_NAMES.size() == static_cast<size_t>(ErrorCode::InvalidArgument) + 1);

} // namespace

std::string_view
toString(ErrorCode code)
{
  auto idx = static_cast<size_t>(code);
  return idx < ERROR_NAMES.size() ? ERROR_NAMES[idx] : std::string_view("Unknown");
}

std::ostream&
operator<<(std::ostream& os, ErrorCode code)
{
  return os << toString(code);
}

ErrorCode
errorCodeFromString(std::string_view name)
{
  for (size_t i = 0; i < ERROR_NAMES.size(); ++i) {
    if (ERROR_NAMES[i] == name) {
      return static_cast<ErrorCode>(i);
    }
  }
  return ErrorCode::None;
}

Error::Error(ErrorCode code, const std::string& what)
  : std::runtime_error(std::string(toString(code)) + ": " + what)
  , m_code(code)
  , m_detail(what)
{
}

uint64_t
toUnixMillis(TimePoint tp)
{
  auto ms = std::chrono::duration_cast<Milliseconds>(tp.time_since_epoch()).count();
  return ms < 0 ? 0 : static_cast<uint64_t>(ms);
}

TimePoint
fromUnixMillis(uint64_t ms)
{
  return TimePoint(std::chrono::duration_cast<Clock::duration>(Milliseconds(ms)));
}

std::string
toHex(ByteView bytes)
{
  static constexpr char DIGITS[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(DIGITS[b >> 4]);
    out.push_back(DIGITS[b & 0x0F]);
  }
  return out;
}

namespace {

int
hexValue(char c)
{
  if (c >= '0' && c <= '9')
    return c - '0';
  if (c >= 'a' && c <= 'f')
    return c - 'a' + 10;
  if (c >= 'A' && c <= 'F')
    return c - 'A' + 10;
  return -1;
}

} // namespace

Bytes
fromHex(std::string_view hex)
{
  if (hex.size() % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "odd-length hex string");
  }
  Bytes out;
  out.reserve(hex.size() / 2);
  for (size_t i = 0; i < hex.size(); i += 2) {
    int hi = hexValue(hex[i]);
    int lo = hexValue(hex[i + 1]);
    if (hi < 0 || lo < 0) {
      throw Error(ErrorCode::InvalidArgument, "invalid hex digit");
    }
    out.push_back(static_cast<uint8_t>((hi << 4) | lo));
  }
  return out;
}

TimeSource&
systemTimeSource()
{
  static SystemTimeSource instance;
  return instance;
}

uint64_t
MonotonicMillis::next(TimePoint now)
{
  uint64_t want = toUnixMillis(now);
  uint64_t last = m_last.load();
  uint64_t value;
  do {
    value = want > last ? want : last + 1;
  } while (!m_last.compare_exchange_weak(last, value));
  return value;
}

} // namespace ndncert
