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

#ifndef NDNCERT_CHALLENGE_ASSERTION_TOKEN_TABLE_HPP
#define NDNCERT_CHALLENGE_ASSERTION_TOKEN_TABLE_HPP

#include "ndncert/encoding/name.hpp"

#include <filesystem>
#include <map>
#include <mutex>

namespace ndncert {

/// Default lifetime of a provisioned token.
constexpr Seconds DEFAULT_TOKEN_LIFETIME{600};

/**
 * @brief Short-lived secret codes handed out by a name authority, keyed by identity.
 *
 * At most one token per identity; inserting again replaces it. A token verifies at
 * most once and never after its expiry.
 *
 * With a backing file the table is shared between processes (the authority tool
 * writes, the issuer consumes). Every operation re-reads the file under an exclusive
 * lock on "<file>.lock" and rewrites it atomically. File format, one token per line:
 * `<identity-uri> TAB <code> TAB <expiry-unix-ms>`.
 */
class AssertionTokenTable
{
public:
  struct Token
  {
    std::string code;
    TimePoint expiry;
  };

  enum class ConsumeResult {
    Consumed, ///< code matched; the token is gone
    Mismatch, ///< a live token exists but the code differs
    NoToken,  ///< nothing live for this identity
  };

  /// In-memory table.
  AssertionTokenTable() = default;

  /// @throw Error(StorageFailure) if the file exists but cannot be parsed
  explicit
  AssertionTokenTable(std::filesystem::path file);

  /**
   * @brief Provisions a token for @p identity.
   * @param code explicit code; when absent a random 6-digit code is drawn
   * @return the code
   * @throw Error(InvalidArgument) for an empty identity or a code with tabs/newlines
   */
  std::string
  insert(const Name& identity, TimePoint expiry, std::optional<std::string> code = std::nullopt);

  bool
  has(const Name& identity, TimePoint now) const;

  /// Atomically removes the live token for @p identity if @p code matches (constant time).
  ConsumeResult
  consume(const Name& identity, std::string_view code, TimePoint now);

  /// Drops the token for @p identity, live or not.
  void
  revoke(const Name& identity);

  /// Live tokens only.
  size_t
  size(TimePoint now) const;

private:
  using Map = std::map<Name, Token>;

  /// Runs @p fn with the current table under the lock; writes back when it returns true.
  template<typename Fn>
  auto
  withTable(Fn&& fn) const;

  Map
  load() const;

  void
  store(const Map& tokens) const;

private:
  std::filesystem::path m_file;
  mutable std::mutex m_mutex;
  mutable Map m_memory;
};

/// Uniform random 6-digit decimal code.
std::string
generateSecretCode();

} // namespace ndncert

#endif // NDNCERT_CHALLENGE_ASSERTION_TOKEN_TABLE_HPP
