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

#ifndef NDNCERT_CHALLENGE_CHALLENGE_MODULE_HPP
#define NDNCERT_CHALLENGE_CHALLENGE_MODULE_HPP

#include "ndncert/cert/validator.hpp"
#include "ndncert/protocol/messages.hpp"
#include "ndncert/time-source.hpp"

#include <filesystem>
#include <memory>

namespace ndncert {

/// Wire values of the challenge status string.
namespace challenge_status {
inline constexpr std::string_view NEED_CODE = "need-code";
inline constexpr std::string_view NEED_PROOF = "need-proof";
inline constexpr std::string_view SUCCESS = "success";
inline constexpr std::string_view FAILURE = "failure";
} // namespace challenge_status

struct ChallengeDescriptor
{
  std::string id;
  uint32_t maxAttempts = 3;
  Seconds timeLimit{300};
};

enum class ChallengeOutcome { NeedMore, Success, Failure };

/**
 * @brief Issuer-side progress of one challenge, owned by one request.
 *
 * The expected secret stays here; it is never copied into a reply.
 */
struct ChallengeState
{
  std::string challengeId;
  uint32_t round = 0;
  uint32_t remainingAttempts = 0;
  TimePoint deadline;
  Bytes secret;
  ChallengeOutcome outcome = ChallengeOutcome::NeedMore;
  std::string statusText;
  ErrorCode failureCode = ErrorCode::None;
  std::string failureInfo;
  bool tokenBacked = false;             ///< pin: secret comes from the assertion token table
  std::optional<std::string> email;     ///< email: where the code went
  std::optional<Certificate> presented; ///< possession: certificate under test

  void
  fail(ErrorCode code, std::string info);

  /// Overwrites the secret bytes.
  void
  eraseSecret();
};

/// What a challenge may look at besides the submitted parameters.
struct ChallengeContext
{
  Name identity; ///< identity of the requested certificate
  RequestId requestId{};
  TimePoint now;
  const TrustPolicy* policy = nullptr; ///< possession only
  CertificateFetcher fetch;
  RevocationSet revoked;
};

struct ChallengeStep
{
  ChallengeState state;
  ParameterMap reply; ///< parameters the requester gets back
};

/// Evidence handed to a naming-policy predicate after a challenge succeeded.
struct ChallengeEvidence
{
  std::string challengeId;
  std::optional<std::string> email;
  std::optional<Certificate> presented;
};

/// Extra naming policy: may refuse a requested name even after the challenge itself succeeded.
using NamePredicate = std::function<bool(const Name& requested, const ChallengeEvidence&)>;

/// Out-of-band code delivery, e.g. an email gateway; receives (address, code).
using CodeDelivery = std::function<void(const std::string& address, const std::string& code)>;

/// Appends `address TAB code TAB unix-ms` lines to @p outbox (created 0600, fsync'ed).
CodeDelivery
makeOutboxDelivery(std::filesystem::path outbox, TimeSource& clock = systemTimeSource());

/**
 * @brief Base class of identity-verification challenges.
 *
 * start() and proceed() handle the bookkeeping shared by every challenge (deadline,
 * attempt budget, terminal states, the naming predicate) and delegate the rest.
 * Submissions that are malformed or miss a parameter throw without touching the
 * state; wrong answers cost an attempt.
 */
class ChallengeModule
{
public:
  explicit
  ChallengeModule(ChallengeDescriptor descriptor);

  virtual
  ~ChallengeModule() = default;

  const ChallengeDescriptor&
  descriptor() const noexcept
  {
    return m_descriptor;
  }

  const std::string&
  id() const noexcept
  {
    return m_descriptor.id;
  }

  void
  setNamePredicate(NamePredicate predicate)
  {
    m_predicate = std::move(predicate);
  }

  /// @throw Error(MissingParameter), Error(MalformedParams)
  ChallengeStep
  start(const ChallengeContext& ctx, const ParameterMap& params) const;

  /**
   * @brief Feeds one round of requester input.
   *
   * Past the deadline the state fails with ChallengeExpired; running out of attempts
   * fails it with OutOfAttempts.
   * @throw Error(ChallengeFailed) if @p state is already terminal
   * @throw Error(MissingParameter), Error(MalformedParams)
   */
  ChallengeStep
  proceed(ChallengeState state, const ChallengeContext& ctx, const ParameterMap& params) const;

protected:
  virtual void
  doStart(ChallengeStep& step, const ChallengeContext& ctx, const ParameterMap& params) const = 0;

  virtual void
  doProceed(ChallengeStep& step, const ChallengeContext& ctx, const ParameterMap& params) const = 0;

  virtual ChallengeEvidence
  evidence(const ChallengeState& state) const;

  /// Compares @p submitted to the stored secret; charges an attempt on mismatch.
  void
  checkCode(ChallengeStep& step, std::string_view submitted) const;

  void
  succeed(ChallengeStep& step) const;

  void
  askAgain(ChallengeStep& step, std::string_view status) const;

private:
  void
  applyPredicate(ChallengeStep& step, const ChallengeContext& ctx) const;

private:
  ChallengeDescriptor m_descriptor;
  NamePredicate m_predicate;
};

/// Set of challenges an issuer offers, looked up by id.
class ChallengeRegistry
{
public:
  /// @throw Error(InvalidArgument) on a duplicate id
  void
  add(std::shared_ptr<const ChallengeModule> module);

  /// @throw Error(UnknownChallenge)
  const ChallengeModule&
  get(std::string_view id) const;

  bool
  contains(std::string_view id) const;

  std::vector<std::string>
  ids() const;

private:
  std::vector<std::shared_ptr<const ChallengeModule>> m_modules;
};

} // namespace ndncert

#endif // NDNCERT_CHALLENGE_CHALLENGE_MODULE_HPP
