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

#include "ndncert/challenge/challenge-module.hpp"
#include "ndncert/security/crypto.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cstring>

namespace ndncert {

void
ChallengeState::fail(ErrorCode code, std::string info)
{
  outcome = ChallengeOutcome::Failure;
  statusText = std::string(challenge_status::FAILURE);
  failureCode = code;
  failureInfo = std::move(info);
  eraseSecret();
}

void
ChallengeState::eraseSecret()
{
  crypto::secureErase(secret);
  secret.clear();
}

CodeDelivery
makeOutboxDelivery(std::filesystem::path outbox, TimeSource& clock)
{
  auto mutex = std::make_shared<std::mutex>();
  return [outbox = std::move(outbox), &clock, mutex] (const std::string& address, const std::string& code) {
    std::string line = address + "\t" + code + "\t" + std::to_string(toUnixMillis(clock.now())) + "\n";
    std::lock_guard lock(*mutex);
    int fd = ::open(outbox.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0600);
    if (fd < 0) {
      throw Error(ErrorCode::StorageFailure, "cannot open outbox " + outbox.string() + ": " + std::strerror(errno));
    }
    bool ok = ::write(fd, line.data(), line.size()) == static_cast<ssize_t>(line.size()) && ::fsync(fd) == 0;
    ::close(fd);
    if (!ok) {
      throw Error(ErrorCode::StorageFailure, "cannot write outbox " + outbox.string());
    }
  };
}

ChallengeModule::ChallengeModule(ChallengeDescriptor descriptor)
  : m_descriptor(std::move(descriptor))
{
  if (m_descriptor.id.empty() || m_descriptor.maxAttempts < 1 || m_descriptor.timeLimit <= Seconds::zero()) {
    throw Error(ErrorCode::InvalidArgument, "challenge needs an id, at least one attempt and a positive time limit");
  }
}

ChallengeStep
ChallengeModule::start(const ChallengeContext& ctx, const ParameterMap& params) const
{
  ChallengeStep step;
  step.state.challengeId = m_descriptor.id;
  step.state.round = 1;
  step.state.remainingAttempts = m_descriptor.maxAttempts;
  step.state.deadline = ctx.now + m_descriptor.timeLimit;
  doStart(step, ctx, params);
  applyPredicate(step, ctx);
  return step;
}

ChallengeStep
ChallengeModule::proceed(ChallengeState state, const ChallengeContext& ctx, const ParameterMap& params) const
{
  if (state.outcome != ChallengeOutcome::NeedMore) {
    throw Error(ErrorCode::ChallengeFailed, "challenge already finished");
  }
  ChallengeStep step{std::move(state), {}};
  if (ctx.now > step.state.deadline) {
    step.state.fail(ErrorCode::ChallengeExpired, "challenge deadline passed");
    return step;
  }
  ++step.state.round;
  doProceed(step, ctx, params);
  applyPredicate(step, ctx);
  return step;
}

ChallengeEvidence
ChallengeModule::evidence(const ChallengeState& state) const
{
  return {state.challengeId, std::nullopt, std::nullopt};
}

void
ChallengeModule::applyPredicate(ChallengeStep& step, const ChallengeContext& ctx) const
{
  if (step.state.outcome == ChallengeOutcome::Success && m_predicate &&
      !m_predicate(ctx.identity, evidence(step.state))) {
    step.reply = {};
    step.state.fail(ErrorCode::NameNotAllowed, ctx.identity.toUri() + " refused by naming policy");
  }
}

void
ChallengeModule::checkCode(ChallengeStep& step, std::string_view submitted) const
{
  if (!step.state.secret.empty() && crypto::constantTimeEquals(step.state.secret, asBytes(submitted))) {
    succeed(step);
    return;
  }
  if (--step.state.remainingAttempts == 0) {
    step.state.fail(ErrorCode::OutOfAttempts, "wrong code, no attempts left");
    return;
  }
  askAgain(step, challenge_status::NEED_CODE);
}

void
ChallengeModule::succeed(ChallengeStep& step) const
{
  step.state.outcome = ChallengeOutcome::Success;
  step.state.statusText = std::string(challenge_status::SUCCESS);
  step.state.eraseSecret();
}

void
ChallengeModule::askAgain(ChallengeStep& step, std::string_view status) const
{
  step.state.outcome = ChallengeOutcome::NeedMore;
  step.state.statusText = std::string(status);
  step.reply.set(param::REMAINING_TRIES, std::to_string(step.state.remainingAttempts));
  step.reply.set(param::EXPIRES_AT, std::to_string(toUnixMillis(step.state.deadline)));
}

void
ChallengeRegistry::add(std::shared_ptr<const ChallengeModule> module)
{
  if (contains(module->id())) {
    throw Error(ErrorCode::InvalidArgument, "challenge '" + module->id() + "' registered twice");
  }
  m_modules.push_back(std::move(module));
}

const ChallengeModule&
ChallengeRegistry::get(std::string_view id) const
{
  for (const auto& m : m_modules) {
    if (m->id() == id) {
      return *m;
    }
  }
  throw Error(ErrorCode::UnknownChallenge, "challenge '" + std::string(id) + "' is not offered");
}

bool
ChallengeRegistry::contains(std::string_view id) const
{
  return std::any_of(m_modules.begin(), m_modules.end(), [id] (const auto& m) { return m->id() == id; });
}

std::vector<std::string>
ChallengeRegistry::ids() const
{
  std::vector<std::string> out;
  for (const auto& m : m_modules) {
    out.push_back(m->id());
  }
  return out;
}

} // namespace ndncert
