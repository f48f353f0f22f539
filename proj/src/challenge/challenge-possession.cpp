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

#include "ndncert/challenge/challenge-possession.hpp"
#include "ndncert/security/crypto.hpp"

#include <sstream>

namespace ndncert {

PossessionChallenge::PossessionChallenge(ChallengeDescriptor descriptor)
  : ChallengeModule(std::move(descriptor))
{
}

void
PossessionChallenge::doStart(ChallengeStep& step, const ChallengeContext& ctx, const ParameterMap& params) const
{
  const auto& wire = params.require(param::CERT);
  std::optional<Certificate> cert;
  try {
    cert.emplace(Certificate::wireDecode(wire));
  }
  catch (const Error& e) {
    throw Error(ErrorCode::MalformedParams, "parameter 'cert': " + e.detail());
  }
  if (!cert->identity().isPrefixOf(ctx.identity)) {
    step.state.fail(ErrorCode::NameNotAllowed,
                    cert->identity().toUri() + " does not cover " + ctx.identity.toUri());
    return;
  }
  step.state.presented = std::move(cert);
  step.state.secret = crypto::randomBytes(POSSESSION_NONCE_SIZE);
  askAgain(step, challenge_status::NEED_PROOF);
  step.reply.set(param::NONCE, step.state.secret);
}

void
PossessionChallenge::doProceed(ChallengeStep& step, const ChallengeContext& ctx, const ParameterMap& params) const
{
  const auto& proof = params.require(param::PROOF);
  auto& state = step.state;
  if (!crypto::verify(state.secret, proof, state.presented->publicKey())) {
    if (--state.remainingAttempts == 0) {
      state.fail(ErrorCode::OutOfAttempts, "bad proof signature, no attempts left");
      return;
    }
    askAgain(step, challenge_status::NEED_PROOF);
    step.reply.set(param::NONCE, state.secret);
    return;
  }
  if (ctx.policy == nullptr) {
    state.fail(ErrorCode::ChallengeFailed, "issuer has no trust policy for presented certificates");
    return;
  }
  auto result = validateChain(state.presented->data(), *ctx.policy, ctx.fetch, ctx.revoked, ctx.now);
  if (!result.isValid()) {
    std::ostringstream os;
    os << "presented certificate rejected: " << result;
    state.fail(ErrorCode::ChallengeFailed, os.str());
    return;
  }
  succeed(step);
}

ChallengeEvidence
PossessionChallenge::evidence(const ChallengeState& state) const
{
  return {state.challengeId, std::nullopt, state.presented};
}

Bytes
signPossessionNonce(ByteView nonce, const crypto::KeyPair& key)
{
  return key.sign(nonce);
}

} // namespace ndncert
