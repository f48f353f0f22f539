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

#include "ndncert/challenge/challenge-pin.hpp"

namespace ndncert {

PinChallenge::PinChallenge(std::shared_ptr<AssertionTokenTable> tokens, CodeDelivery delivery,
                           ChallengeDescriptor descriptor)
  : ChallengeModule(std::move(descriptor))
  , m_tokens(std::move(tokens))
  , m_delivery(std::move(delivery))
{
}

void
PinChallenge::doStart(ChallengeStep& step, const ChallengeContext& ctx, const ParameterMap& params) const
{
  if (m_tokens && m_tokens->has(ctx.identity, ctx.now)) {
    step.state.tokenBacked = true;
    if (params.find(param::CODE) != nullptr) {
      doProceed(step, ctx, params);
    }
    else {
      askAgain(step, challenge_status::NEED_CODE);
    }
    return;
  }
  if (!m_delivery) {
    step.state.fail(ErrorCode::ChallengeFailed, "no code provisioned for " + ctx.identity.toUri());
    return;
  }
  auto code = generateSecretCode();
  step.state.secret = toBytes(code);
  m_delivery(ctx.identity.toUri(), code);
  askAgain(step, challenge_status::NEED_CODE);
}

void
PinChallenge::doProceed(ChallengeStep& step, const ChallengeContext& ctx, const ParameterMap& params) const
{
  auto code = params.getString(param::CODE);
  if (!code) {
    throw Error(ErrorCode::MissingParameter, "parameter 'code' is required");
  }
  if (!step.state.tokenBacked) {
    checkCode(step, *code);
    return;
  }

  switch (m_tokens->consume(ctx.identity, *code, ctx.now)) {
    case AssertionTokenTable::ConsumeResult::Consumed:
      succeed(step);
      return;
    case AssertionTokenTable::ConsumeResult::NoToken:
      step.state.fail(ErrorCode::ChallengeExpired, "assertion token expired or already used");
      return;
    case AssertionTokenTable::ConsumeResult::Mismatch:
      if (--step.state.remainingAttempts == 0) {
        m_tokens->revoke(ctx.identity);
        step.state.fail(ErrorCode::OutOfAttempts, "wrong code, no attempts left; token revoked");
        return;
      }
      askAgain(step, challenge_status::NEED_CODE);
      return;
  }
}

} // namespace ndncert
