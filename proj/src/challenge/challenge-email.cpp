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

#include "ndncert/challenge/challenge-email.hpp"
#include "ndncert/challenge/assertion-token-table.hpp"

namespace ndncert {

bool
isPlausibleEmail(std::string_view address)
{
  auto at = address.find('@');
  if (at == std::string_view::npos || at == 0 || address.find('@', at + 1) != std::string_view::npos) {
    return false;
  }
  auto domain = address.substr(at + 1);
  auto dot = domain.find('.');
  if (dot == std::string_view::npos || dot == 0 || domain.back() == '.') {
    return false;
  }
  return std::none_of(address.begin(), address.end(), [] (char c) {
    return static_cast<unsigned char>(c) <= ' ' || c == 0x7f;
  });
}

EmailChallenge::EmailChallenge(CodeDelivery delivery, ChallengeDescriptor descriptor)
  : ChallengeModule(std::move(descriptor))
  , m_delivery(std::move(delivery))
{
  if (!m_delivery) {
    throw Error(ErrorCode::InvalidArgument, "email challenge needs a delivery hook");
  }
}

void
EmailChallenge::doStart(ChallengeStep& step, const ChallengeContext&, const ParameterMap& params) const
{
  auto address = params.getString(param::EMAIL);
  if (!address) {
    throw Error(ErrorCode::MissingParameter, "parameter 'email' is required");
  }
  if (!isPlausibleEmail(*address)) {
    throw Error(ErrorCode::MalformedParams, "'" + *address + "' is not an email address");
  }
  auto code = generateSecretCode();
  step.state.secret = toBytes(code);
  step.state.email = *address;
  m_delivery(*address, code);
  askAgain(step, challenge_status::NEED_CODE);
}

void
EmailChallenge::doProceed(ChallengeStep& step, const ChallengeContext&, const ParameterMap& params) const
{
  auto code = params.getString(param::CODE);
  if (!code) {
    throw Error(ErrorCode::MissingParameter, "parameter 'code' is required");
  }
  checkCode(step, *code);
}

ChallengeEvidence
EmailChallenge::evidence(const ChallengeState& state) const
{
  return {state.challengeId, state.email, std::nullopt};
}

} // namespace ndncert
