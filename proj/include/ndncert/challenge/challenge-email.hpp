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

#ifndef NDNCERT_CHALLENGE_CHALLENGE_EMAIL_HPP
#define NDNCERT_CHALLENGE_CHALLENGE_EMAIL_HPP

#include "ndncert/challenge/challenge-module.hpp"

namespace ndncert {

/// Sends a six-digit code to the "email" parameter through a delivery hook.
class EmailChallenge : public ChallengeModule
{
public:
  explicit
  EmailChallenge(CodeDelivery delivery, ChallengeDescriptor descriptor = {"email", 3, Seconds(300)});

protected:
  void
  doStart(ChallengeStep& step, const ChallengeContext& ctx, const ParameterMap& params) const override;

  void
  doProceed(ChallengeStep& step, const ChallengeContext& ctx, const ParameterMap& params) const override;

  ChallengeEvidence
  evidence(const ChallengeState& state) const override;

private:
  CodeDelivery m_delivery;
};

/// Loose syntactic check: one '@', non-empty local part and a dotted domain.
bool
isPlausibleEmail(std::string_view address);

} // namespace ndncert

#endif // NDNCERT_CHALLENGE_CHALLENGE_EMAIL_HPP
