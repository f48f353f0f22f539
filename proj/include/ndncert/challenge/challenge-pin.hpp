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

#ifndef NDNCERT_CHALLENGE_CHALLENGE_PIN_HPP
#define NDNCERT_CHALLENGE_CHALLENGE_PIN_HPP

#include "ndncert/challenge/assertion-token-table.hpp"
#include "ndncert/challenge/challenge-module.hpp"

namespace ndncert {

/**
 * @brief Six-digit secret code.
 *
 * When the name authority provisioned a token for the requested identity, that token
 * is the code, and a requester that already holds it may send it with the challenge
 * selection to finish in one round. Otherwise a fresh code goes to the delivery hook
 * with the identity URI as the address. A token-backed challenge that runs out of
 * attempts burns the token, so guessing cannot continue in a new request.
 */
class PinChallenge : public ChallengeModule
{
public:
  explicit
  PinChallenge(std::shared_ptr<AssertionTokenTable> tokens = nullptr, CodeDelivery delivery = nullptr,
               ChallengeDescriptor descriptor = {"pin", 3, Seconds(300)});

protected:
  void
  doStart(ChallengeStep& step, const ChallengeContext& ctx, const ParameterMap& params) const override;

  void
  doProceed(ChallengeStep& step, const ChallengeContext& ctx, const ParameterMap& params) const override;

private:
  std::shared_ptr<AssertionTokenTable> m_tokens;
  CodeDelivery m_delivery;
};

} // namespace ndncert

#endif // NDNCERT_CHALLENGE_CHALLENGE_PIN_HPP
