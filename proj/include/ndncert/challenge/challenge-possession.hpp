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

#ifndef NDNCERT_CHALLENGE_CHALLENGE_POSSESSION_HPP
#define NDNCERT_CHALLENGE_CHALLENGE_POSSESSION_HPP

#include "ndncert/challenge/challenge-module.hpp"

namespace ndncert {

constexpr size_t POSSESSION_NONCE_SIZE = 16;

/**
 * @brief Proof of holding the key of an existing, valid certificate.
 *
 * Round 1 takes the certificate ("cert") and answers with a 16-byte nonce; round 2
 * takes the signature over that nonce ("proof"). Success needs both the signature
 * and validateChain() of the certificate under the issuer's trust policy. By default
 * the certificate identity must be the requested identity or one of its ancestors;
 * presenting one's own certificate is how renewal works.
 */
class PossessionChallenge : public ChallengeModule
{
public:
  explicit
  PossessionChallenge(ChallengeDescriptor descriptor = {"possession", 3, Seconds(300)});

protected:
  void
  doStart(ChallengeStep& step, const ChallengeContext& ctx, const ParameterMap& params) const override;

  void
  doProceed(ChallengeStep& step, const ChallengeContext& ctx, const ParameterMap& params) const override;

  ChallengeEvidence
  evidence(const ChallengeState& state) const override;
};

/// Requester side: signs the nonce from a need-proof reply.
Bytes
signPossessionNonce(ByteView nonce, const crypto::KeyPair& key);

} // namespace ndncert

#endif // NDNCERT_CHALLENGE_CHALLENGE_POSSESSION_HPP
