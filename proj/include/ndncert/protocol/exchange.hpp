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

#ifndef NDNCERT_PROTOCOL_EXCHANGE_HPP
#define NDNCERT_PROTOCOL_EXCHANGE_HPP

#include "ndncert/protocol/replay-guard.hpp"
#include "ndncert/protocol/session.hpp"

namespace ndncert {

/**
 * @brief <ca>/CA/NEW Interest carrying @p payload, signed by @p requester.
 *
 * @p requester must hold the key inside payload.certRequest (proof of possession).
 */
Interest
buildNewInterest(const crypto::KeyPair& requester, const NewRequest& payload, const Name& caPrefix,
                 uint64_t timestampMs);

/**
 * @brief Issuer-side checks for a NEW Interest.
 *
 * The signature must verify under the public key inside the request, then the replay
 * guard must accept the nonce and timestamp.
 * @throw Error(MalformedPayload), Error(InvalidPoint), Error(BadSignature), Error(Replayed),
 *        Error(StaleTimestamp)
 */
NewRequest
parseNewInterest(const Interest& interest, ReplayGuard& guard, TimePoint now);

/// <ca>/CA/CHALLENGE/<request-id> Interest with sealed @p message, signed by @p requester.
Interest
buildChallengeInterest(const crypto::KeyPair& requester, SessionCipher& cipher, const ChallengeMessage& message,
                       const Name& caPrefix, uint64_t timestampMs);

/**
 * @brief Issuer-side checks for a CHALLENGE Interest whose session is already known.
 *
 * Order: signature under @p requesterKey, replay guard, then AEAD open.
 */
ChallengeMessage
openChallengeInterest(const Interest& interest, const crypto::PublicKey& requesterKey, SessionCipher& cipher,
                      ReplayGuard& guard, TimePoint now);

/// Signed reply named after @p interest (same name, digest included); uncacheable by default.
Data
makeReply(const Interest& interest, Bytes content, const crypto::KeyPair& signer,
          Milliseconds freshness = Milliseconds(0));

/// Sealed CHALLENGE reply echoing the Interest nonce.
Data
makeChallengeReply(const Interest& interest, SessionCipher& cipher, const ChallengeMessage& message,
                   const crypto::KeyPair& signer);

/// Signed error reply.
Data
makeErrorReply(const Interest& interest, ErrorCode code, std::string_view info, const crypto::KeyPair& signer);

/**
 * @brief Requester-side checks on a reply: signature under @p issuerKey and nonce echo.
 *
 * Error replies are turned into exceptions with the issuer's code.
 * @throw Error(BadSignature), Error(IssuerError)
 */
void
checkReply(const Data& reply, const Interest& interest, const crypto::PublicKey& issuerKey);

} // namespace ndncert

#endif // NDNCERT_PROTOCOL_EXCHANGE_HPP
