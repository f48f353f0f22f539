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

#include "ndncert/protocol/exchange.hpp"
#include "ndncert/security/signing.hpp"

namespace ndncert {

Interest
buildNewInterest(const crypto::KeyPair& requester, const NewRequest& payload, const Name& caPrefix,
                 uint64_t timestampMs)
{
  Interest interest(makeNewName(caPrefix));
  interest.setApplicationParameters(payload.encode());
  interest.setTimestamp(timestampMs);
  signInterest(interest, requester);
  return interest;
}

NewRequest
parseNewInterest(const Interest& interest, ReplayGuard& guard, TimePoint now)
{
  if (!interest.applicationParameters()) {
    throw Error(ErrorCode::MalformedPayload, "NEW Interest has no parameters");
  }
  auto request = NewRequest::decode(*interest.applicationParameters());
  const auto& info = interest.signatureInfo();
  if (!info || info->type() != SignatureType::EcdsaSha256 || info->keyLocator() != request.certRequest.keyName()) {
    throw Error(ErrorCode::BadSignature, "NEW Interest must be signed by the requested key");
  }
  if (!verifyInterest(interest, request.certRequest.publicKey()) || !interest.hasValidParametersDigest()) {
    throw Error(ErrorCode::BadSignature, "NEW Interest signature does not verify under the requested key");
  }
  guard.accept(interest, now);
  return request;
}

Interest
buildChallengeInterest(const crypto::KeyPair& requester, SessionCipher& cipher, const ChallengeMessage& message,
                       const Name& caPrefix, uint64_t timestampMs)
{
  Interest interest(makeChallengeName(caPrefix, cipher.requestId()));
  interest.setApplicationParameters(cipher.seal(message, interest.name()).encode());
  interest.setTimestamp(timestampMs);
  signInterest(interest, requester);
  return interest;
}

ChallengeMessage
openChallengeInterest(const Interest& interest, const crypto::PublicKey& requesterKey, SessionCipher& cipher,
                      ReplayGuard& guard, TimePoint now)
{
  if (!interest.applicationParameters()) {
    throw Error(ErrorCode::MalformedPayload, "CHALLENGE Interest has no parameters");
  }
  if (!interest.hasValidParametersDigest() || !verifyInterest(interest, requesterKey)) {
    throw Error(ErrorCode::BadSignature, "CHALLENGE Interest signature does not verify");
  }
  guard.accept(interest, now);
  auto payload = SealedPayload::decode(*interest.applicationParameters());
  return cipher.open(payload, interest.name());
}

Data
makeReply(const Interest& interest, Bytes content, const crypto::KeyPair& signer, Milliseconds freshness)
{
  Data data(interest.name());
  data.setContent(std::move(content));
  data.setFreshnessPeriod(freshness);
  signData(data, signer);
  return data;
}

Data
makeChallengeReply(const Interest& interest, SessionCipher& cipher, const ChallengeMessage& message,
                   const crypto::KeyPair& signer)
{
  auto sealed = cipher.seal(message, interest.name());
  sealed.nonce = interest.nonce();
  return makeReply(interest, sealed.encode(), signer);
}

Data
makeErrorReply(const Interest& interest, ErrorCode code, std::string_view info, const crypto::KeyPair& signer)
{
  ErrorReply reply{interest.nonce(), code, std::string(info)};
  return makeReply(interest, reply.encode(), signer);
}

void
checkReply(const Data& reply, const Interest& interest, const crypto::PublicKey& issuerKey)
{
  if (!verifyData(reply, issuerKey)) {
    throw Error(ErrorCode::BadSignature, "reply " + reply.name().toUri() + " is not signed by the issuer");
  }
  if (replyNonce(reply.content()) != interest.nonce()) {
    throw Error(ErrorCode::IssuerError, "reply does not echo the request nonce");
  }
  throwIfErrorReply(reply);
}

} // namespace ndncert
