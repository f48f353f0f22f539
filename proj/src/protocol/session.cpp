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

#include "ndncert/protocol/session.hpp"

namespace ndncert {

Bytes
SessionCipher::associatedData(const Name& packetName) const
{
  Bytes ad(m_requestId.begin(), m_requestId.end());
  auto name = packetName.withoutDigest().wireEncode();
  ad.insert(ad.end(), name.begin(), name.end());
  return ad;
}

SealedPayload
SessionCipher::seal(const ChallengeMessage& message, const Name& packetName)
{
  SealedPayload out;
  out.requestId = m_requestId;
  out.iv = m_ivGenerator.next();
  auto plaintext = message.encode();
  auto sealed = crypto::aesGcmSeal(m_key.aesKey(), out.iv, plaintext, associatedData(packetName));
  crypto::secureErase(plaintext);
  out.ciphertext = std::move(sealed.ciphertext);
  out.tag = sealed.tag;
  return out;
}

ChallengeMessage
SessionCipher::open(const SealedPayload& payload, const Name& packetName)
{
  if (payload.requestId != m_requestId) {
    throw Error(ErrorCode::UnknownRequestId, "payload belongs to request " + toHex(payload.requestId));
  }
  m_ivChecker.check(payload.iv);
  auto plaintext = crypto::aesGcmOpen(m_key.aesKey(), payload.iv, payload.ciphertext, payload.tag,
                                      associatedData(packetName));
  m_ivChecker.commit(payload.iv);
  try {
    auto message = ChallengeMessage::decode(plaintext);
    crypto::secureErase(plaintext);
    return message;
  }
  catch (...) {
    crypto::secureErase(plaintext);
    throw;
  }
}

RequestId
makeRequestId()
{
  RequestId id;
  crypto::fillRandom(id);
  return id;
}

} // namespace ndncert
