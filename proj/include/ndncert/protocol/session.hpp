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

#ifndef NDNCERT_PROTOCOL_SESSION_HPP
#define NDNCERT_PROTOCOL_SESSION_HPP

#include "ndncert/protocol/messages.hpp"

namespace ndncert {

/**
 * @brief Per-request AEAD channel shared by requester and issuer after NEW.
 *
 * Each side seals with its own IV generator and checks the peer's IVs. The associated
 * data is RequestId || encoded packet name (digest components removed), so a ciphertext
 * cannot be moved to another request or another packet.
 */
class SessionCipher
{
public:
  SessionCipher(crypto::SessionKey key, const RequestId& requestId)
    : m_key(std::move(key))
    , m_requestId(requestId)
  {
  }

  const RequestId&
  requestId() const noexcept
  {
    return m_requestId;
  }

  SealedPayload
  seal(const ChallengeMessage& message, const Name& packetName);

  /**
   * @throw Error(UnknownRequestId) payload names another request
   * @throw Error(IvReplay) IV prefix changed or counter did not increase
   * @throw Error(AuthenticationFailed) ciphertext, tag, or associated data altered
   * @throw Error(MalformedPayload) plaintext does not decode
   *
   * The receive state only advances when the payload authenticates.
   */
  ChallengeMessage
  open(const SealedPayload& payload, const Name& packetName);

private:
  Bytes
  associatedData(const Name& packetName) const;

private:
  crypto::SessionKey m_key;
  RequestId m_requestId;
  crypto::IvGenerator m_ivGenerator;
  crypto::IvChecker m_ivChecker;
};

/// Fresh random request id.
RequestId
makeRequestId();

} // namespace ndncert

#endif // NDNCERT_PROTOCOL_SESSION_HPP
