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

#ifndef NDNCERT_SECURITY_SIGNING_HPP
#define NDNCERT_SECURITY_SIGNING_HPP

#include "ndncert/security/crypto.hpp"

namespace ndncert {

/// Sets an ECDSA SignatureInfo naming @p signer's key (keeping any ValidityPeriod) and signs.
void
signData(Data& data, const crypto::KeyPair& signer);

/// Integrity-only signature: SHA-256 of the signed portion, no KeyLocator.
void
signDataWithDigest(Data& data);

bool
verifyData(const Data& data, const crypto::PublicKey& key);

/// Checks a DigestSha256 Data against its own signed portion.
bool
verifyDataDigest(const Data& data);

/// Sets SignatureInfo, signs the signed portion, then appends the parameters digest.
void
signInterest(Interest& interest, const crypto::KeyPair& signer);

/// Verifies both the ECDSA signature and, when present, the parameters digest.
bool
verifyInterest(const Interest& interest, const crypto::PublicKey& key);

} // namespace ndncert

#endif // NDNCERT_SECURITY_SIGNING_HPP
