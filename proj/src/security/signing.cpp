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

#include "ndncert/security/signing.hpp"

namespace ndncert {

void
signData(Data& data, const crypto::KeyPair& signer)
{
  auto& info = data.signatureInfo();
  info.setType(SignatureType::EcdsaSha256);
  info.setKeyLocator(signer.keyName());
  data.setSignatureValue(signer.sign(data.signedPortion()));
}

void
signDataWithDigest(Data& data)
{
  auto& info = data.signatureInfo();
  info.setType(SignatureType::DigestSha256);
  info.setKeyLocator(std::nullopt);
  auto digest = crypto::sha256(data.signedPortion());
  data.setSignatureValue(Bytes(digest.begin(), digest.end()));
}

bool
verifyData(const Data& data, const crypto::PublicKey& key)
{
  if (data.signatureInfo().type() != SignatureType::EcdsaSha256) {
    return false;
  }
  return crypto::verify(data.signedPortion(), data.signatureValue(), key);
}

bool
verifyDataDigest(const Data& data)
{
  if (data.signatureInfo().type() != SignatureType::DigestSha256) {
    return false;
  }
  auto digest = crypto::sha256(data.signedPortion());
  return crypto::constantTimeEquals(digest, data.signatureValue());
}

void
signInterest(Interest& interest, const crypto::KeyPair& signer)
{
  interest.setName(interest.name().withoutDigest());
  interest.setSignatureInfo(SignatureInfo(SignatureType::EcdsaSha256, signer.keyName()));
  interest.setSignatureValue(signer.sign(interest.signedPortion()));
  interest.appendParametersDigest();
}

bool
verifyInterest(const Interest& interest, const crypto::PublicKey& key)
{
  const auto& info = interest.signatureInfo();
  const auto& value = interest.signatureValue();
  if (!info || !value || info->type() != SignatureType::EcdsaSha256) {
    return false;
  }
  const auto& name = interest.name();
  if (!name.empty() && name[-1].type() == tlv::ParametersSha256DigestComponent &&
      !interest.hasValidParametersDigest()) {
    return false;
  }
  return crypto::verify(interest.signedPortion(), *value, key);
}

} // namespace ndncert
