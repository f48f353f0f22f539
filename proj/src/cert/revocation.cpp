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

#include "ndncert/cert/revocation.hpp"

namespace ndncert {

std::string_view
toString(RevokedBy by)
{
  switch (by) {
    case RevokedBy::Issuer:
      return "issuer";
    case RevokedBy::CertificateKey:
      return "certificate-key";
    case RevokedBy::NamespaceOwner:
      return "namespace-owner";
  }
  return "unknown";
}

namespace {

void
encodeSignedFields(tlv::Encoder& enc, const RevocationRecord& r)
{
  enc.appendRaw(r.certName.wireEncode());
  enc.appendTlv(tlv::RevocationReason, std::string_view(r.reason));
  enc.appendNonNegativeInteger(tlv::RevokedBy, static_cast<uint64_t>(r.signedBy));
  enc.appendNonNegativeInteger(tlv::SignatureTime, r.timestamp);
  enc.appendNested(tlv::KeyLocator, [&] (tlv::Encoder& kl) {
    kl.appendRaw(r.signerKeyName.wireEncode());
  });
  if (r.signerCertificate) {
    enc.appendTlv(tlv::SignerCertificate, r.signerCertificate->wireEncode());
  }
}

} // namespace

Bytes
RevocationRecord::signedPortion() const
{
  tlv::Encoder enc;
  encodeSignedFields(enc, *this);
  return enc.release();
}

void
RevocationRecord::sign(const crypto::KeyPair& signer)
{
  signerKeyName = signer.keyName();
  signature = signer.sign(signedPortion());
}

bool
RevocationRecord::verify(const crypto::PublicKey& key) const
{
  return crypto::verify(signedPortion(), signature, key);
}

Bytes
RevocationRecord::wireEncode() const
{
  tlv::Encoder enc;
  enc.appendNested(tlv::RevocationRecord, [&] (tlv::Encoder& inner) {
    encodeSignedFields(inner, *this);
    inner.appendTlv(tlv::SignatureValue, signature);
  });
  return enc.release();
}

RevocationRecord
RevocationRecord::wireDecode(const tlv::Element& e)
{
  if (e.type != tlv::RevocationRecord) {
    throw Error(ErrorCode::MalformedTlv, "expected RevocationRecord");
  }
  tlv::ElementMap fields(e.value, {tlv::Name, tlv::RevocationReason, tlv::RevokedBy, tlv::SignatureTime,
                                   tlv::KeyLocator, tlv::SignerCertificate, tlv::SignatureValue});
  RevocationRecord r;
  r.certName = Name::wireDecode(fields.require(tlv::Name));
  r.reason = asString(fields.require(tlv::RevocationReason).value);
  auto by = tlv::readNonNegativeInteger(fields.require(tlv::RevokedBy));
  if (by > static_cast<uint64_t>(RevokedBy::NamespaceOwner)) {
    throw Error(ErrorCode::MalformedPayload, "unknown RevokedBy value");
  }
  r.signedBy = static_cast<RevokedBy>(by);
  r.timestamp = tlv::readNonNegativeInteger(fields.require(tlv::SignatureTime));
  auto kl = tlv::parseSingle(fields.require(tlv::KeyLocator).value, tlv::Name);
  r.signerKeyName = Name::wireDecode(kl);
  if (auto cert = fields.find(tlv::SignerCertificate)) {
    r.signerCertificate = Certificate::wireDecode(cert->value);
  }
  r.signature.assign(fields.require(tlv::SignatureValue).value.begin(),
                     fields.require(tlv::SignatureValue).value.end());
  return r;
}

RevocationRecord
RevocationRecord::wireDecode(ByteView wire)
{
  return wireDecode(tlv::parseSingle(wire, tlv::RevocationRecord));
}

Bytes
encodeRevocationList(const std::vector<RevocationRecord>& records)
{
  tlv::Encoder enc;
  for (const auto& r : records) {
    enc.appendRaw(r.wireEncode());
  }
  return enc.release();
}

std::vector<RevocationRecord>
decodeRevocationList(ByteView content)
{
  std::vector<RevocationRecord> out;
  tlv::Reader reader(content);
  while (!reader.atEnd()) {
    out.push_back(RevocationRecord::wireDecode(reader.next()));
  }
  return out;
}

} // namespace ndncert
