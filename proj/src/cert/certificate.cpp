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

#include "ndncert/cert/certificate.hpp"
#include "ndncert/encoding/base64.hpp"
#include "ndncert/file-util.hpp"
#include "ndncert/security/signing.hpp"

namespace ndncert {

namespace {

const Component KEY_COMPONENT = Component::fromString("KEY");

crypto::PublicKey
extractKey(const Data& data)
{
  if (data.contentType() != tlv::ContentType_Key) {
    throw Error(ErrorCode::MalformedKey, "certificate ContentType is not KEY");
  }
  return crypto::PublicKey::fromSpki(data.content());
}

ValidityPeriod
extractValidity(const Data& data)
{
  const auto& v = data.signatureInfo().validityPeriod();
  if (!v) {
    throw Error(ErrorCode::InvalidValidity, "certificate has no ValidityPeriod");
  }
  if (v->notBefore >= v->notAfter) {
    throw Error(ErrorCode::InvalidValidity, "notBefore is not earlier than notAfter");
  }
  return *v;
}

} // namespace

Name
buildCertName(const Name& identity, const Component& keyId, const Component& issuerId,
              const Component& version)
{
  if (identity.empty()) {
    throw Error(ErrorCode::InvalidArgument, "certificate identity must not be empty");
  }
  Name name = identity;
  name.append(KEY_COMPONENT).append(keyId).append(issuerId).append(version);
  return name;
}

CertNameParts
parseCertName(const Name& name)
{
  if (name.size() < 5) {
    throw Error(ErrorCode::MalformedCertName, name.toUri() + " has fewer than 5 components");
  }
  if (name[-4] != KEY_COMPONENT) {
    throw Error(ErrorCode::MalformedCertName, name.toUri() + " lacks KEY at position size-4");
  }
  return {name.getPrefix(-4), name[-3], name[-2], name[-1]};
}

bool
isKeyName(const Name& name)
{
  return name.size() >= 3 && name[-2] == KEY_COMPONENT;
}

Name
keyNameToIdentity(const Name& keyName)
{
  if (!isKeyName(keyName)) {
    throw Error(ErrorCode::MalformedCertName, keyName.toUri() + " is not a key name");
  }
  return keyName.getPrefix(-2);
}

Certificate::Certificate(Data data)
  : m_data(std::move(data))
  , m_parts(parseCertName(m_data.name()))
  , m_key(extractKey(m_data))
  , m_validity(extractValidity(m_data))
{
}

Name
Certificate::signerKeyName() const
{
  return m_data.signatureInfo().keyLocator().value_or(Name());
}

Certificate
issueCertificate(const crypto::PublicKey& subjectKey, const IssueParams& params,
                 const crypto::KeyPair& issuer)
{
  const auto& v = params.validity;
  if (v.notBefore >= v.notAfter) {
    throw Error(ErrorCode::InvalidValidity, "notBefore is not earlier than notAfter");
  }
  if (v.notAfter <= params.now) {
    throw Error(ErrorCode::InvalidValidity, "validity period already ended");
  }
  if (v.duration() > params.maxValidity) {
    throw Error(ErrorCode::ValidityTooLong, "requested validity exceeds the issuer maximum");
  }
  if (v.notBefore > params.now + params.clockSkew) {
    throw Error(ErrorCode::ClockSkew, "notBefore is too far in the future");
  }

  Name name = buildCertName(params.subjectIdentity, Component::fromString(crypto::computeKeyId(subjectKey)),
                            params.issuerId, Component::fromNumber(params.version));
  Data data(std::move(name));
  data.setContentType(tlv::ContentType_Key);
  data.setContent(subjectKey.spki());
  data.signatureInfo().setValidityPeriod(ValidityPeriod::make(v.notBefore, v.notAfter));
  signData(data, issuer);
  return Certificate(std::move(data));
}

Certificate
makeSelfSignedCertificate(const crypto::KeyPair& pair, const ValidityPeriod& validity, uint64_t version)
{
  IssueParams params;
  params.subjectIdentity = pair.identity();
  params.validity = validity;
  params.issuerId = SELF_ISSUER_ID;
  params.version = version;
  params.now = validity.notBefore;
  return issueCertificate(pair.publicKey(), params, pair);
}

Certificate
makeCertificateRequest(const crypto::KeyPair& pair, const ValidityPeriod& validity)
{
  Data data(buildCertName(pair.identity(), pair.keyName()[-1], REQUEST_ISSUER_ID, Component::fromNumber(0)));
  data.setContentType(tlv::ContentType_Key);
  data.setContent(pair.publicKey().spki());
  data.signatureInfo().setValidityPeriod(ValidityPeriod::make(validity.notBefore, validity.notAfter));
  signDataWithDigest(data);
  return Certificate(std::move(data));
}

std::string
certificateToText(const Certificate& cert)
{
  return base64Encode(cert.wireEncode());
}

Certificate
certificateFromText(std::string_view text)
{
  return Certificate::wireDecode(base64Decode(trim(text)));
}

Certificate
loadCertificate(const std::filesystem::path& path)
{
  auto text = readTextFile(path);
  try {
    return certificateFromText(text);
  }
  catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.detail());
  }
}

void
saveCertificate(const Certificate& cert, const std::filesystem::path& path)
{
  writeFileAtomic(path, certificateToText(cert) + "\n");
}

} // namespace ndncert
