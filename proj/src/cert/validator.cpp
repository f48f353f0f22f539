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

#include "ndncert/cert/validator.hpp"
#include "ndncert/security/signing.hpp"

#include <algorithm>

namespace ndncert {

std::string_view
toString(ValidationStatus status)
{
  switch (status) {
    case ValidationStatus::Valid:
      return "Valid";
    case ValidationStatus::Unfetchable:
      return "Unfetchable";
    case ValidationStatus::BadSignature:
      return "BadSignature";
    case ValidationStatus::Expired:
      return "Expired";
    case ValidationStatus::Revoked:
      return "Revoked";
    case ValidationStatus::PolicyViolation:
      return "PolicyViolation";
    case ValidationStatus::DepthExceeded:
      return "DepthExceeded";
  }
  return "Unknown";
}

std::ostream&
operator<<(std::ostream& os, const ValidationResult& r)
{
  os << toString(r.status);
  if (!r.isValid()) {
    os << " at " << r.where << ": " << r.message;
  }
  return os;
}

bool
TrustRule::allows(const Name& subjectIdentity, const Name& signerIdentity) const
{
  if (!subject.matches(subjectIdentity) || !signer.matches(signerIdentity)) {
    return false;
  }
  switch (relation) {
    case SignerRelation::Any:
      return true;
    case SignerRelation::Hierarchical:
      return signerIdentity.size() < subjectIdentity.size() && signerIdentity.isPrefixOf(subjectIdentity);
  }
  return false;
}

TrustPolicy::TrustPolicy(Certificate anchor, std::vector<TrustRule> rules)
  : m_anchor(std::move(anchor))
  , m_rules(std::move(rules))
{
  if (!m_anchor.isSelfSigned() || !verifyData(m_anchor.data(), m_anchor.publicKey())) {
    throw Error(ErrorCode::InvalidArgument, "trust anchor " + m_anchor.name().toUri() + " is not self-signed");
  }
  if (m_rules.empty()) {
    m_rules.push_back(TrustRule{});
  }
}

bool
TrustPolicy::allows(const Name& subjectIdentity, const Name& signerIdentity) const
{
  return std::any_of(m_rules.begin(), m_rules.end(), [&] (const TrustRule& rule) {
    return rule.allows(subjectIdentity, signerIdentity);
  });
}

namespace {

std::optional<Certificate>
asCertificate(const Data& data)
{
  if (data.contentType() != tlv::ContentType_Key) {
    return std::nullopt;
  }
  try {
    return Certificate(data);
  }
  catch (const Error&) {
    return std::nullopt;
  }
}

ValidationResult
fail(ValidationStatus status, const Name& where, std::string message)
{
  return {status, where, std::move(message)};
}

std::optional<ValidationResult>
checkCertificate(const Certificate& cert, const RevocationSet& revoked, TimePoint now)
{
  if (!cert.isValidAt(now)) {
    return fail(ValidationStatus::Expired, cert.name(),
                "outside validity " + toIsoString(cert.validity().notBefore) + ".." +
                toIsoString(cert.validity().notAfter));
  }
  if (revoked.count(cert.name()) > 0) {
    return fail(ValidationStatus::Revoked, cert.name(), "certificate is revoked");
  }
  return std::nullopt;
}

/// Highest version first, policy-acceptable issuers before the rest.
std::optional<Certificate>
selectCertificate(const std::vector<Data>& candidates, const Name& keyName, const TrustPolicy& policy)
{
  std::vector<Certificate> certs;
  for (const auto& d : candidates) {
    auto cert = asCertificate(d);
    if (cert && cert->keyName() == keyName) {
      certs.push_back(std::move(*cert));
    }
  }
  if (certs.empty()) {
    return std::nullopt;
  }
  auto acceptable = [&] (const Certificate& c) {
    auto signer = c.signerKeyName();
    return isKeyName(signer) && policy.allows(c.identity(), keyNameToIdentity(signer));
  };
  auto best = std::max_element(certs.begin(), certs.end(), [&] (const Certificate& a, const Certificate& b) {
    return std::pair(acceptable(a), a.version()) < std::pair(acceptable(b), b.version());
  });
  return *best;
}

} // namespace

Name
subjectIdentityOf(const Data& data)
{
  if (auto cert = asCertificate(data)) {
    return cert->identity();
  }
  return data.name();
}

ValidationResult
validateChain(const Data& data, const TrustPolicy& policy, const CertificateFetcher& fetch,
              const RevocationSet& revoked, TimePoint now)
{
  const Certificate& anchor = policy.anchor();
  Data current = data;
  for (size_t depth = 0; ; ++depth) {
    auto currentCert = asCertificate(current);
    if (currentCert) {
      if (auto problem = checkCertificate(*currentCert, revoked, now)) {
        return *problem;
      }
      if (*currentCert == anchor) {
        return {};
      }
    }

    const auto& locator = current.signatureInfo().keyLocator();
    if (current.signatureInfo().type() != SignatureType::EcdsaSha256 || !locator || !isKeyName(*locator)) {
      return fail(ValidationStatus::BadSignature, current.name(), "packet is not signed by a named key");
    }
    Name subject = currentCert ? currentCert->identity() : current.name();
    Name signerIdentity = keyNameToIdentity(*locator);

    std::optional<Certificate> signer;
    if (*locator == anchor.keyName()) {
      signer = anchor;
    }
    else {
      if (depth >= MAX_CHAIN_DEPTH) {
        return fail(ValidationStatus::DepthExceeded, current.name(), "chain longer than " +
                    std::to_string(MAX_CHAIN_DEPTH));
      }
      signer = selectCertificate(fetch ? fetch(*locator) : std::vector<Data>{}, *locator, policy);
      if (!signer) {
        return fail(ValidationStatus::Unfetchable, *locator, "no certificate found for key");
      }
    }

    if (!verifyData(current, signer->publicKey())) {
      return fail(ValidationStatus::BadSignature, current.name(),
                  "signature does not verify under " + signer->name().toUri());
    }
    if (!policy.allows(subject, signerIdentity)) {
      return fail(ValidationStatus::PolicyViolation, current.name(),
                  signerIdentity.toUri() + " may not sign for " + subject.toUri());
    }
    current = signer->data();
  }
}

} // namespace ndncert
