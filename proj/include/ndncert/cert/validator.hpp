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

#ifndef NDNCERT_CERT_VALIDATOR_HPP
#define NDNCERT_CERT_VALIDATOR_HPP

#include "ndncert/cert/name-pattern.hpp"
#include "ndncert/cert/revocation.hpp"

#include <functional>

namespace ndncert {

constexpr size_t MAX_CHAIN_DEPTH = 10;

enum class ValidationStatus {
  Valid,
  Unfetchable,
  BadSignature,
  Expired,
  Revoked,
  PolicyViolation,
  DepthExceeded,
};

std::string_view
toString(ValidationStatus status);

struct ValidationResult
{
  ValidationStatus status = ValidationStatus::Valid;
  /// Packet or certificate at which validation stopped.
  Name where;
  std::string message;

  bool
  isValid() const noexcept
  {
    return status == ValidationStatus::Valid;
  }
};

std::ostream&
operator<<(std::ostream& os, const ValidationResult& r);

enum class SignerRelation {
  Any,
  /// Signer identity must be a proper prefix of the subject identity.
  Hierarchical,
};

/**
 * @brief One trust rule; a signature is acceptable when some rule allows it.
 *
 * Patterns are matched against identities: the identity of a certificate, or the
 * name of any other Data packet, and the identity of the signing key.
 */
struct TrustRule
{
  NamePattern subject{"/**"};
  NamePattern signer{"/**"};
  SignerRelation relation = SignerRelation::Hierarchical;

  bool
  allows(const Name& subjectIdentity, const Name& signerIdentity) const;
};

class TrustPolicy
{
public:
  /**
   * @param rules ordered rules; empty means a single hierarchical rule
   * @throw Error(InvalidArgument) if @p anchor is not a correctly self-signed certificate
   */
  explicit
  TrustPolicy(Certificate anchor, std::vector<TrustRule> rules = {});

  const Certificate&
  anchor() const noexcept
  {
    return m_anchor;
  }

  const std::vector<TrustRule>&
  rules() const noexcept
  {
    return m_rules;
  }

  bool
  allows(const Name& subjectIdentity, const Name& signerIdentity) const;

private:
  Certificate m_anchor;
  std::vector<TrustRule> m_rules;
};

/// Returns every certificate Data known under a key-name prefix.
using CertificateFetcher = std::function<std::vector<Data>(const Name& keyName)>;

/// Identity used for policy matching: the certificate identity for certificates, else the Data name.
Name
subjectIdentityOf(const Data& data);

/**
 * @brief Follows KeyLocator links from @p data to the policy anchor.
 *
 * Every certificate on the path (including @p data itself when it is a certificate)
 * must verify, be within validity at @p now, be absent from @p revoked, and be
 * allowed by the policy. When a key has several certificates the highest version
 * issued by a policy-acceptable signer is used.
 */
ValidationResult
validateChain(const Data& data, const TrustPolicy& policy, const CertificateFetcher& fetch,
              const RevocationSet& revoked, TimePoint now);

} // namespace ndncert

#endif // NDNCERT_CERT_VALIDATOR_HPP
