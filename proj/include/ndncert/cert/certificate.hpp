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

#ifndef NDNCERT_CERT_CERTIFICATE_HPP
#define NDNCERT_CERT_CERTIFICATE_HPP

#include "ndncert/security/crypto.hpp"

#include <filesystem>

namespace ndncert {

/// Issuer-id component of self-signed certificates.
inline const Component SELF_ISSUER_ID = Component::fromString("self");

/// Issuer-id component of the unsigned shell carried in a NEW request.
inline const Component REQUEST_ISSUER_ID = Component::fromString("request");

/// Tolerated clock difference when checking that a validity period has started.
constexpr Clock::duration CLOCK_SKEW_TOLERANCE = std::chrono::seconds(120);

struct CertNameParts
{
  Name identity;
  Component keyId;
  Component issuerId;
  Component version;

  bool
  operator==(const CertNameParts&) const = default;
};

/// <identity>/KEY/<key-id>/<issuer-id>/<version>
Name
buildCertName(const Name& identity, const Component& keyId, const Component& issuerId,
              const Component& version);

/// @throw Error(MalformedCertName) unless "KEY" sits at position size-4 after a non-empty identity
CertNameParts
parseCertName(const Name& name);

/// True for names of the form <identity>/KEY/<key-id>.
bool
isKeyName(const Name& name);

/// Identity part of a key name; throws Error(MalformedCertName) otherwise.
Name
keyNameToIdentity(const Name& keyName);

/**
 * @brief A Data packet that binds an identity and key id to a P-256 public key.
 *
 * Content is the DER SubjectPublicKeyInfo, ContentType is KEY, and the ValidityPeriod
 * travels in SignatureInfo. Instances are immutable.
 */
class Certificate
{
public:
  /**
   * @brief Checks the certificate structure of @p data.
   * @throw Error(MalformedCertName), Error(MalformedKey), Error(InvalidValidity)
   */
  explicit
  Certificate(Data data);

  const Data&
  data() const noexcept
  {
    return m_data;
  }

  const Name&
  name() const noexcept
  {
    return m_data.name();
  }

  const Name&
  identity() const noexcept
  {
    return m_parts.identity;
  }

  Name
  keyName() const
  {
    return name().getPrefix(-2);
  }

  const Component&
  keyId() const noexcept
  {
    return m_parts.keyId;
  }

  const Component&
  issuerId() const noexcept
  {
    return m_parts.issuerId;
  }

  /// Numeric version, or 0 when the component is not a decimal number.
  uint64_t
  version() const
  {
    return m_parts.version.toNumber().value_or(0);
  }

  const crypto::PublicKey&
  publicKey() const noexcept
  {
    return m_key;
  }

  const ValidityPeriod&
  validity() const noexcept
  {
    return m_validity;
  }

  /// Key name in the KeyLocator; empty for digest-signed request shells.
  Name
  signerKeyName() const;

  bool
  isSelfSigned() const
  {
    return signerKeyName() == keyName();
  }

  bool
  isValidAt(TimePoint t, Clock::duration notBeforeTolerance = CLOCK_SKEW_TOLERANCE) const
  {
    return m_validity.contains(t, notBeforeTolerance);
  }

  Bytes
  wireEncode() const
  {
    return m_data.wireEncode();
  }

  static Certificate
  wireDecode(ByteView wire)
  {
    return Certificate(Data::wireDecode(wire));
  }

  /// Name with implicit digest.
  Name
  fullName() const
  {
    return m_data.fullName();
  }

  bool
  operator==(const Certificate& other) const
  {
    return m_data == other.m_data;
  }

private:
  Data m_data;
  CertNameParts m_parts;
  crypto::PublicKey m_key;
  ValidityPeriod m_validity;
};

struct IssueParams
{
  Name subjectIdentity;
  ValidityPeriod validity;
  Component issuerId;
  uint64_t version = 0;
  TimePoint now;
  Clock::duration maxValidity = Clock::duration::max();
  Clock::duration clockSkew = CLOCK_SKEW_TOLERANCE;
};

/**
 * @brief Signs a certificate for @p subjectKey with @p issuer.
 * @throw Error(InvalidArgument) empty identity
 * @throw Error(InvalidValidity) notBefore >= notAfter or notAfter <= now
 * @throw Error(ValidityTooLong) duration above maxValidity
 * @throw Error(ClockSkew) notBefore later than now + clockSkew
 */
Certificate
issueCertificate(const crypto::PublicKey& subjectKey, const IssueParams& params,
                 const crypto::KeyPair& issuer);

/// Self-signed certificate for @p pair, issuer-id "self".
Certificate
makeSelfSignedCertificate(const crypto::KeyPair& pair, const ValidityPeriod& validity,
                          uint64_t version);

/// Digest-signed certificate shell describing what a requester asks for.
Certificate
makeCertificateRequest(const crypto::KeyPair& pair, const ValidityPeriod& validity);

/// Base64 text of the encoded Data, one line.
std::string
certificateToText(const Certificate& cert);

Certificate
certificateFromText(std::string_view text);

/// @throw Error(StorageFailure) on I/O failure
Certificate
loadCertificate(const std::filesystem::path& path);

/// Writes via a temporary file and rename.
void
saveCertificate(const Certificate& cert, const std::filesystem::path& path);

} // namespace ndncert

#endif // NDNCERT_CERT_CERTIFICATE_HPP
