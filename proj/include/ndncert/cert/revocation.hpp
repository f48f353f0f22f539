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

#ifndef NDNCERT_CERT_REVOCATION_HPP
#define NDNCERT_CERT_REVOCATION_HPP

#include "ndncert/cert/certificate.hpp"

#include <set>

namespace ndncert {

/// Who vouched for a revocation.
enum class RevokedBy : uint64_t {
  Issuer = 0,
  CertificateKey = 1,
  /// Holder of a certificate for an ancestor namespace of the revoked identity.
  NamespaceOwner = 2,
};

std::string_view
toString(RevokedBy by);

/**
 * @brief Signed statement that a certificate is revoked.
 *
 * Signature covers CertName, reason, RevokedBy, timestamp, signer key name and, for
 * namespace-owner records, the signer's certificate.
 */
struct RevocationRecord
{
  Name certName;
  std::string reason;
  RevokedBy signedBy = RevokedBy::Issuer;
  uint64_t timestamp = 0; ///< ms since epoch
  Name signerKeyName;
  std::optional<Certificate> signerCertificate;
  Bytes signature;

  Bytes
  signedPortion() const;

  /// Sets signerKeyName and signature.
  void
  sign(const crypto::KeyPair& signer);

  bool
  verify(const crypto::PublicKey& key) const;

  Bytes
  wireEncode() const;

  static RevocationRecord
  wireDecode(const tlv::Element& e);

  static RevocationRecord
  wireDecode(ByteView wire);

  bool
  operator==(const RevocationRecord& other) const
  {
    return wireEncode() == other.wireEncode();
  }
};

/// Certificate names known to be revoked.
using RevocationSet = std::set<Name>;

/// Content of the revocation-list Data: concatenated RevocationRecord TLVs.
Bytes
encodeRevocationList(const std::vector<RevocationRecord>& records);

std::vector<RevocationRecord>
decodeRevocationList(ByteView content);

} // namespace ndncert

#endif // NDNCERT_CERT_REVOCATION_HPP
