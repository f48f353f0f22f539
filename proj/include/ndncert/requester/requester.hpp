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

#ifndef NDNCERT_REQUESTER_REQUESTER_HPP
#define NDNCERT_REQUESTER_REQUESTER_HPP

#include "ndncert/cert/revocation.hpp"
#include "ndncert/cert/validator.hpp"
#include "ndncert/protocol/profile.hpp"
#include "ndncert/protocol/session.hpp"
#include "ndncert/time-source.hpp"
#include "ndncert/transport/forwarder.hpp"

namespace ndncert {

/// Redirects followed automatically; a further redirect is reported as Error(Redirected).
constexpr size_t MAX_REDIRECT_DEPTH = 1;

struct RetryPolicy
{
  int tries = 3;
  Milliseconds timeout{2000};
};

/**
 * @brief Supplies parameters for the next CHALLENGE message.
 *
 * @p reply is null for the first message, which also carries the challenge selection.
 */
using ChallengeResponder = std::function<ParameterMap(const ChallengeMessage* reply)>;

/// PIN: @p readCode is asked for the code; with @p upFront it is sent in the first message.
ChallengeResponder
makePinResponder(std::function<std::string()> readCode, bool upFront);

ChallengeResponder
makeEmailResponder(std::string address, std::function<std::string()> readCode);

/// Proves possession of @p key, which @p cert certifies.
ChallengeResponder
makePossessionResponder(Certificate cert, std::shared_ptr<const crypto::KeyPair> key);

struct RequestOptions
{
  Name identity;
  std::string challenge;
  ChallengeResponder responder;
  /// Requested lifetime; defaults to the issuer's maximum.
  std::optional<Seconds> validity;
  size_t maxRounds = 16;
};

struct IssuanceResult
{
  Certificate certificate;
  CaProfile issuer; ///< the issuer that finally signed, after any redirect
  size_t redirects = 0;
};

/**
 * @brief One NEW + CHALLENGE run against one issuer.
 *
 * Single-owner. Phases only move forward; any error moves the session to Failed.
 */
class ClientSession
{
public:
  enum class Phase { Idle, NewSent, InChallenge, Done, Failed };

  ClientSession(Face& face, const CaProfile& profile, std::shared_ptr<const crypto::KeyPair> key,
                TimeSource& clock, MonotonicMillis& timestamps, RetryPolicy retry = {});

  Phase
  phase() const noexcept
  {
    return m_phase;
  }

  /**
   * @brief Sends NEW for a request shell over @p validity.
   *
   * An offer moves the session to InChallenge; a redirect list ends it (Done) and is returned.
   */
  NewResponse
  sendNew(const ValidityPeriod& validity);

  /// One sealed round trip; a Success reply moves the session to Done.
  ChallengeMessage
  sendChallenge(const ChallengeMessage& message);

  const RequestId&
  requestId() const;

  /// Offered challenges, available after sendNew().
  const std::vector<std::string>&
  offeredChallenges() const noexcept
  {
    return m_offered;
  }

private:
  void
  advanceTo(Phase next);

  template<typename Fn>
  auto
  guarded(Fn&& fn);

  Data
  exchange(const std::function<Interest()>& build, Interest& sent);

private:
  Face& m_face;
  CaProfile m_profile;
  std::shared_ptr<const crypto::KeyPair> m_key;
  TimeSource& m_clock;
  MonotonicMillis& m_timestamps;
  RetryPolicy m_retry;
  Phase m_phase = Phase::Idle;
  std::optional<SessionCipher> m_cipher;
  std::vector<std::string> m_offered;
};

/**
 * @brief Requester library: profile discovery, issuance, revocation.
 *
 * Everything the issuer returns is verified before it influences state: profiles chain
 * to the anchor, replies are signed by the profile's certificate, issued certificates
 * must certify exactly the requester's key.
 */
class Requester
{
public:
  Requester(Face& face, Certificate anchor, TimeSource& clock = systemTimeSource());

  void
  setRetryPolicy(RetryPolicy retry)
  {
    m_retry = retry;
  }

  const TrustPolicy&
  trustPolicy() const noexcept
  {
    return m_policy;
  }

  /// Certificates by key name over the face, with retries.
  CertificateFetcher
  fetcher() const;

  /**
   * @brief Fetches the latest profile of @p caPrefix and validates it against the anchor.
   * @throw Error(Unfetchable), Error(UntrustedProfile)
   */
  CaProfile
  discoverProfile(const Name& caPrefix);

  /**
   * @brief Runs NEW and CHALLENGE until a certificate is issued, following one redirect.
   * @throw Error(NameNotAllowed) identity outside the profile (checked before sending)
   * @throw Error(Redirected) redirect beyond MAX_REDIRECT_DEPTH
   * @throw Error(ValidationFailed) issued certificate does not certify @p key or does not chain
   * @throw Error with the issuer's code for error replies (ChallengeFailed, RenewDenied, ...)
   */
  IssuanceResult
  requestCertificate(const CaProfile& profile, std::shared_ptr<const crypto::KeyPair> key,
                     const RequestOptions& options);

  /**
   * @brief Sends a signed revocation record; @p signer must be the key that signed it.
   * @return the record as accepted by the issuer
   */
  RevocationRecord
  requestRevocation(const CaProfile& profile, const RevocationRecord& record, const crypto::KeyPair& signer);

  /// Current revocation list of the issuer, verified under its profile certificate.
  std::vector<RevocationRecord>
  fetchRevocations(const CaProfile& profile);

private:
  IssuanceResult
  request(const CaProfile& profile, std::shared_ptr<const crypto::KeyPair> key, const RequestOptions& options,
          size_t depth);

  Certificate
  fetchIssued(const CaProfile& profile, const Name& fullName, const crypto::KeyPair& key, const Name& identity);

  Data
  fetch(const std::function<Interest()>& build, const std::string& what);

  CertificateFetcher
  fetcherWith(const Certificate& extra) const;

private:
  Face& m_face;
  TrustPolicy m_policy;
  TimeSource& m_clock;
  RetryPolicy m_retry;
  MonotonicMillis m_timestamps;
};

/// Signed revocation record for @p certName.
RevocationRecord
makeRevocationRecord(const Name& certName, std::string reason, RevokedBy by, const crypto::KeyPair& signer,
                     TimePoint now, std::optional<Certificate> signerCert = std::nullopt);

} // namespace ndncert

#endif // NDNCERT_REQUESTER_REQUESTER_HPP
