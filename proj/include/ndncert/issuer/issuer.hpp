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

#ifndef NDNCERT_ISSUER_ISSUER_HPP
#define NDNCERT_ISSUER_ISSUER_HPP

#include "ndncert/cert/revocation.hpp"
#include "ndncert/challenge/challenge-module.hpp"
#include "ndncert/issuer/issuer-config.hpp"
#include "ndncert/log/transparency-log.hpp"
#include "ndncert/protocol/replay-guard.hpp"
#include "ndncert/protocol/session.hpp"
#include "ndncert/security/key-file.hpp"
#include "ndncert/transport/repo.hpp"

namespace ndncert {

/// Unfinished requests are dropped after this long.
constexpr Seconds REQUEST_LIFETIME{3600};
/// Finished requests stay around this long so a lost final reply can be fetched again.
constexpr Seconds TERMINAL_RETENTION{60};

/// Everything an Issuer is built from.
struct IssuerSetup
{
  std::shared_ptr<const crypto::KeyPair> key;
  std::optional<Certificate> cert;
  Name caPrefix;
  Seconds maxValidity{86400};
  std::vector<NamePattern> namePatterns;
  std::vector<RedirectRule> redirects;
  ChallengeRegistry challenges;
  /// Anchor for presented and namespace-owner certificates; defaults to a self-signed cert.
  std::optional<Certificate> anchor;
  std::shared_ptr<Repo> repo;           ///< default: in-memory
  std::shared_ptr<TransparencyLog> log; ///< default: in-memory, signed by key
  std::string issuerId = "NDNCERT";
  std::optional<Seconds> reverifyAfter;
  std::vector<Name> denylist;
  std::filesystem::path stateFile;
  TimeSource* clock = &systemTimeSource();
  /// Consulted after the local repo when validating certificates from elsewhere.
  CertificateFetcher externalFetcher;
};

/**
 * @brief Certificate issuer: answers INFO, NEW, CHALLENGE, REVOKE and REVOKED Interests.
 *
 * Requests for different request ids run in parallel; packets of one request are
 * serialized. Session keys live only in memory. With a state file, request
 * bookkeeping survives a restart but unfinished requests come back as failed.
 */
class Issuer
{
public:
  /// @throw Error(InvalidArgument) for an inconsistent setup
  explicit
  Issuer(IssuerSetup setup);

  ~Issuer();

  Issuer(const Issuer&) = delete;
  Issuer& operator=(const Issuer&) = delete;

  /// Dispatch entry; nullopt for names this issuer does not serve.
  std::optional<Data>
  handle(const Interest& interest);

  /// Registers <ca>/CA for the protocol and <ca> for the repo.
  void
  registerWith(Forwarder& forwarder);

  const Name&
  caPrefix() const noexcept
  {
    return m_caPrefix;
  }

  const Certificate&
  certificate() const noexcept
  {
    return m_cert;
  }

  const crypto::KeyPair&
  key() const noexcept
  {
    return *m_key;
  }

  /// Current profile.
  CaProfile
  profile() const;

  /// Applies @p edit to the profile and publishes it under the next version.
  void
  updateProfile(const std::function<void(CaProfile&)>& edit);

  /// Revocation signed by this issuer.
  RevocationRecord
  revoke(const Name& certName, std::string reason);

  /**
   * @brief Accepts a revocation authorized by the issuer, the certificate key, or a namespace owner.
   * @throw Error(UnknownCert), Error(AlreadyRevoked), Error(Unauthorized)
   */
  RevocationRecord
  submitRevocation(const RevocationRecord& record);

  RevocationSet
  revokedSet() const;

  std::vector<RevocationRecord>
  revocations() const;

  /// Stop issuing (and renewing) certificates for @p identity.
  void
  deny(const Name& identity);

  void
  allow(const Name& identity);

  /// Drops expired request states; returns how many were removed.
  size_t
  collectGarbage();

  size_t
  requestCount() const;

  Repo&
  repo() noexcept
  {
    return *m_repo;
  }

  TransparencyLog&
  log() noexcept
  {
    return *m_log;
  }

  const TrustPolicy&
  trustPolicy() const noexcept
  {
    return m_policy;
  }

  /// Repo first, then the external fetcher.
  CertificateFetcher
  fetcher() const;

private:
  struct RequestState;

  Data
  handleNew(const Interest& interest);

  Data
  handleChallenge(const Interest& interest);

  std::optional<Data>
  handleInfo(const Interest& interest);

  Data
  handleRevoke(const Interest& interest);

  std::optional<Data>
  handleRevokedList(const Interest& interest);

  ChallengeMessage
  advance(RequestState& state, const ChallengeMessage& message, TimePoint now);

  void
  finishSuccess(RequestState& state, ChallengeMessage& reply, TimePoint now);

  /// Key under which @p record must verify; throws like submitRevocation().
  crypto::PublicKey
  authorize(const RevocationRecord& record, TimePoint now) const;

  RevocationRecord
  commitRevocation(const RevocationRecord& record, TimePoint now);

  /// Mirrors the persisted fields of @p state and rewrites the state file.
  void
  recordTransition(const RequestState& state);

  void
  publishProfile(CaProfile profile);

  bool
  isDenied(const Name& identity) const;

  void
  saveStateLocked() const;

  void
  loadState();

private:
  std::shared_ptr<const crypto::KeyPair> m_key;
  Certificate m_cert;
  Name m_caPrefix;
  TrustPolicy m_policy;
  ChallengeRegistry m_challenges;
  std::shared_ptr<Repo> m_repo;
  std::shared_ptr<TransparencyLog> m_log;
  Component m_issuerId;
  std::optional<Seconds> m_reverifyAfter;
  std::filesystem::path m_stateFile;
  TimeSource& m_clock;
  CertificateFetcher m_externalFetcher;
  ReplayGuard m_guard;
  MonotonicMillis m_versions;

  mutable std::mutex m_profileMutex;
  CaProfile m_profile;
  std::map<uint64_t, Data> m_profileData;

  mutable std::mutex m_revocationMutex;
  std::vector<RevocationRecord> m_revocations;
  RevocationSet m_revoked;

  struct StateSummary
  {
    RequestStatus status;
    Name identity;
    std::string challengeId;
    TimePoint createdAt;
    std::optional<TimePoint> finishedAt;
  };

  mutable std::mutex m_mutex; ///< requests, summaries, denylist, last-verified table
  std::map<RequestId, std::shared_ptr<RequestState>> m_requests;
  std::map<RequestId, StateSummary> m_summaries;
  std::set<Name> m_denylist;
  std::map<Name, TimePoint> m_lastVerified;
};

/// Builds the challenge set named in @p config (pin, email, possession).
ChallengeRegistry
makeChallengeRegistry(const IssuerConfig& config, TimeSource& clock = systemTimeSource());

/**
 * @brief Loads keys, certificates, repo and log named by @p config.
 * @throw Error(ConfigError) naming the file that is missing or unusable
 */
std::unique_ptr<Issuer>
makeIssuer(const IssuerConfig& config, TimeSource& clock = systemTimeSource());


} // namespace ndncert

#endif // NDNCERT_ISSUER_ISSUER_HPP
