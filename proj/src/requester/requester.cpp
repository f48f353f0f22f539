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

#include "ndncert/requester/requester.hpp"
#include "ndncert/challenge/challenge-possession.hpp"
#include "ndncert/protocol/exchange.hpp"
#include "ndncert/security/signing.hpp"
#include "ndncert/transport/repo.hpp"

#include <sstream>

namespace ndncert {

// ---- responders -----------------------------------------------------------------------------

ChallengeResponder
makePinResponder(std::function<std::string()> readCode, bool upFront)
{
  return [readCode = std::move(readCode), upFront] (const ChallengeMessage* reply) {
    ParameterMap params;
    if (reply != nullptr || upFront) {
      params.set(param::CODE, readCode());
    }
    return params;
  };
}

ChallengeResponder
makeEmailResponder(std::string address, std::function<std::string()> readCode)
{
  return [address = std::move(address), readCode = std::move(readCode)] (const ChallengeMessage* reply) {
    ParameterMap params;
    if (reply == nullptr) {
      params.set(param::EMAIL, address);
    }
    else {
      params.set(param::CODE, readCode());
    }
    return params;
  };
}

ChallengeResponder
makePossessionResponder(Certificate cert, std::shared_ptr<const crypto::KeyPair> key)
{
  return [cert = std::move(cert), key = std::move(key)] (const ChallengeMessage* reply) {
    ParameterMap params;
    if (reply == nullptr) {
      params.set(param::CERT, ByteView(cert.wireEncode()));
    }
    else {
      params.set(param::PROOF, ByteView(signPossessionNonce(reply->params.require(param::NONCE), *key)));
    }
    return params;
  };
}

// ---- ClientSession --------------------------------------------------------------------------

ClientSession::ClientSession(Face& face, const CaProfile& profile, std::shared_ptr<const crypto::KeyPair> key,
                             TimeSource& clock, MonotonicMillis& timestamps, RetryPolicy retry)
  : m_face(face)
  , m_profile(profile)
  , m_key(std::move(key))
  , m_clock(clock)
  , m_timestamps(timestamps)
  , m_retry(retry)
{
  if (!m_profile.caCertificate) {
    throw Error(ErrorCode::InvalidArgument, "profile carries no issuer certificate");
  }
  if (!m_key) {
    throw Error(ErrorCode::InvalidArgument, "session needs a key");
  }
}

void
ClientSession::advanceTo(Phase next)
{
  if (next < m_phase) {
    throw Error(ErrorCode::InvalidArgument, "session phase cannot move backwards");
  }
  m_phase = next;
}

template<typename Fn>
auto
ClientSession::guarded(Fn&& fn)
{
  try {
    return fn();
  }
  catch (...) {
    m_phase = Phase::Failed;
    m_cipher.reset();
    throw;
  }
}

Data
ClientSession::exchange(const std::function<Interest()>& build, Interest& sent)
{
  auto data = expressWithRetries(m_face, [&] {
    sent = build();
    return sent;
  }, m_retry.tries, m_retry.timeout);
  checkReply(data, sent, m_profile.caCertificate->publicKey());
  return data;
}

NewResponse
ClientSession::sendNew(const ValidityPeriod& validity)
{
  if (m_phase != Phase::Idle) {
    throw Error(ErrorCode::InvalidArgument, "NEW was already sent");
  }
  return guarded([&] {
    crypto::EphemeralKey ephemeral;
    NewRequest payload{ephemeral.publicPoint(), makeCertificateRequest(*m_key, validity)};
    advanceTo(Phase::NewSent);
    Interest sent;
    auto data = exchange([&] {
      return buildNewInterest(*m_key, payload, m_profile.caPrefix, m_timestamps.next(m_clock.now()));
    }, sent);
    auto response = NewResponse::decode(data.content());
    if (response.isRedirect()) {
      advanceTo(Phase::Done);
      return response;
    }
    m_cipher.emplace(ephemeral.deriveSessionKey(response.ecdhPub, response.salt), response.requestId);
    m_offered = response.challenges;
    advanceTo(Phase::InChallenge);
    return response;
  });
}

ChallengeMessage
ClientSession::sendChallenge(const ChallengeMessage& message)
{
  if (m_phase != Phase::InChallenge) {
    throw Error(ErrorCode::InvalidArgument, "session is not in the challenge phase");
  }
  return guarded([&] {
    Interest sent;
    auto data = exchange([&] {
      return buildChallengeInterest(*m_key, *m_cipher, message, m_profile.caPrefix,
                                    m_timestamps.next(m_clock.now()));
    }, sent);
    auto reply = m_cipher->open(SealedPayload::decode(data.content()), data.name());
    if (reply.status == RequestStatus::Success) {
      if (!reply.issuedCertName) {
        throw Error(ErrorCode::ValidationFailed, "success reply names no certificate");
      }
      advanceTo(Phase::Done);
      m_cipher.reset();
    }
    else if (reply.status == RequestStatus::Failure) {
      throw Error(ErrorCode::ChallengeFailed, reply.challengeStatus);
    }
    return reply;
  });
}

const RequestId&
ClientSession::requestId() const
{
  if (!m_cipher) {
    throw Error(ErrorCode::InvalidArgument, "session has no request id");
  }
  return m_cipher->requestId();
}

// ---- Requester ------------------------------------------------------------------------------

Requester::Requester(Face& face, Certificate anchor, TimeSource& clock)
  : m_face(face)
  , m_policy(std::move(anchor))
  , m_clock(clock)
{
}

CertificateFetcher
Requester::fetcher() const
{
  return makeNetworkFetcher(m_face, m_retry.timeout);
}

CertificateFetcher
Requester::fetcherWith(const Certificate& extra) const
{
  return [network = fetcher(), extra] (const Name& keyName) {
    auto found = network(keyName);
    if (found.empty() && keyName.isPrefixOf(extra.name())) {
      found.push_back(extra.data());
    }
    return found;
  };
}

Data
Requester::fetch(const std::function<Interest()>& build, const std::string& what)
{
  try {
    return expressWithRetries(m_face, build, m_retry.tries, m_retry.timeout);
  }
  catch (const Error& e) {
    if (e.code() == ErrorCode::Timeout) {
      throw Error(ErrorCode::Unfetchable, "cannot fetch " + what + ": " + e.detail());
    }
    throw;
  }
}

CaProfile
Requester::discoverProfile(const Name& caPrefix)
{
  auto now = m_clock.now();
  auto untrusted = [&] (const std::string& why) {
    return Error(ErrorCode::UntrustedProfile, "profile of " + caPrefix.toUri() + ": " + why);
  };
  auto checkChain = [&] (const Data& data, const CertificateFetcher& fetch) {
    auto result = validateChain(data, m_policy, fetch, {}, now);
    if (!result.isValid()) {
      std::ostringstream os;
      os << result;
      throw untrusted(os.str());
    }
  };

  auto metadata = fetch([&] {
    Interest interest(makeInfoMetadataName(caPrefix));
    interest.setCanBePrefix(true).setMustBeFresh(true);
    return interest;
  }, "profile metadata of " + caPrefix.toUri());
  checkChain(metadata, fetcher());

  Name profileName;
  try {
    profileName = Name::wireDecode(metadata.content());
  }
  catch (const Error& e) {
    throw untrusted("metadata does not name a profile");
  }
  if (!makeInfoPrefix(caPrefix).isPrefixOf(profileName) || profileName.size() != caPrefix.size() + 3) {
    throw untrusted("metadata points outside " + makeInfoPrefix(caPrefix).toUri());
  }

  auto data = fetch([&] { return Interest(profileName); }, profileName.toUri());
  CaProfile profile;
  try {
    profile = CaProfile::decode(data.content());
  }
  catch (const Error& e) {
    throw untrusted(e.detail());
  }
  if (profile.caPrefix != caPrefix || !profile.caCertificate) {
    throw untrusted("profile describes another issuer");
  }
  if (data.signatureInfo().keyLocator() != profile.caCertificate->keyName() ||
      !verifyData(data, profile.caCertificate->publicKey())) {
    throw untrusted("profile is not signed by the certificate it carries");
  }
  checkChain(data, fetcherWith(*profile.caCertificate));
  return profile;
}

IssuanceResult
Requester::requestCertificate(const CaProfile& profile, std::shared_ptr<const crypto::KeyPair> key,
                              const RequestOptions& options)
{
  return request(profile, std::move(key), options, 0);
}

IssuanceResult
Requester::request(const CaProfile& profile, std::shared_ptr<const crypto::KeyPair> key,
                   const RequestOptions& options, size_t depth)
{
  if (!key || key->identity() != options.identity) {
    throw Error(ErrorCode::InvalidArgument, "key must belong to " + options.identity.toUri());
  }
  if (!options.responder) {
    throw Error(ErrorCode::InvalidArgument, "no challenge responder");
  }
  bool redirectExpected = profile.findRedirect(options.identity) != nullptr;
  if (!redirectExpected) {
    if (!profile.allowsIdentity(options.identity)) {
      throw Error(ErrorCode::NameNotAllowed, options.identity.toUri() + " is outside " + profile.caPrefix.toUri());
    }
    if (std::find(profile.challenges.begin(), profile.challenges.end(), options.challenge) ==
        profile.challenges.end()) {
      throw Error(ErrorCode::UnknownChallenge, profile.caPrefix.toUri() + " does not offer '" +
                  options.challenge + "'");
    }
  }

  auto now = m_clock.now();
  auto lifetime = options.validity.value_or(profile.maxValidity);
  auto validity = ValidityPeriod::make(now, now + lifetime);

  ClientSession session(m_face, profile, key, m_clock, m_timestamps, m_retry);
  auto response = session.sendNew(validity);
  if (response.isRedirect()) {
    if (depth >= MAX_REDIRECT_DEPTH) {
      throw Error(ErrorCode::Redirected, profile.caPrefix.toUri() + " redirects to " +
                  response.redirects.front().caPrefix.toUri());
    }
    const auto& target = response.redirects.front();
    auto next = discoverProfile(target.caPrefix);
    if (!target.certName.empty() && !target.certName.isPrefixOf(next.caCertificate->fullName())) {
      throw Error(ErrorCode::UntrustedProfile, "redirect target " + target.caPrefix.toUri() +
                  " does not use certificate " + target.certName.toUri());
    }
    auto result = request(next, std::move(key), options, depth + 1);
    result.redirects += 1;
    return result;
  }

  ChallengeMessage message;
  message.challengeId = options.challenge;
  message.status = RequestStatus::BeforeChallenge;
  message.params = options.responder(nullptr);
  for (size_t round = 0; round < options.maxRounds; ++round) {
    auto reply = session.sendChallenge(message);
    if (session.phase() == ClientSession::Phase::Done) {
      auto cert = fetchIssued(profile, *reply.issuedCertName, *key, options.identity);
      return IssuanceResult{std::move(cert), profile, 0};
    }
    message.status = RequestStatus::Challenge;
    message.params = options.responder(&reply);
  }
  throw Error(ErrorCode::ChallengeFailed, "challenge did not finish within " +
              std::to_string(options.maxRounds) + " rounds");
}

Certificate
Requester::fetchIssued(const CaProfile& profile, const Name& fullName, const crypto::KeyPair& key,
                       const Name& identity)
{
  auto data = fetch([&] { return Interest(fullName); }, fullName.toUri());
  auto invalid = [&] (const std::string& why) {
    return Error(ErrorCode::ValidationFailed, "issued certificate " + data.name().toUri() + ": " + why);
  };
  std::optional<Certificate> cert;
  try {
    cert.emplace(data);
  }
  catch (const Error& e) {
    throw invalid(e.detail());
  }
  if (cert->fullName() != fullName) {
    throw invalid("does not match the announced name");
  }
  if (!(cert->publicKey() == key.publicKey()) || cert->keyName() != key.keyName()) {
    throw invalid("does not certify the requested key");
  }
  if (cert->identity() != identity) {
    throw invalid("certifies another identity");
  }
  if (cert->signerKeyName() != profile.caCertificate->keyName()) {
    throw invalid("not signed by " + profile.caCertificate->keyName().toUri());
  }
  auto result = validateChain(cert->data(), m_policy, fetcherWith(*profile.caCertificate), {}, m_clock.now());
  if (!result.isValid()) {
    std::ostringstream os;
    os << result;
    throw invalid(os.str());
  }
  return *cert;
}

RevocationRecord
Requester::requestRevocation(const CaProfile& profile, const RevocationRecord& record,
                             const crypto::KeyPair& signer)
{
  if (!profile.caCertificate) {
    throw Error(ErrorCode::InvalidArgument, "profile carries no issuer certificate");
  }
  if (record.signerKeyName != signer.keyName()) {
    throw Error(ErrorCode::InvalidArgument, "record was not signed by " + signer.keyName().toUri());
  }
  Interest sent;
  auto data = expressWithRetries(m_face, [&] {
    Interest interest(makeRevokeName(profile.caPrefix));
    interest.setApplicationParameters(record.wireEncode());
    interest.setTimestamp(m_timestamps.next(m_clock.now()));
    signInterest(interest, signer);
    sent = interest;
    return interest;
  }, m_retry.tries, m_retry.timeout);
  checkReply(data, sent, profile.caCertificate->publicKey());

  std::optional<RevocationRecord> accepted;
  try {
    tlv::Reader reader(data.content());
    reader.next(); // nonce echo, already checked
    accepted = RevocationRecord::wireDecode(reader.next());
    if (!reader.atEnd()) {
      throw Error(ErrorCode::MalformedPayload, "trailing bytes");
    }
  }
  catch (const Error& e) {
    throw Error(ErrorCode::IssuerError, "malformed revocation acknowledgement: " + e.detail());
  }
  if (!(*accepted == record)) {
    throw Error(ErrorCode::IssuerError, "issuer acknowledged a different revocation record");
  }
  return *accepted;
}

std::vector<RevocationRecord>
Requester::fetchRevocations(const CaProfile& profile)
{
  if (!profile.caCertificate) {
    throw Error(ErrorCode::InvalidArgument, "profile carries no issuer certificate");
  }
  auto data = fetch([&] {
    Interest interest(makeRevokedListPrefix(profile.caPrefix));
    interest.setCanBePrefix(true).setMustBeFresh(true);
    return interest;
  }, "revocation list of " + profile.caPrefix.toUri());
  if (!verifyData(data, profile.caCertificate->publicKey())) {
    throw Error(ErrorCode::BadSignature, "revocation list is not signed by the issuer");
  }
  return decodeRevocationList(data.content());
}

RevocationRecord
makeRevocationRecord(const Name& certName, std::string reason, RevokedBy by, const crypto::KeyPair& signer,
                     TimePoint now, std::optional<Certificate> signerCert)
{
  RevocationRecord record;
  record.certName = certName;
  record.reason = std::move(reason);
  record.signedBy = by;
  record.timestamp = toUnixMillis(now);
  record.signerCertificate = std::move(signerCert);
  record.sign(signer);
  return record;
}

} // namespace ndncert
