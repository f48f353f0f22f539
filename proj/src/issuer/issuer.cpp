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

#include "ndncert/issuer/issuer.hpp"
#include "ndncert/challenge/challenge-email.hpp"
#include "ndncert/challenge/challenge-pin.hpp"
#include "ndncert/challenge/challenge-possession.hpp"
#include "ndncert/file-util.hpp"
#include "ndncert/protocol/exchange.hpp"
#include "ndncert/security/signing.hpp"

#include <sstream>

namespace ndncert {

namespace {

constexpr Milliseconds LIST_FRESHNESS{1000};
constexpr Milliseconds PROFILE_FRESHNESS{3600 * 1000};

const std::string SESSION_LOST = "session lost when the issuer restarted";

std::optional<uint64_t>
statusFromText(std::string_view text)
{
  for (uint64_t s = 0; s <= static_cast<uint64_t>(RequestStatus::Failure); ++s) {
    if (toString(static_cast<RequestStatus>(s)) == text) {
      return s;
    }
  }
  return std::nullopt;
}

TrustPolicy
makePolicy(const IssuerSetup& setup)
{
  if (setup.anchor) {
    return TrustPolicy(*setup.anchor, {});
  }
  if (!setup.cert || !setup.cert->isSelfSigned()) {
    throw Error(ErrorCode::InvalidArgument, "an issuer whose certificate is not self-signed needs a trust anchor");
  }
  return TrustPolicy(*setup.cert, {});
}

} // namespace

struct Issuer::RequestState
{
  RequestId id{};
  Name identity;
  std::optional<Certificate> certRequest; ///< absent after a restart
  std::optional<SessionCipher> cipher;    ///< never persisted
  RequestStatus status = RequestStatus::BeforeChallenge;
  std::string challengeId;
  std::optional<ChallengeState> challenge;
  TimePoint createdAt;
  std::optional<TimePoint> finishedAt;
  std::string failureInfo;
  Bytes lastMessage;
  std::optional<ChallengeMessage> lastReply;
  std::mutex mutex;
};

Issuer::Issuer(IssuerSetup setup)
  : m_key(std::move(setup.key))
  , m_cert(setup.cert ? *setup.cert : throw Error(ErrorCode::InvalidArgument, "issuer needs a certificate"))
  , m_caPrefix(setup.caPrefix)
  , m_policy(makePolicy(setup))
  , m_challenges(std::move(setup.challenges))
  , m_repo(setup.repo ? std::move(setup.repo) : std::make_shared<Repo>())
  , m_log(setup.log ? std::move(setup.log) : std::make_shared<TransparencyLog>(m_key))
  , m_issuerId(Component::fromString(setup.issuerId))
  , m_reverifyAfter(setup.reverifyAfter)
  , m_stateFile(std::move(setup.stateFile))
  , m_clock(*setup.clock)
  , m_externalFetcher(std::move(setup.externalFetcher))
  , m_denylist(setup.denylist.begin(), setup.denylist.end())
{
  if (!m_key || !(m_key->publicKey() == m_cert.publicKey())) {
    throw Error(ErrorCode::InvalidArgument, "issuer key does not match its certificate");
  }
  if (m_caPrefix.empty() || !m_caPrefix.isPrefixOf(m_cert.identity())) {
    throw Error(ErrorCode::InvalidArgument, "CA prefix " + m_caPrefix.toUri() + " must be a prefix of " +
                m_cert.identity().toUri());
  }
  if (setup.maxValidity <= Seconds::zero()) {
    throw Error(ErrorCode::InvalidArgument, "max validity must be positive");
  }
  if (setup.issuerId.empty()) {
    throw Error(ErrorCode::InvalidArgument, "issuer id must not be empty");
  }
  if (m_challenges.ids().empty()) {
    throw Error(ErrorCode::InvalidArgument, "issuer offers no challenges");
  }
  if (!m_repo->find(m_cert.name())) {
    m_repo->insert(m_cert);
  }

  CaProfile profile;
  profile.caPrefix = m_caPrefix;
  profile.caCertificate = m_cert;
  profile.maxValidity = setup.maxValidity;
  profile.challenges = m_challenges.ids();
  profile.namePatterns = std::move(setup.namePatterns);
  if (profile.namePatterns.empty()) {
    profile.namePatterns.emplace_back(m_caPrefix.toUri() + "/*");
  }
  profile.redirects = std::move(setup.redirects);
  profile.version = 1;
  publishProfile(std::move(profile));

  if (!m_stateFile.empty()) {
    loadState();
  }
}

Issuer::~Issuer() = default;

void
Issuer::registerWith(Forwarder& forwarder)
{
  Name caName = m_caPrefix;
  caName.append("CA");
  forwarder.registerPrefix(caName, [this] (const Interest& i) { return handle(i); });
  forwarder.registerPrefix(m_caPrefix, m_repo->handler());
}

std::optional<Data>
Issuer::handle(const Interest& interest)
{
  auto kind = classifyRequest(m_caPrefix, interest.name());
  if (kind == RequestKind::Info) {
    return handleInfo(interest);
  }
  if (kind == RequestKind::RevokedList) {
    return handleRevokedList(interest);
  }
  if (kind == RequestKind::Unknown) {
    return std::nullopt;
  }
  try {
    switch (kind) {
      case RequestKind::New:
        return handleNew(interest);
      case RequestKind::Challenge:
        return handleChallenge(interest);
      default:
        return handleRevoke(interest);
    }
  }
  catch (const Error& e) {
    return makeErrorReply(interest, e.code(), e.detail(), *m_key);
  }
}

// ---- profile --------------------------------------------------------------------------------

void
Issuer::publishProfile(CaProfile profile)
{
  for (const auto& id : profile.challenges) {
    if (!m_challenges.contains(id)) {
      throw Error(ErrorCode::InvalidArgument, "profile lists unknown challenge '" + id + "'");
    }
  }
  Data data(makeProfileName(m_caPrefix, profile.version));
  data.setContent(profile.encode());
  data.setFreshnessPeriod(PROFILE_FRESHNESS);
  signData(data, *m_key);
  std::lock_guard lock(m_profileMutex);
  m_profileData.emplace(profile.version, std::move(data));
  m_profile = std::move(profile);
}

CaProfile
Issuer::profile() const
{
  std::lock_guard lock(m_profileMutex);
  return m_profile;
}

void
Issuer::updateProfile(const std::function<void(CaProfile&)>& edit)
{
  auto next = profile();
  edit(next);
  next.caPrefix = m_caPrefix;
  next.caCertificate = m_cert;
  if (next.maxValidity <= Seconds::zero()) {
    throw Error(ErrorCode::InvalidArgument, "max validity must be positive");
  }
  next.version = profile().version + 1;
  publishProfile(std::move(next));
}

std::optional<Data>
Issuer::handleInfo(const Interest& interest)
{
  Name name = interest.name().withoutDigest();
  Name meta = makeInfoMetadataName(m_caPrefix);
  std::lock_guard lock(m_profileMutex);
  const auto& latest = m_profileData.rbegin()->second;

  if (meta.isPrefixOf(name)) {
    Name replyName = meta;
    replyName.append(Component::fromNumber(m_profile.version));
    if (name != meta && name != replyName) {
      return std::nullopt;
    }
    Data data(replyName);
    data.setContent(latest.name().wireEncode());
    data.setFreshnessPeriod(LIST_FRESHNESS);
    signData(data, *m_key);
    return data;
  }
  for (const auto& [version, data] : m_profileData) {
    if (data.name() == name) {
      return data;
    }
  }
  if (interest.canBePrefix() && name.isPrefixOf(latest.name())) {
    return latest;
  }
  return std::nullopt;
}

// ---- NEW ------------------------------------------------------------------------------------

Data
Issuer::handleNew(const Interest& interest)
{
  auto now = m_clock.now();
  collectGarbage();
  auto request = parseNewInterest(interest, m_guard, now);
  const auto& shell = request.certRequest;
  Name identity = shell.identity();
  auto prof = profile();

  NewResponse response;
  response.nonce = interest.nonce();
  for (const auto& rule : prof.redirects) {
    if (rule.pattern.matches(identity)) {
      response.redirects.push_back({rule.caPrefix, rule.certName});
    }
  }
  if (response.isRedirect()) {
    return makeReply(interest, response.encode(), *m_key);
  }

  if (!prof.allowsIdentity(identity)) {
    throw Error(ErrorCode::NameNotAllowed, identity.toUri() + " is outside this issuer's namespace");
  }
  if (isDenied(identity)) {
    throw Error(ErrorCode::RenewDenied, "issuer no longer issues certificates for " + identity.toUri());
  }
  const auto& validity = shell.validity();
  if (validity.notAfter <= validity.notBefore || validity.notAfter <= now) {
    throw Error(ErrorCode::InvalidValidity, "requested validity period is empty or already over");
  }
  if (validity.duration() > prof.maxValidity) {
    throw Error(ErrorCode::ValidityTooLong, "requested validity exceeds " +
                std::to_string(prof.maxValidity.count()) + " s");
  }
  if (validity.notBefore > now + CLOCK_SKEW_TOLERANCE) {
    throw Error(ErrorCode::ClockSkew, "requested notBefore is too far in the future");
  }

  crypto::EphemeralKey ephemeral;
  crypto::fillRandom(response.salt);
  auto sessionKey = ephemeral.deriveSessionKey(request.ecdhPub, response.salt);

  auto state = std::make_shared<RequestState>();
  state->identity = identity;
  state->certRequest = shell;
  state->createdAt = now;
  {
    std::lock_guard lock(m_mutex);
    do {
      state->id = makeRequestId();
    } while (m_requests.count(state->id));
    m_requests.emplace(state->id, state);
  }
  state->cipher.emplace(std::move(sessionKey), state->id);
  recordTransition(*state);

  response.ecdhPub = ephemeral.publicPoint();
  response.requestId = state->id;
  response.challenges = prof.challenges;
  return makeReply(interest, response.encode(), *m_key);
}

// ---- CHALLENGE ------------------------------------------------------------------------------

Data
Issuer::handleChallenge(const Interest& interest)
{
  auto now = m_clock.now();
  collectGarbage();
  auto id = requestIdFromChallengeName(m_caPrefix, interest.name());
  std::shared_ptr<RequestState> state;
  {
    std::lock_guard lock(m_mutex);
    auto it = m_requests.find(id);
    if (it != m_requests.end()) {
      state = it->second;
    }
  }
  if (!state) {
    throw Error(ErrorCode::UnknownRequestId, "no pending request " + toHex(id));
  }

  std::lock_guard lock(state->mutex);
  if (!state->cipher) {
    throw Error(ErrorCode::ChallengeFailed, SESSION_LOST);
  }
  auto message = openChallengeInterest(interest, state->certRequest->publicKey(), *state->cipher, m_guard, now);
  auto encoded = message.encode();

  ChallengeMessage reply;
  if (state->lastReply && (encoded == state->lastMessage || state->finishedAt)) {
    // retransmission after a lost reply, or any message after the request finished
    reply = *state->lastReply;
  }
  else {
    reply = advance(*state, message, now);
    state->lastMessage = std::move(encoded);
    state->lastReply = reply;
  }

  if (state->status == RequestStatus::Failure) {
    return makeErrorReply(interest, ErrorCode::ChallengeFailed, state->failureInfo, *m_key);
  }
  return makeChallengeReply(interest, *state->cipher, reply, *m_key);
}

ChallengeMessage
Issuer::advance(RequestState& state, const ChallengeMessage& message, TimePoint now)
{
  ChallengeContext ctx;
  ctx.identity = state.identity;
  ctx.requestId = state.id;
  ctx.now = now;
  ctx.policy = &m_policy;
  ctx.fetch = fetcher();
  ctx.revoked = revokedSet();

  ChallengeStep step;
  if (state.status == RequestStatus::BeforeChallenge) {
    auto offered = profile().challenges;
    if (std::find(offered.begin(), offered.end(), message.challengeId) == offered.end()) {
      throw Error(ErrorCode::UnknownChallenge, "challenge '" + message.challengeId + "' is not offered");
    }
    step = m_challenges.get(message.challengeId).start(ctx, message.params);
    state.challengeId = message.challengeId;
    state.status = RequestStatus::Challenge;
  }
  else {
    if (message.challengeId != state.challengeId) {
      throw Error(ErrorCode::MalformedPayload, "request is running challenge '" + state.challengeId + "'");
    }
    step = m_challenges.get(state.challengeId).proceed(*state.challenge, ctx, message.params);
  }
  state.challenge = step.state;

  ChallengeMessage reply;
  reply.challengeId = state.challengeId;
  reply.challengeStatus = step.state.statusText;
  reply.params = std::move(step.reply);
  switch (step.state.outcome) {
    case ChallengeOutcome::NeedMore:
      break;
    case ChallengeOutcome::Success:
      finishSuccess(state, reply, now);
      break;
    case ChallengeOutcome::Failure:
      state.status = RequestStatus::Failure;
      state.finishedAt = now;
      state.failureInfo = std::string(toString(step.state.failureCode)) + ": " + step.state.failureInfo;
      break;
  }
  reply.status = state.status;
  recordTransition(state);
  return reply;
}

void
Issuer::finishSuccess(RequestState& state, ChallengeMessage& reply, TimePoint now)
{
  auto fail = [&] (ErrorCode code, const std::string& info) {
    state.status = RequestStatus::Failure;
    state.finishedAt = now;
    state.failureInfo = std::string(toString(code)) + ": " + info;
    reply.challengeStatus = std::string(challenge_status::FAILURE);
    reply.params = {};
  };
  const auto& shell = *state.certRequest;
  const auto& identity = state.identity;
  if (isDenied(identity)) {
    fail(ErrorCode::RenewDenied, "issuer no longer issues certificates for " + identity.toUri());
    return;
  }

  const auto& presented = state.challenge->presented;
  bool renewalByPossession = presented && presented->identity() == identity;
  {
    std::lock_guard lock(m_mutex);
    if (renewalByPossession && m_reverifyAfter) {
      auto it = m_lastVerified.find(identity);
      if (it == m_lastVerified.end() || now - it->second > *m_reverifyAfter) {
        fail(ErrorCode::ChallengeFailed, identity.toUri() + " must be verified again with a non-possession challenge");
        return;
      }
    }
    else if (!renewalByPossession) {
      m_lastVerified[identity] = now;
    }
  }

  bool renewal = false;
  Name keyPrefix = identity;
  keyPrefix.append("KEY");
  for (const auto& existing : m_repo->list(keyPrefix)) {
    renewal = renewal || (existing.identity() == identity && existing.signerKeyName() == m_key->keyName());
  }

  try {
    IssueParams params{identity, shell.validity(), m_issuerId, m_versions.next(now), now,
                       profile().maxValidity, CLOCK_SKEW_TOLERANCE};
    auto cert = issueCertificate(shell.publicKey(), params, *m_key);
    // write-ahead: the log entry exists before the certificate is published anywhere
    m_log->append(renewal ? LogRecordType::Renewal : LogRecordType::Issuance, cert.name(),
                  crypto::sha256(cert.wireEncode()), now);
    m_repo->insert(cert);
    state.status = RequestStatus::Success;
    state.finishedAt = now;
    reply.issuedCertName = cert.fullName();
  }
  catch (const Error& e) {
    fail(e.code(), e.detail());
  }
}

// ---- revocation -----------------------------------------------------------------------------

crypto::PublicKey
Issuer::authorize(const RevocationRecord& record, TimePoint now) const
{
  auto cert = m_repo->find(record.certName);
  if (!cert || cert->signerKeyName() != m_key->keyName()) {
    throw Error(ErrorCode::UnknownCert, record.certName.toUri() + " was not issued here");
  }
  if (revokedSet().count(record.certName)) {
    throw Error(ErrorCode::AlreadyRevoked, record.certName.toUri() + " is already revoked");
  }

  auto unauthorized = [] (const std::string& why) {
    return Error(ErrorCode::Unauthorized, why);
  };
  std::optional<crypto::PublicKey> key;
  switch (record.signedBy) {
    case RevokedBy::Issuer:
      if (record.signerKeyName != m_key->keyName()) {
        throw unauthorized("issuer revocation not signed by the issuer key");
      }
      key = m_key->publicKey();
      break;
    case RevokedBy::CertificateKey:
      if (record.signerKeyName != cert->keyName()) {
        throw unauthorized("certificate-key revocation not signed by the certificate key");
      }
      key = cert->publicKey();
      break;
    case RevokedBy::NamespaceOwner: {
      if (!record.signerCertificate || record.signerCertificate->keyName() != record.signerKeyName) {
        throw unauthorized("namespace-owner revocation must carry the owner's certificate");
      }
      const auto& owner = *record.signerCertificate;
      if (!owner.identity().isPrefixOf(cert->identity()) || owner.identity().size() >= cert->identity().size()) {
        throw unauthorized(owner.identity().toUri() + " does not own " + cert->identity().toUri());
      }
      auto result = validateChain(owner.data(), m_policy, fetcher(), revokedSet(), now);
      if (!result.isValid()) {
        std::ostringstream os;
        os << "owner certificate rejected: " << result;
        throw unauthorized(os.str());
      }
      key = owner.publicKey();
      break;
    }
    default:
      throw unauthorized("unknown revocation authority");
  }
  if (!record.verify(*key)) {
    throw unauthorized("revocation signature does not verify");
  }
  return *key;
}

RevocationRecord
Issuer::commitRevocation(const RevocationRecord& record, TimePoint now)
{
  std::lock_guard lock(m_revocationMutex);
  if (m_revoked.count(record.certName)) {
    throw Error(ErrorCode::AlreadyRevoked, record.certName.toUri() + " is already revoked");
  }
  m_log->append(LogRecordType::Revocation, record.certName, crypto::sha256(record.wireEncode()), now);
  m_revocations.push_back(record);
  m_revoked.insert(record.certName);
  return record;
}

RevocationRecord
Issuer::submitRevocation(const RevocationRecord& record)
{
  auto now = m_clock.now();
  authorize(record, now);
  return commitRevocation(record, now);
}

RevocationRecord
Issuer::revoke(const Name& certName, std::string reason)
{
  RevocationRecord record;
  record.certName = certName;
  record.reason = std::move(reason);
  record.signedBy = RevokedBy::Issuer;
  record.timestamp = toUnixMillis(m_clock.now());
  record.sign(*m_key);
  return submitRevocation(record);
}

Data
Issuer::handleRevoke(const Interest& interest)
{
  auto now = m_clock.now();
  if (!interest.applicationParameters()) {
    throw Error(ErrorCode::MalformedPayload, "REVOKE Interest has no parameters");
  }
  RevocationRecord record;
  try {
    record = RevocationRecord::wireDecode(*interest.applicationParameters());
  }
  catch (const Error& e) {
    throw Error(ErrorCode::MalformedPayload, "revocation record: " + e.detail());
  }
  auto key = authorize(record, now);
  const auto& info = interest.signatureInfo();
  if (!info || info->keyLocator() != record.signerKeyName || !interest.hasValidParametersDigest() ||
      !verifyInterest(interest, key)) {
    throw Error(ErrorCode::BadSignature, "REVOKE Interest must be signed by the revoking key");
  }
  m_guard.accept(interest, now);
  auto accepted = commitRevocation(record, now);

  tlv::Encoder enc;
  enc.appendTlv(tlv::SignatureNonce, ByteView(interest.nonce()));
  enc.appendRaw(accepted.wireEncode());
  return makeReply(interest, enc.release(), *m_key);
}

std::optional<Data>
Issuer::handleRevokedList(const Interest& interest)
{
  Name prefix = makeRevokedListPrefix(m_caPrefix);
  Name name = interest.name().withoutDigest();
  std::lock_guard lock(m_revocationMutex);
  Name replyName = prefix;
  replyName.append(Component::fromNumber(m_revocations.size()));
  if (name != prefix && name != replyName) {
    return std::nullopt;
  }
  Data data(replyName);
  data.setContent(encodeRevocationList(m_revocations));
  data.setFreshnessPeriod(LIST_FRESHNESS);
  signData(data, *m_key);
  return data;
}

RevocationSet
Issuer::revokedSet() const
{
  std::lock_guard lock(m_revocationMutex);
  return m_revoked;
}

std::vector<RevocationRecord>
Issuer::revocations() const
{
  std::lock_guard lock(m_revocationMutex);
  return m_revocations;
}

// ---- bookkeeping ----------------------------------------------------------------------------

void
Issuer::deny(const Name& identity)
{
  std::lock_guard lock(m_mutex);
  m_denylist.insert(identity);
}

void
Issuer::allow(const Name& identity)
{
  std::lock_guard lock(m_mutex);
  m_denylist.erase(identity);
}

bool
Issuer::isDenied(const Name& identity) const
{
  std::lock_guard lock(m_mutex);
  return m_denylist.count(identity) > 0;
}

CertificateFetcher
Issuer::fetcher() const
{
  return [repo = m_repo, external = m_externalFetcher] (const Name& keyName) {
    auto found = repo->fetcher()(keyName);
    if (found.empty() && external) {
      found = external(keyName);
    }
    return found;
  };
}

size_t
Issuer::collectGarbage()
{
  auto now = m_clock.now();
  std::lock_guard lock(m_mutex);
  size_t removed = 0;
  for (auto it = m_summaries.begin(); it != m_summaries.end();) {
    const auto& s = it->second;
    if (now - s.createdAt > REQUEST_LIFETIME || (s.finishedAt && now - *s.finishedAt > TERMINAL_RETENTION)) {
      m_requests.erase(it->first);
      it = m_summaries.erase(it);
      ++removed;
    }
    else {
      ++it;
    }
  }
  if (removed > 0) {
    saveStateLocked();
  }
  return removed;
}

size_t
Issuer::requestCount() const
{
  std::lock_guard lock(m_mutex);
  return m_requests.size();
}

void
Issuer::recordTransition(const RequestState& state)
{
  std::lock_guard lock(m_mutex);
  m_summaries.insert_or_assign(state.id, StateSummary{state.status, state.identity, state.challengeId,
                                                      state.createdAt, state.finishedAt});
  saveStateLocked();
}

/// One line per request and per verified identity; no key material:
///   R <id-hex> <status> <identity> <challenge|-> <created-ms> <finished-ms|->
///   V <identity> <verified-ms>
void
Issuer::saveStateLocked() const
{
  if (m_stateFile.empty()) {
    return;
  }
  std::string out;
  for (const auto& [id, s] : m_summaries) {
    out += "R\t" + toHex(id) + "\t" + std::string(toString(s.status)) + "\t" + s.identity.toUri() + "\t" +
           (s.challengeId.empty() ? "-" : s.challengeId) + "\t" + std::to_string(toUnixMillis(s.createdAt)) + "\t" +
           (s.finishedAt ? std::to_string(toUnixMillis(*s.finishedAt)) : "-") + "\n";
  }
  for (const auto& [identity, at] : m_lastVerified) {
    out += "V\t" + identity.toUri() + "\t" + std::to_string(toUnixMillis(at)) + "\n";
  }
  writeFileAtomic(m_stateFile, out, true);
}

void
Issuer::loadState()
{
  if (!std::filesystem::exists(m_stateFile)) {
    return;
  }
  auto now = m_clock.now();
  std::istringstream in(readTextFile(m_stateFile));
  std::string line;
  size_t lineNo = 0;
  std::lock_guard lock(m_mutex);
  while (std::getline(in, line)) {
    ++lineNo;
    if (line.empty()) {
      continue;
    }
    std::vector<std::string> f;
    std::istringstream fields(line);
    for (std::string part; std::getline(fields, part, '\t');) {
      f.push_back(part);
    }
    try {
      if (f.size() == 7 && f[0] == "R") {
        auto idBytes = fromHex(f[1]);
        auto status = statusFromText(f[2]);
        if (idBytes.size() != std::tuple_size_v<RequestId> || !status) {
          throw std::invalid_argument("bad request line");
        }
        auto state = std::make_shared<RequestState>();
        std::copy(idBytes.begin(), idBytes.end(), state->id.begin());
        state->status = static_cast<RequestStatus>(*status);
        state->identity = Name(f[3]);
        state->challengeId = f[4] == "-" ? "" : f[4];
        state->createdAt = fromUnixMillis(std::stoull(f[5]));
        if (f[6] != "-") {
          state->finishedAt = fromUnixMillis(std::stoull(f[6]));
        }
        if (!state->finishedAt) {
          state->status = RequestStatus::Failure;
          state->finishedAt = now;
        }
        state->failureInfo = SESSION_LOST;
        m_summaries.insert_or_assign(state->id, StateSummary{state->status, state->identity, state->challengeId,
                                                             state->createdAt, state->finishedAt});
        m_requests.insert_or_assign(state->id, std::move(state));
      }
      else if (f.size() == 3 && f[0] == "V") {
        m_lastVerified[Name(f[1])] = fromUnixMillis(std::stoull(f[2]));
      }
      else {
        throw std::invalid_argument("unrecognized line");
      }
    }
    catch (const std::exception& e) {
      throw Error(ErrorCode::StorageFailure, m_stateFile.string() + ":" + std::to_string(lineNo) + ": " + e.what());
    }
  }
  saveStateLocked();
}

// ---- construction from a config file --------------------------------------------------------

ChallengeRegistry
makeChallengeRegistry(const IssuerConfig& config, TimeSource& clock)
{
  ChallengeRegistry registry;
  for (const auto& id : config.challenges) {
    if (id == "pin") {
      registry.add(std::make_shared<PinChallenge>(std::make_shared<AssertionTokenTable>(config.tokenFile),
                                                  makeOutboxDelivery(config.outboxFile, clock)));
    }
    else if (id == "email") {
      registry.add(std::make_shared<EmailChallenge>(makeOutboxDelivery(config.outboxFile, clock)));
    }
    else if (id == "possession") {
      registry.add(std::make_shared<PossessionChallenge>());
    }
    else {
      throw Error(ErrorCode::ConfigError, "unknown challenge '" + id + "'");
    }
  }
  return registry;
}

std::unique_ptr<Issuer>
makeIssuer(const IssuerConfig& config, TimeSource& clock)
{
  auto configError = [] (const std::string& what, const std::filesystem::path& path, const Error& e) {
    return Error(ErrorCode::ConfigError, "cannot load " + what + " " + path.string() + ": " + e.detail());
  };

  IssuerSetup setup;
  try {
    setup.cert = loadCertificate(config.certFile);
  }
  catch (const Error& e) {
    throw configError("certificate", config.certFile, e);
  }
  std::optional<crypto::PrivateKey> priv;
  try {
    priv.emplace(loadPrivateKey(config.keyFile));
  }
  catch (const Error& e) {
    throw configError("key", config.keyFile, e);
  }
  if (!(priv->publicKey() == setup.cert->publicKey())) {
    throw Error(ErrorCode::ConfigError, "key " + config.keyFile.string() + " does not match certificate " +
                config.certFile.string());
  }
  auto key = std::make_shared<crypto::KeyPair>(std::move(*priv), setup.cert->keyName());
  setup.key = key;
  if (!config.anchorFile.empty()) {
    try {
      setup.anchor = loadCertificate(config.anchorFile);
    }
    catch (const Error& e) {
      throw configError("anchor", config.anchorFile, e);
    }
  }
  setup.caPrefix = config.caPrefix;
  setup.maxValidity = config.maxValidity;
  setup.namePatterns = config.effectiveNamePatterns();
  setup.redirects = config.redirects;
  setup.challenges = makeChallengeRegistry(config, clock);
  try {
    setup.repo = std::make_shared<Repo>(config.repoDir);
  }
  catch (const Error& e) {
    throw configError("repo", config.repoDir, e);
  }
  try {
    setup.log = std::make_shared<TransparencyLog>(key, config.logFile);
  }
  catch (const Error& e) {
    throw configError("log", config.logFile, e);
  }
  setup.issuerId = config.issuerId;
  setup.reverifyAfter = config.reverifyAfter;
  setup.denylist = config.denylist;
  setup.stateFile = config.stateFile;
  setup.clock = &clock;
  try {
    return std::make_unique<Issuer>(std::move(setup));
  }
  catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArgument) {
      throw Error(ErrorCode::ConfigError, e.detail());
    }
    throw;
  }
}

} // namespace ndncert
