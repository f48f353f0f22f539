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

#include "ndncert/protocol/exchange.hpp"
#include "ndncert/protocol/profile.hpp"
#include "ndncert/security/signing.hpp"

#include "test-common.hpp"

#include <boost/test/unit_test.hpp>

#include <algorithm>
#include <atomic>
#include <thread>

namespace ndncert {
namespace tests {

using namespace std::chrono_literals;

namespace {

ErrorCode
codeOf(const std::function<void()>& fn)
{
  try {
    fn();
  }
  catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::None;
}

bool
containsSubsequence(const Bytes& haystack, ByteView needle)
{
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) != haystack.end();
}

struct SessionPair
{
  SessionCipher requester;
  SessionCipher issuer;
};

SessionPair
makeSessionPair()
{
  crypto::EphemeralKey r;
  crypto::EphemeralKey i;
  crypto::Salt salt;
  crypto::fillRandom(salt);
  auto id = makeRequestId();
  auto rPoint = r.publicPoint();
  auto rKey = r.deriveSessionKey(i.publicPoint(), salt);
  auto iKey = i.deriveSessionKey(rPoint, salt);
  return {SessionCipher(std::move(rKey), id), SessionCipher(std::move(iKey), id)};
}

struct NewFixture
{
  TimePoint now = roundedNow();
  crypto::KeyPair alice = crypto::KeyPair::generate("/ndn/alice");
  crypto::EphemeralKey eph;
  NewRequest payload{eph.publicPoint(),
                     makeCertificateRequest(alice, ValidityPeriod::make(now, now + 24h))};
  ReplayGuard guard;
};

} // namespace

BOOST_AUTO_TEST_SUITE(ProtocolMessages)

BOOST_FIXTURE_TEST_CASE(NewInterestRoundTrip, NewFixture)
{
  auto interest = buildNewInterest(alice, payload, "/ndn", toUnixMillis(now));
  BOOST_CHECK(Name("/ndn/CA/NEW").isPrefixOf(interest.name()));
  BOOST_CHECK_EQUAL(interest.name().size(), 4);
  BOOST_CHECK(verifyInterest(interest, alice.publicKey()));

  auto wire = interest.wireEncode();
  auto parsed = parseNewInterest(Interest::wireDecode(wire), guard, now);
  BOOST_CHECK(parsed.ecdhPub == payload.ecdhPub);
  BOOST_CHECK(parsed.certRequest == payload.certRequest);

  // identical bytes again
  BOOST_CHECK_EQUAL(toString(codeOf([&] { parseNewInterest(Interest::wireDecode(wire), guard, now); })),
                    "Replayed");

  auto again = buildNewInterest(alice, payload, "/ndn", toUnixMillis(now) + 1);
  BOOST_CHECK(again.wireEncode() != wire);
  BOOST_CHECK_NO_THROW(parseNewInterest(again, guard, now));
}

BOOST_FIXTURE_TEST_CASE(NewInterestStaleAfterWindow, NewFixture)
{
  auto interest = buildNewInterest(alice, payload, "/ndn", toUnixMillis(now));
  parseNewInterest(interest, guard, now);
  BOOST_CHECK_EQUAL(toString(codeOf([&] { parseNewInterest(interest, guard, now + 61s); })),
                    "StaleTimestamp");
  ReplayGuard fresh;
  BOOST_CHECK_EQUAL(toString(codeOf([&] { parseNewInterest(interest, fresh, now - 61s); })),
                    "StaleTimestamp");
}

BOOST_FIXTURE_TEST_CASE(ProofOfPossession, NewFixture)
{
  // signed by a key other than the one in the request
  auto mallory = crypto::KeyPair::generate("/ndn/alice");
  auto interest = buildNewInterest(mallory, payload, "/ndn", toUnixMillis(now));
  BOOST_CHECK_EQUAL(toString(codeOf([&] { parseNewInterest(interest, guard, now); })), "BadSignature");

  // right key locator, wrong signature bits
  interest = buildNewInterest(alice, payload, "/ndn", toUnixMillis(now));
  auto sig = *interest.signatureValue();
  sig[5] ^= 1;
  interest.setSignatureValue(sig);
  interest.appendParametersDigest();
  BOOST_CHECK_EQUAL(toString(codeOf([&] { parseNewInterest(interest, guard, now); })), "BadSignature");

  // parameters swapped after signing
  interest = buildNewInterest(alice, payload, "/ndn", toUnixMillis(now));
  NewRequest other{crypto::EphemeralKey().publicPoint(), payload.certRequest};
  interest.setApplicationParameters(other.encode());
  BOOST_CHECK_EQUAL(toString(codeOf([&] { parseNewInterest(interest, guard, now); })), "BadSignature");

  // a rejected packet does not consume the nonce
  BOOST_CHECK_EQUAL(guard.size(), 0);
}

BOOST_FIXTURE_TEST_CASE(MalformedNewPayload, NewFixture)
{
  Interest interest(makeNewName("/ndn"));
  interest.setApplicationParameters(Bytes{1, 2, 3});
  interest.setTimestamp(toUnixMillis(now));
  signInterest(interest, alice);
  BOOST_CHECK_EQUAL(toString(codeOf([&] { parseNewInterest(interest, guard, now); })), "MalformedPayload");

  auto bad = payload;
  bad.ecdhPub[64] ^= 1;
  interest = buildNewInterest(alice, bad, "/ndn", toUnixMillis(now));
  BOOST_CHECK_EQUAL(toString(codeOf([&] { parseNewInterest(interest, guard, now); })), "InvalidPoint");
}

BOOST_AUTO_TEST_CASE(ReplayGuardRules)
{
  auto now = roundedNow();
  auto t = toUnixMillis(now);
  ReplayGuard guard;
  InterestNonce n1{1}, n2{2}, n3{3};
  guard.accept("/k", n1, t, now);
  BOOST_CHECK_EQUAL(toString(codeOf([&] { guard.accept("/k", n1, t + 5, now); })), "Replayed");
  BOOST_CHECK_EQUAL(toString(codeOf([&] { guard.accept("/k", n2, t, now); })), "StaleTimestamp");
  BOOST_CHECK_EQUAL(toString(codeOf([&] { guard.accept("/k", n2, t + 60'001, now); })), "StaleTimestamp");
  guard.accept("/k", n2, t + 1, now);
  guard.accept("/other", n1, t, now); // per-key state
  guard.accept("/k", n3, t + 60'000, now + 1s);
}

BOOST_AUTO_TEST_CASE(ReplayGuardProperty)
{
  // For random submission sequences, no (key, nonce) is accepted twice within the window and
  // per-key timestamps increase.
  Rng rng(77);
  auto start = roundedNow();
  for (int round = 0; round < 50; ++round) {
    ReplayGuard guard(10s);
    std::map<std::pair<Name, InterestNonce>, uint64_t> accepted; // -> timestamp
    std::map<Name, uint64_t> last;
    auto now = start;
    for (int i = 0; i < 300; ++i) {
      now += Milliseconds(rng() % 200);
      Name key = rng() % 2 ? Name("/a") : Name("/b");
      InterestNonce nonce{static_cast<uint8_t>(rng() % 8)};
      auto ts = toUnixMillis(now) - 5000 + rng() % 10'000;
      bool ok = codeOf([&] { guard.accept(key, nonce, ts, now); }) == ErrorCode::None;
      if (ok) {
        BOOST_REQUIRE(ts > last[key]);
        last[key] = ts;
        auto previous = accepted.find({key, nonce});
        if (previous != accepted.end()) {
          BOOST_REQUIRE(previous->second + 10'000 < toUnixMillis(now));
        }
        accepted[{key, nonce}] = ts;
      }
    }
  }
}

BOOST_AUTO_TEST_CASE(ReplayGuardConcurrentCheckAndInsert)
{
  auto now = roundedNow();
  ReplayGuard guard;
  std::atomic<int> successes{0};
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&] {
      for (int k = 0; k < 200; ++k) {
        InterestNonce nonce{static_cast<uint8_t>(k), static_cast<uint8_t>(k >> 8)};
        if (codeOf([&] { guard.accept("/k" + std::to_string(k), nonce, toUnixMillis(now), now); }) ==
            ErrorCode::None) {
          ++successes;
        }
      }
    });
  }
  for (auto& t : threads) {
    t.join();
  }
  BOOST_CHECK_EQUAL(successes.load(), 200);
}

BOOST_AUTO_TEST_CASE(ChallengeRoundTrip)
{
  auto [requester, issuer] = makeSessionPair();
  auto alice = crypto::KeyPair::generate("/ndn/alice");
  auto now = roundedNow();
  ReplayGuard guard;

  ChallengeMessage select;
  select.challengeId = "pin";
  select.params.set(param::SELECTED_CHALLENGE, "pin");
  auto interest = buildChallengeInterest(alice, requester, select, "/ndn", toUnixMillis(now));
  BOOST_CHECK(makeChallengeName("/ndn", requester.requestId()).isPrefixOf(interest.name()));
  BOOST_CHECK(requestIdFromChallengeName("/ndn", interest.name()) == requester.requestId());

  auto opened = openChallengeInterest(Interest::wireDecode(interest.wireEncode()), alice.publicKey(), issuer,
                                      guard, now);
  BOOST_CHECK(opened == select);

  auto ca = crypto::KeyPair::generate("/ndn");
  ChallengeMessage status;
  status.challengeId = "pin";
  status.status = RequestStatus::Challenge;
  status.challengeStatus = "need-code";
  status.params.set(param::REMAINING_TRIES, "3");
  auto reply = makeChallengeReply(interest, issuer, status, ca);
  BOOST_CHECK_EQUAL(reply.name(), interest.name());
  checkReply(reply, interest, ca.publicKey());
  auto back = requester.open(SealedPayload::decode(reply.content()), reply.name());
  BOOST_CHECK(back == status);

  // stale IV: the same sealed reply again
  BOOST_CHECK_EQUAL(toString(codeOf([&] { requester.open(SealedPayload::decode(reply.content()), reply.name()); })),
                    "IvReplay");
}

BOOST_AUTO_TEST_CASE(PinNeverOnTheWire)
{
  auto [requester, issuer] = makeSessionPair();
  auto alice = crypto::KeyPair::generate("/ndn/alice");
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    std::string pin = std::to_string(100000 + rng() % 900000);
    ChallengeMessage m;
    m.challengeId = "pin";
    m.params.set(param::CODE, pin);
    auto interest = buildChallengeInterest(alice, requester, m, "/ndn", 1000 + i);
    BOOST_REQUIRE(!containsSubsequence(interest.wireEncode(), asBytes(pin)));
  }
}

BOOST_AUTO_TEST_CASE(CiphertextTamperLeavesStateUnchanged)
{
  auto [requester, issuer] = makeSessionPair();
  const Name name("/ndn/CA/CHALLENGE/x");
  ChallengeMessage m;
  m.challengeId = "pin";
  m.params.set(param::CODE, "123456");
  auto sealed = requester.seal(m, name);

  for (size_t i = 0; i < sealed.ciphertext.size(); ++i) {
    for (uint8_t delta : {0x01, 0x80, 0xff}) {
      auto bad = sealed;
      bad.ciphertext[i] ^= delta;
      BOOST_REQUIRE_EQUAL(toString(codeOf([&] { issuer.open(bad, name); })), "AuthenticationFailed");
    }
  }
  for (size_t i = 0; i < sealed.tag.size(); ++i) {
    auto bad = sealed;
    bad.tag[i] ^= 0x10;
    BOOST_REQUIRE_EQUAL(toString(codeOf([&] { issuer.open(bad, name); })), "AuthenticationFailed");
  }
  auto wrongIv = sealed;
  wrongIv.iv[11] ^= 0x02; // different counter, still increasing
  BOOST_CHECK_EQUAL(toString(codeOf([&] { issuer.open(wrongIv, name); })), "AuthenticationFailed");
  BOOST_CHECK_EQUAL(toString(codeOf([&] { issuer.open(sealed, "/ndn/CA/CHALLENGE/y"); })),
                    "AuthenticationFailed");
  auto otherRequest = sealed;
  otherRequest.requestId[0] ^= 1;
  BOOST_CHECK_EQUAL(toString(codeOf([&] { issuer.open(otherRequest, name); })), "UnknownRequestId");

  // none of the failures advanced the receiver
  BOOST_CHECK(issuer.open(sealed, name) == m);
}

BOOST_AUTO_TEST_CASE(SessionBinding)
{
  const Name name("/ndn/CA/CHALLENGE/x");
  for (int i = 0; i < 20; ++i) {
    auto a = makeSessionPair();
    auto b = makeSessionPair();
    ChallengeMessage m;
    m.challengeId = "pin";
    auto sealed = a.requester.seal(m, name);
    sealed.requestId = b.issuer.requestId();
    BOOST_REQUIRE_EQUAL(toString(codeOf([&] { b.issuer.open(sealed, name); })), "AuthenticationFailed");
  }
}

BOOST_AUTO_TEST_CASE(ParameterLimits)
{
  ParameterMap params;
  params.set("k", std::string(1024, 'x'));
  BOOST_CHECK_EQUAL(toString(codeOf([&] { params.set("v", std::string(1025, 'x')); })), "MalformedParams");
  BOOST_CHECK_EQUAL(toString(codeOf([&] { params.set(std::string(33, 'k'), "x"); })), "MalformedParams");
  BOOST_CHECK_EQUAL(toString(codeOf([&] { params.set("k", "again"); })), "MalformedParams");
  BOOST_CHECK_EQUAL(toString(codeOf([&] { params.require("absent"); })), "MissingParameter");

  // value without key on the wire
  tlv::Encoder enc;
  enc.appendTlv(tlv::ChallengeId, std::string_view("pin"))
     .appendNonNegativeInteger(tlv::RequestStatus, 0)
     .appendTlv(tlv::ChallengeStatus, std::string_view(""))
     .appendTlv(tlv::ParameterValue, std::string_view("orphan"));
  BOOST_CHECK_EQUAL(toString(codeOf([&] { ChallengeMessage::decode(enc.bytes()); })), "MalformedParams");
}

BOOST_AUTO_TEST_CASE(NewResponseForms)
{
  NewResponse offer;
  offer.nonce = {1, 2, 3, 4, 5, 6, 7, 8};
  offer.ecdhPub = crypto::EphemeralKey().publicPoint();
  crypto::fillRandom(offer.salt);
  offer.requestId = makeRequestId();
  offer.challenges = {"pin", "email", "possession"};
  auto decoded = NewResponse::decode(offer.encode());
  BOOST_CHECK(!decoded.isRedirect());
  BOOST_CHECK(decoded.challenges == offer.challenges);
  BOOST_CHECK(decoded.salt == offer.salt);
  BOOST_CHECK(decoded.requestId == offer.requestId);

  NewResponse redirect;
  redirect.redirects = {{"/ndn/campus1", "/ndn/campus1/KEY/ab/ca/1"}};
  decoded = NewResponse::decode(redirect.encode());
  BOOST_CHECK(decoded.isRedirect());
  BOOST_CHECK(decoded.redirects == redirect.redirects);

  tlv::Encoder both;
  both.appendRaw(offer.encode());
  both.appendNested(tlv::Redirect, [] (tlv::Encoder& e) {
    e.appendTlv(tlv::RedirectCaPrefix, Name("/a").wireEncode()).appendTlv(tlv::RedirectCertName, Name("/b").wireEncode());
  });
  BOOST_CHECK_EQUAL(toString(codeOf([&] { NewResponse::decode(both.bytes()); })), "MalformedPayload");
}

BOOST_AUTO_TEST_CASE(ErrorReplies)
{
  auto ca = crypto::KeyPair::generate("/ndn");
  Interest interest(makeNewName("/ndn"));
  auto reply = makeErrorReply(interest, ErrorCode::NameNotAllowed, "no pattern matches /other/bob", ca);
  BOOST_CHECK_EQUAL(toString(codeOf([&] { checkReply(reply, interest, ca.publicKey()); })), "NameNotAllowed");

  Interest other(makeNewName("/ndn"));
  BOOST_CHECK_EQUAL(toString(codeOf([&] { checkReply(reply, other, ca.publicKey()); })), "IssuerError");
  auto stranger = crypto::KeyPair::generate("/x");
  BOOST_CHECK_EQUAL(toString(codeOf([&] { checkReply(reply, interest, stranger.publicKey()); })), "BadSignature");
}

BOOST_AUTO_TEST_CASE(RequestNames)
{
  Name ca("/ndn");
  BOOST_CHECK(classifyRequest(ca, "/ndn/CA/NEW/x") == RequestKind::New);
  BOOST_CHECK(classifyRequest(ca, makeInfoMetadataName(ca)) == RequestKind::Info);
  BOOST_CHECK(classifyRequest(ca, "/ndn/CA/REVOKED") == RequestKind::RevokedList);
  BOOST_CHECK(classifyRequest(ca, "/ndn/CA/REVOKE") == RequestKind::Revoke);
  BOOST_CHECK(classifyRequest(ca, "/ndn/CA") == RequestKind::Unknown);
  BOOST_CHECK(classifyRequest(ca, "/ndn/campus1/CA/NEW") == RequestKind::Unknown);
  BOOST_CHECK_EQUAL(toString(codeOf([&] { requestIdFromChallengeName(ca, "/ndn/CA/CHALLENGE/short"); })),
                    "MalformedPayload");
}

BOOST_AUTO_TEST_CASE(ProfileRoundTrip)
{
  auto now = roundedNow();
  auto root = makeAnchorIdentity("/ndn", now, 24h);
  CaProfile profile;
  profile.caPrefix = "/ndn";
  profile.caCertificate = root.cert;
  profile.maxValidity = Seconds(90 * 86400);
  profile.challenges = {"pin", "possession"};
  profile.namePatterns = {NamePattern("/ndn/*")};
  profile.redirects = {{NamePattern("/ndn/campus1/**"), "/ndn/campus1", "/ndn/campus1/KEY/1/ca/1"}};
  profile.version = 3;
  auto decoded = CaProfile::decode(profile.encode());
  BOOST_CHECK(decoded == profile);
  BOOST_CHECK(decoded.allowsIdentity("/ndn/alice"));
  BOOST_CHECK(!decoded.allowsIdentity("/other/bob"));
  BOOST_REQUIRE(decoded.findRedirect("/ndn/campus1/alice"));
  BOOST_CHECK_EQUAL(decoded.findRedirect("/ndn/campus1/alice")->caPrefix, Name("/ndn/campus1"));
  BOOST_CHECK(decoded.findRedirect("/ndn/alice") == nullptr);
  BOOST_CHECK_EQUAL(makeProfileName("/ndn", 3).toUri(), "/ndn/CA/INFO/3");
}

BOOST_AUTO_TEST_SUITE_END()

} // namespace tests
} // namespace ndncert
