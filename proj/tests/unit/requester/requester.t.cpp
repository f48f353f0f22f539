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

#include "ndncert/file-util.hpp"
#include "ndncert/requester/auto-renewer.hpp"
#include "ndncert/requester/key-store.hpp"

#include "issuer/issuer-fixture.hpp"

#include <boost/test/unit_test.hpp>

#include <sys/stat.h>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace ndncert {
namespace tests {

using namespace std::chrono_literals;

namespace {

mode_t
fileMode(const std::filesystem::path& p)
{
  struct stat st{};
  if (::stat(p.c_str(), &st) != 0) {
    return 0;
  }
  return st.st_mode & 0777;
}

/// Restores an environment variable on scope exit.
class EnvGuard
{
public:
  explicit
  EnvGuard(const char* name)
    : m_name(name)
  {
    if (const char* v = std::getenv(name)) {
      m_old = v;
    }
  }

  ~EnvGuard()
  {
    if (m_old) {
      ::setenv(m_name, m_old->c_str(), 1);
    }
    else {
      ::unsetenv(m_name);
    }
  }

private:
  const char* m_name;
  std::optional<std::string> m_old;
};

} // namespace

BOOST_AUTO_TEST_SUITE(RequesterClient)

BOOST_AUTO_TEST_SUITE(KeyStoreSuite)

BOOST_AUTO_TEST_CASE(DefaultRoot)
{
  EnvGuard home("HOME");
  EnvGuard ndncertHome("NDNCERT_HOME");
  ::setenv("NDNCERT_HOME", "/srv/keys", 1);
  BOOST_CHECK_EQUAL(KeyStore::defaultRoot(), "/srv/keys");
  ::unsetenv("NDNCERT_HOME");
  ::setenv("HOME", "/home/u", 1);
  BOOST_CHECK_EQUAL(KeyStore::defaultRoot(), "/home/u/.ndncert");
}

BOOST_AUTO_TEST_CASE(KeysAndLayout)
{
  TempDir dir;
  KeyStore store(dir.path());
  auto key = store.generateKey("/ndn/alice");
  BOOST_CHECK(store.hasKey(key.keyName()));
  BOOST_CHECK(!store.hasKey("/ndn/alice/KEY/0011223344556677"));
  BOOST_CHECK(!store.hasKey("/ndn/alice"));

  auto idDir = store.identityDir("/ndn/alice");
  BOOST_CHECK_EQUAL(idDir.parent_path(), dir.path());
  BOOST_CHECK_EQUAL(readTextFile(idDir / "identity"), "/ndn/alice\n");
  auto keyFile = idDir / (key.keyName()[-1].toUri() + ".key");
  BOOST_CHECK(std::filesystem::exists(keyFile));
  BOOST_CHECK_EQUAL(fileMode(keyFile), 0600);

  auto loaded = store.loadKey(key.keyName());
  BOOST_CHECK(loaded.publicKey() == key.publicKey());
  auto message = toBytes("proof");
  BOOST_CHECK(crypto::verify(message, loaded.sign(message), key.publicKey()));
  BOOST_CHECK_EQUAL(codeOf([&] { store.loadKey("/ndn/bob/KEY/0011223344556677"); }), ErrorCode::InvalidArgument);

  store.generateKey("/ndn/bob");
  // canonical order: shorter components first
  BOOST_CHECK(store.identities() == (std::vector<Name>{"/ndn/bob", "/ndn/alice"}));
}

BOOST_AUTO_TEST_CASE(NewestVersionWins)
{
  TempDir dir;
  KeyStore store(dir.path());
  auto now = roundedNow();
  auto issuer = makeAnchorIdentity("/ndn", now - 1h, 48h);
  auto key = store.generateKey("/ndn/alice");
  auto make = [&] (uint64_t version) {
    IssueParams params{"/ndn/alice", ValidityPeriod::make(now, now + 1h), Component::fromString("NDNCERT"),
                       version, now};
    return issueCertificate(key.publicKey(), params, issuer.key);
  };
  BOOST_CHECK(!store.latestCertificate("/ndn/alice"));
  store.installCertificate(make(5));
  store.installCertificate(make(9));
  store.installCertificate(make(7));
  BOOST_CHECK_EQUAL(store.certificates("/ndn/alice").size(), 3);
  BOOST_CHECK_EQUAL(store.latestCertificate("/ndn/alice")->version(), 9);
  // re-installing the same certificate replaces it
  store.installCertificate(make(9));
  BOOST_CHECK_EQUAL(store.certificates("/ndn/alice").size(), 3);
  BOOST_CHECK(!store.latestCertificate("/ndn/bob"));
}

BOOST_AUTO_TEST_CASE(ReplaceIsAtomicForReaders)
{
  TempDir dir;
  KeyStore store(dir.path());
  auto now = roundedNow();
  auto issuer = makeAnchorIdentity("/ndn", now - 1h, 48h);
  auto key = store.generateKey("/ndn/alice");
  auto make = [&] (uint64_t version) {
    IssueParams params{"/ndn/alice", ValidityPeriod::make(now, now + 1h), Component::fromString("NDNCERT"),
                       version, now};
    return issueCertificate(key.publicKey(), params, issuer.key);
  };
  store.installCertificate(make(1));
  std::atomic<bool> done{false};
  std::atomic<int> failures{0};
  std::thread reader([&] {
    uint64_t last = 0;
    while (!done) {
      try {
        auto v = store.latestCertificate("/ndn/alice")->version();
        failures += v < last;
        last = v;
      }
      catch (...) {
        ++failures;
      }
    }
  });
  for (uint64_t v = 2; v <= 60; ++v) {
    store.installCertificate(make(v));
  }
  done = true;
  reader.join();
  BOOST_CHECK_EQUAL(failures.load(), 0);
  BOOST_CHECK_EQUAL(store.latestCertificate("/ndn/alice")->version(), 60);
}

BOOST_AUTO_TEST_SUITE_END() // KeyStoreSuite

BOOST_FIXTURE_TEST_SUITE(Session, IssuerFixture)

BOOST_AUTO_TEST_CASE(PhasesMoveForward)
{
  auto requester = makeRequester();
  auto profile = requester.discoverProfile("/ndn");
  MonotonicMillis timestamps;
  auto key = newKey("/ndn/alice");
  auto code = tokens->insert("/ndn/alice", clock.now() + 10min);

  ClientSession session(face, profile, key, clock, timestamps);
  BOOST_CHECK(session.phase() == ClientSession::Phase::Idle);
  BOOST_CHECK_EQUAL(codeOf([&] { session.sendChallenge(pinMessage(code)); }), ErrorCode::InvalidArgument);
  BOOST_CHECK_EQUAL(codeOf([&] { session.requestId(); }), ErrorCode::InvalidArgument);

  auto response = session.sendNew(ValidityPeriod::make(clock.now(), clock.now() + 1h));
  BOOST_CHECK(session.phase() == ClientSession::Phase::InChallenge);
  BOOST_CHECK(session.requestId() == response.requestId);
  BOOST_CHECK(session.offeredChallenges() == (std::vector<std::string>{"pin", "email", "possession"}));
  BOOST_CHECK_EQUAL(codeOf([&] { session.sendNew(ValidityPeriod::make(clock.now(), clock.now() + 1h)); }),
                    ErrorCode::InvalidArgument);

  auto reply = session.sendChallenge(pinMessage(code));
  BOOST_CHECK(reply.status == RequestStatus::Success);
  BOOST_CHECK(session.phase() == ClientSession::Phase::Done);
  BOOST_CHECK_EQUAL(codeOf([&] { session.sendChallenge(pinMessage(code)); }), ErrorCode::InvalidArgument);
}

BOOST_AUTO_TEST_CASE(ErrorFailsSession)
{
  auto requester = makeRequester();
  auto profile = requester.discoverProfile("/ndn");
  MonotonicMillis timestamps;
  ClientSession session(face, profile, newKey("/edu/alice"), clock, timestamps);
  BOOST_CHECK_EQUAL(codeOf([&] { session.sendNew(ValidityPeriod::make(clock.now(), clock.now() + 1h)); }),
                    ErrorCode::NameNotAllowed);
  BOOST_CHECK(session.phase() == ClientSession::Phase::Failed);
}

BOOST_AUTO_TEST_CASE(ForgedReplyAborts)
{
  // replies signed by anyone but the profile's certificate are refused before use
  auto requester = makeRequester();
  auto profile = requester.discoverProfile("/ndn");
  auto impostor = makeRootCa("/ndn", clock.now());
  forwarder.unregisterPrefix("/ndn/CA");
  forwarder.registerPrefix("/ndn/CA", [&] (const Interest& i) -> std::optional<Data> {
    NewResponse r;
    r.nonce = i.nonce();
    r.redirects = {{"/evil", {}}};
    return makeReply(i, r.encode(), *impostor.key);
  });
  MonotonicMillis timestamps;
  ClientSession session(face, profile, newKey("/ndn/alice"), clock, timestamps);
  BOOST_CHECK_EQUAL(codeOf([&] { session.sendNew(ValidityPeriod::make(clock.now(), clock.now() + 1h)); }),
                    ErrorCode::BadSignature);
  BOOST_CHECK(session.phase() == ClientSession::Phase::Failed);
}

BOOST_AUTO_TEST_CASE(ConcurrentRequestsSameIdentity)
{
  // two open requests for one identity get distinct ids and both complete
  auto requester = makeRequester();
  auto profile = requester.discoverProfile("/ndn");
  MonotonicMillis timestamps;
  auto key = newKey("/ndn/alice");
  ClientSession a(face, profile, key, clock, timestamps);
  ClientSession b(face, profile, key, clock, timestamps);
  auto validity = ValidityPeriod::make(clock.now(), clock.now() + 1h);
  a.sendNew(validity);
  b.sendNew(validity);
  BOOST_CHECK(a.requestId() != b.requestId());
  a.sendChallenge(pinMessage(std::nullopt));
  auto codeA = codes.last();
  b.sendChallenge(pinMessage(std::nullopt));
  auto codeB = codes.last();
  BOOST_CHECK(b.sendChallenge(pinMessage(codeB, RequestStatus::Challenge)).status == RequestStatus::Success);
  BOOST_CHECK(a.sendChallenge(pinMessage(codeA, RequestStatus::Challenge)).status == RequestStatus::Success);
  BOOST_CHECK_EQUAL(issuer->log().size(), 2);
}

BOOST_AUTO_TEST_SUITE_END() // Session

BOOST_FIXTURE_TEST_SUITE(Renewal, IssuerFixture)

BOOST_AUTO_TEST_CASE(Arguments)
{
  auto requester = makeRequester();
  auto profile = requester.discoverProfile("/ndn");
  auto key = newKey("/ndn/alice");
  auto options = pinWithToken("/ndn/alice");
  options.validity = 10s;
  auto cert = requester.requestCertificate(profile, key, options).certificate;
  auto renew = makePossessionRenewal(requester, profile, key, 10s);
  BOOST_CHECK_EQUAL(codeOf([&] { AutoRenewer r(cert, 0.0, renew, clock); }), ErrorCode::InvalidArgument);
  BOOST_CHECK_EQUAL(codeOf([&] { AutoRenewer r(cert, 1.5, renew, clock); }), ErrorCode::InvalidArgument);
  BOOST_CHECK_EQUAL(codeOf([&] { AutoRenewer r(cert, 0.5, nullptr, clock); }), ErrorCode::InvalidArgument);
  AutoRenewer r(cert, 0.5, renew, clock);
  BOOST_CHECK(r.dueAt() == cert.validity().notAfter - 5s);
  clock.advance(11s);
  BOOST_CHECK_EQUAL(codeOf([&] { AutoRenewer late(cert, 0.5, renew, clock); }), ErrorCode::InvalidArgument);
}

BOOST_AUTO_TEST_CASE(FullLeadRenewsImmediately)
{
  auto requester = makeRequester();
  auto profile = requester.discoverProfile("/ndn");
  auto key = newKey("/ndn/alice");
  auto options = pinWithToken("/ndn/alice");
  options.validity = 10s;
  auto cert = requester.requestCertificate(profile, key, options).certificate;
  AutoRenewer r(cert, 1.0, makePossessionRenewal(requester, profile, key, 10s), clock);
  BOOST_CHECK(r.poll());
  BOOST_CHECK_GT(r.current().version(), cert.version());
}

BOOST_AUTO_TEST_CASE(ContinuouslyValidThenDenied)
{
  TempDir dir;
  KeyStore store(dir.path());
  auto requester = makeRequester();
  auto profile = requester.discoverProfile("/ndn");
  auto key = newKey("/ndn/alice");
  auto options = pinWithToken("/ndn/alice");
  options.validity = 10s;
  auto cert = requester.requestCertificate(profile, key, options).certificate;
  store.installCertificate(cert);

  std::vector<RenewalEvent> events;
  AutoRenewer renewer(cert, 0.5, makePossessionRenewal(requester, profile, key, 10s, &store), clock);
  renewer.setEventHandler([&] (const RenewalEvent& e) { events.push_back(e); });
  BOOST_CHECK(!renewer.poll());

  // three lifetimes in 100 ms steps: always a valid certificate in hand and in the store
  auto start = clock.now();
  size_t invalidSteps = 0;
  while (clock.now() < start + 35s) {
    clock.advance(100ms);
    renewer.poll();
    auto held = renewer.current();
    auto result = validateChain(held.data(), requester.trustPolicy(), requester.fetcher(), {}, clock.now());
    invalidSteps += !result.isValid() || !held.isValidAt(clock.now(), Clock::duration::zero());
    BOOST_CHECK(store.latestCertificate("/ndn/alice")->name() == held.name());
  }
  BOOST_CHECK_EQUAL(invalidSteps, 0);
  BOOST_CHECK_GE(events.size(), 6);
  for (const auto& e : events) {
    BOOST_CHECK(e.kind == RenewalEvent::Kind::Renewed);
  }

  issuer->deny("/ndn/alice");
  auto last = renewer.current();
  while (!renewer.isStopped() && clock.now() < last.validity().notAfter) {
    clock.advance(100ms);
    renewer.poll();
  }
  BOOST_REQUIRE(renewer.isStopped());
  BOOST_CHECK_EQUAL(*renewer.stopReason(), ErrorCode::RenewDenied);
  BOOST_CHECK(events.back().kind == RenewalEvent::Kind::Stopped);
  BOOST_CHECK(events.back().code == ErrorCode::RenewDenied);
  BOOST_CHECK(!renewer.poll());

  clock.set(last.validity().notAfter + 1s);
  auto result = validateChain(last.data(), requester.trustPolicy(), requester.fetcher(), {}, clock.now());
  BOOST_CHECK(result.status == ValidationStatus::Expired);
}

BOOST_AUTO_TEST_CASE(TransientFailuresRetry)
{
  auto requester = makeRequester();
  auto profile = requester.discoverProfile("/ndn");
  auto key = newKey("/ndn/alice");
  auto options = pinWithToken("/ndn/alice");
  options.validity = 10s;
  auto cert = requester.requestCertificate(profile, key, options).certificate;
  std::vector<RenewalEvent> events;
  AutoRenewer renewer(cert, 0.5, makePossessionRenewal(requester, profile, key, 10s), clock);
  renewer.setEventHandler([&] (const RenewalEvent& e) { events.push_back(e); });

  forwarder.unregisterPrefix("/ndn/CA");
  clock.set(renewer.dueAt());
  BOOST_CHECK(renewer.poll());
  BOOST_REQUIRE_EQUAL(events.size(), 1);
  BOOST_CHECK(events[0].kind == RenewalEvent::Kind::Retrying);
  BOOST_CHECK(!renewer.isStopped());
  BOOST_CHECK(!renewer.poll()); // backing off
  forwarder.unregisterPrefix("/ndn"); // registerWith adds both prefixes back
  issuer->registerWith(forwarder);
  clock.advance(AutoRenewer::RETRY_BACKOFF);
  BOOST_CHECK(renewer.poll());
  BOOST_CHECK(events.back().kind == RenewalEvent::Kind::Renewed);
}

BOOST_AUTO_TEST_CASE(BackgroundThread)
{
  // real clock: a 10 s certificate with a 0.95 lead is due at once
  SystemTimeSource real;
  IssuerSetup setup = makeSetup(root);
  setup.clock = &real;
  forwarder.unregisterPrefix("/ndn/CA");
  forwarder.unregisterPrefix("/ndn");
  issuer = start(std::move(setup));
  Requester requester(face, root.cert, real);
  auto profile = requester.discoverProfile("/ndn");
  auto key = newKey("/ndn/alice");
  auto code = tokens->insert("/ndn/alice", real.now() + 10min);
  RequestOptions options;
  options.identity = "/ndn/alice";
  options.challenge = "pin";
  options.responder = makePinResponder([code] { return code; }, true);
  options.validity = 10s;
  auto cert = requester.requestCertificate(profile, key, options).certificate;

  std::mutex m;
  std::condition_variable cv;
  bool renewed = false;
  AutoRenewer renewer(cert, 0.95, makePossessionRenewal(requester, profile, key, 10s), real);
  renewer.setEventHandler([&] (const RenewalEvent& e) {
    std::lock_guard lock(m);
    renewed = renewed || e.kind == RenewalEvent::Kind::Renewed;
    cv.notify_all();
  });
  renewer.start(20ms);
  {
    std::unique_lock lock(m);
    BOOST_CHECK(cv.wait_for(lock, 5s, [&] { return renewed; }));
  }
  renewer.stop();
  BOOST_CHECK_GT(renewer.current().version(), cert.version());
}

BOOST_AUTO_TEST_SUITE_END() // Renewal

BOOST_AUTO_TEST_SUITE_END() // RequesterClient

} // namespace tests
} // namespace ndncert
