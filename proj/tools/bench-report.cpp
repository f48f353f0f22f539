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

#include "bench-report.hpp"

#include "ndncert/challenge/challenge-pin.hpp"
#include "ndncert/issuer/issuer.hpp"
#include "ndncert/requester/requester.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace ndncert {
namespace tools {
namespace {

const Name CA_PREFIX("/ndn");
const Name IDENTITY("/ndn/alice");

/// Index into PACKET_KINDS, or -1 for packets that are not measured (INFO, retries).
int
classify(const Packet& packet)
{
  const Name& name = std::visit([] (const auto& p) -> const Name& { return p.name(); }, packet);
  bool isInterest = std::holds_alternative<Interest>(packet);
  if (name.size() > CA_PREFIX.size() + 1 && CA_PREFIX.isPrefixOf(name) &&
      name[CA_PREFIX.size()] == Component::fromString("CA")) {
    auto verb = name[CA_PREFIX.size() + 1];
    if (verb == Component::fromString("NEW")) {
      return isInterest ? 0 : 1;
    }
    if (verb == Component::fromString("CHALLENGE")) {
      return isInterest ? 2 : 3;
    }
    return -1;
  }
  if (!isInterest && IDENTITY.isPrefixOf(name)) {
    return 4;
  }
  return -1;
}

template<typename Fn>
OpTiming
timeOp(std::string_view op, size_t runs, Fn&& fn)
{
  std::vector<double> samples;
  samples.reserve(runs);
  for (size_t i = 0; i < runs; ++i) {
    auto start = std::chrono::steady_clock::now();
    fn();
    auto stop = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration<double, std::micro>(stop - start).count());
  }
  auto mid = samples.begin() + samples.size() / 2;
  std::nth_element(samples.begin(), mid, samples.end());
  double median = *mid;
  if (samples.size() % 2 == 0) {
    median = (median + *std::max_element(samples.begin(), mid)) / 2;
  }
  return {std::string(op), median, runs};
}

} // namespace

BenchReport
runBench(size_t runs)
{
  if (runs == 0) {
    throw Error(ErrorCode::InvalidArgument, "at least one run is needed");
  }
  BenchReport report;

  // live exchange
  auto caKey = std::make_shared<const crypto::KeyPair>(crypto::KeyPair::generate(CA_PREFIX));
  auto now = systemTimeSource().now();
  auto caCert = makeSelfSignedCertificate(*caKey, ValidityPeriod::make(now, now + std::chrono::hours(24)),
                                          toUnixMillis(now));
  auto tokens = std::make_shared<AssertionTokenTable>();
  IssuerSetup setup;
  setup.key = caKey;
  setup.cert = caCert;
  setup.caPrefix = CA_PREFIX;
  setup.challenges.add(std::make_shared<PinChallenge>(tokens));
  Issuer issuer(std::move(setup));
  Forwarder forwarder;
  issuer.registerWith(forwarder);
  LoopbackFace face(forwarder);

  std::array<std::optional<size_t>, PACKET_KINDS.size()> sizes;
  face.setTranscriptHook([&sizes] (PacketDirection, ByteView wire) {
    int kind = classify(decodePacket(wire));
    if (kind >= 0 && !sizes[kind]) {
      sizes[kind] = wire.size();
    }
  });

  Requester requester(face, caCert);
  auto profile = requester.discoverProfile(CA_PREFIX);
  auto code = tokens->insert(IDENTITY, now + std::chrono::minutes(10));
  RequestOptions options;
  options.identity = IDENTITY;
  options.challenge = "pin";
  options.responder = makePinResponder([code] { return code; }, true);
  auto key = std::make_shared<const crypto::KeyPair>(crypto::KeyPair::generate(IDENTITY));
  auto issued = requester.requestCertificate(profile, key, options);

  for (size_t i = 0; i < PACKET_KINDS.size(); ++i) {
    if (!sizes[i]) {
      throw Error(ErrorCode::MissingField, "exchange did not produce a " + std::string(PACKET_KINDS[i]));
    }
    report.packets.push_back({std::string(PACKET_KINDS[i]), *sizes[i]});
  }

  // crypto timings on inputs shaped like the exchange
  const auto& message = issued.certificate.data().signedPortion();
  auto signature = key->sign(message);
  auto peer = crypto::PrivateKey::generate();
  auto own = crypto::PrivateKey::generate();
  auto peerPublic = peer.publicKey();
  auto secret = crypto::ecdh(own.native(), peerPublic);
  auto salt = crypto::randomBytes(crypto::SALT_SIZE);
  crypto::AesKey aesKey{};
  crypto::fillRandom(aesKey);
  crypto::Iv iv{};
  crypto::fillRandom(iv);
  ChallengeMessage challenge;
  challenge.challengeId = "pin";
  challenge.params.set(param::CODE, code);
  auto plaintext = challenge.encode();
  auto aad = toBytes("/ndn/CA/CHALLENGE");
  auto sealed = crypto::aesGcmSeal(aesKey, iv, plaintext, aad);

  volatile bool sink = false;
  report.timings.push_back(timeOp(CRYPTO_OPS[0], runs, [&] { sink = !key->sign(message).empty(); }));
  report.timings.push_back(timeOp(CRYPTO_OPS[1], runs, [&] {
    sink = crypto::verify(message, signature, key->publicKey());
  }));
  report.timings.push_back(timeOp(CRYPTO_OPS[2], runs, [&] {
    sink = !crypto::ecdh(own.native(), peerPublic).empty();
  }));
  report.timings.push_back(timeOp(CRYPTO_OPS[3], runs, [&] {
    sink = !crypto::hkdfSha256(secret, salt, {}, crypto::AES_KEY_SIZE).empty();
  }));
  report.timings.push_back(timeOp(CRYPTO_OPS[4], runs, [&] {
    sink = !crypto::aesGcmSeal(aesKey, iv, plaintext, aad).ciphertext.empty();
  }));
  report.timings.push_back(timeOp(CRYPTO_OPS[5], runs, [&] {
    sink = !crypto::aesGcmOpen(aesKey, iv, sealed.ciphertext, sealed.tag, aad).empty();
  }));
  (void)sink;
  return report;
}

void
printTable(std::ostream& os, const BenchReport& report)
{
  os << std::left << std::setw(22) << "packet" << std::right << std::setw(10) << "bytes" << "\n";
  for (const auto& p : report.packets) {
    os << std::left << std::setw(22) << p.kind << std::right << std::setw(10) << p.bytes << "\n";
  }
  os << "\n"
     << std::left << std::setw(22) << "operation" << std::right << std::setw(14) << "median (us)"
     << std::setw(8) << "runs" << "\n";
  for (const auto& t : report.timings) {
    os << std::left << std::setw(22) << t.op << std::right << std::setw(14) << std::fixed << std::setprecision(2)
       << t.medianMicros << std::setw(8) << t.runs << "\n";
  }
  os.flush();
}

void
writeJsonLines(std::ostream& os, const BenchReport& report)
{
  for (const auto& p : report.packets) {
    os << R"({"type":"packet","kind":")" << p.kind << R"(","bytes":)" << p.bytes << "}\n";
  }
  for (const auto& t : report.timings) {
    os << R"({"type":"crypto","op":")" << t.op << R"(","median_us":)" << std::fixed << std::setprecision(3)
       << t.medianMicros << R"(,"runs":)" << t.runs << "}\n";
  }
  os.flush();
}

} // namespace tools
} // namespace ndncert
