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

#include "tool-common.hpp"

#include "ndncert/file-util.hpp"
#include "ndncert/requester/auto-renewer.hpp"

#include <deque>
#include <iostream>
#include <sstream>

namespace ndncert {
namespace tools {
namespace {

constexpr std::string_view TOOL = "ndncert-client";

struct GlobalOptions
{
  std::filesystem::path anchor;
  std::string transport = "udp:127.0.0.1:6363";
  std::filesystem::path config;
};

struct RequestFlags
{
  std::string caPrefix;
  std::string identity;
  std::string challenge = "pin";
  std::filesystem::path pinFile;
  std::string pin;
  std::string email;
  std::optional<uint64_t> validitySeconds;
  std::filesystem::path out;
};

/// Reads one line from the terminal after printing @p prompt on stderr.
std::string
prompt(const std::string& text)
{
  std::cerr << text << std::flush;
  std::string line;
  if (!std::getline(std::cin, line)) {
    throw Error(ErrorCode::MissingParameter, "no input for: " + text);
  }
  return std::string(trim(line));
}

/**
 * @brief Source of challenge codes.
 *
 * A code given by flag or file is sent with the first CHALLENGE (a token-backed PIN then
 * completes in one round); file lines are used in order for later rounds. Without either
 * flag the user is prompted each time the issuer asks.
 */
struct CodeSource
{
  std::deque<std::string> codes;
  bool interactive = true;

  explicit
  CodeSource(const RequestFlags& flags)
  {
    if (!flags.pin.empty()) {
      codes.push_back(flags.pin);
      interactive = false;
    }
    if (!flags.pinFile.empty()) {
      std::istringstream is(readTextFile(flags.pinFile));
      for (std::string line; std::getline(is, line);) {
        auto code = trim(line);
        if (!code.empty()) {
          codes.emplace_back(code);
        }
      }
      interactive = false;
    }
  }

  std::function<std::string()>
  reader()
  {
    return [this] {
      if (interactive) {
        return prompt("code: ");
      }
      if (codes.empty()) {
        throw Error(ErrorCode::ChallengeFailed, "no codes left to try");
      }
      auto code = codes.front();
      codes.pop_front();
      return code;
    };
  }
};

Certificate
loadAnchor(const GlobalOptions& g)
{
  if (g.anchor.empty()) {
    throw Error(ErrorCode::ConfigError, "--anchor is required");
  }
  return loadCertificate(g.anchor);
}

Name
caPrefixOrPrompt(const std::string& flag)
{
  return Name(flag.empty() ? prompt("issuer prefix: ") : flag);
}

Name
identityOrPrompt(const std::string& flag)
{
  return Name(flag.empty() ? prompt("identity: ") : flag);
}

std::optional<Seconds>
validityOf(const RequestFlags& flags)
{
  if (!flags.validitySeconds) {
    return std::nullopt;
  }
  return Seconds(*flags.validitySeconds);
}

void
printIssued(const IssuanceResult& result, const std::filesystem::path& out)
{
  if (!out.empty()) {
    saveCertificate(result.certificate, out);
  }
  std::cout << "issued " << result.certificate.name().toUri() << "\n"
            << "issuer " << result.issuer.caPrefix.toUri() << " redirects " << result.redirects << std::endl;
}

int
runRequest(const GlobalOptions& g, RequestFlags flags)
{
  auto anchor = loadAnchor(g);
  auto caPrefix = caPrefixOrPrompt(flags.caPrefix);
  auto identity = identityOrPrompt(flags.identity);
  KeyStore store(KeyStore::defaultRoot());

  RequestOptions options;
  options.identity = identity;
  options.challenge = flags.challenge;
  options.validity = validityOf(flags);
  CodeSource codes(flags);
  if (flags.challenge == "pin") {
    options.responder = makePinResponder(codes.reader(), !codes.interactive);
  }
  else if (flags.challenge == "email") {
    auto address = flags.email.empty() ? prompt("email: ") : flags.email;
    options.responder = makeEmailResponder(address, codes.reader());
  }
  else if (flags.challenge == "possession") {
    // prove control of the key behind the newest certificate already held for the identity
    auto held = store.latestCertificate(identity);
    if (!held) {
      throw Error(ErrorCode::MissingParameter, "possession needs an installed certificate for " + identity.toUri());
    }
    auto prover = std::make_shared<const crypto::KeyPair>(store.loadKey(held->keyName()));
    options.responder = makePossessionResponder(*held, prover);
  }
  else {
    throw Error(ErrorCode::UnknownChallenge, "unsupported challenge '" + flags.challenge + "'");
  }

  Transport transport(g.transport, g.config, systemTimeSource());
  Requester requester(transport.face(), anchor);
  auto profile = requester.discoverProfile(caPrefix);
  auto key = std::make_shared<const crypto::KeyPair>(store.generateKey(identity));
  auto result = requester.requestCertificate(profile, key, options);
  store.installCertificate(result.certificate);
  printIssued(result, flags.out);
  return 0;
}

int
runRenew(const GlobalOptions& g, const RequestFlags& flags)
{
  auto anchor = loadAnchor(g);
  auto caPrefix = caPrefixOrPrompt(flags.caPrefix);
  auto identity = identityOrPrompt(flags.identity);
  KeyStore store(KeyStore::defaultRoot());
  auto held = store.latestCertificate(identity);
  if (!held) {
    throw Error(ErrorCode::MissingParameter, "no installed certificate for " + identity.toUri());
  }
  auto key = std::make_shared<const crypto::KeyPair>(store.loadKey(held->keyName()));

  Transport transport(g.transport, g.config, systemTimeSource());
  Requester requester(transport.face(), anchor);
  auto profile = requester.discoverProfile(caPrefix);
  RequestOptions options;
  options.identity = identity;
  options.challenge = "possession";
  options.responder = makePossessionResponder(*held, key);
  options.validity = validityOf(flags);
  auto result = requester.requestCertificate(profile, key, options);
  store.installCertificate(result.certificate);
  printIssued(result, flags.out);
  return 0;
}

struct RevokeFlags
{
  std::string caPrefix;
  std::string identity;
  std::string cert;
  std::string reason = "unspecified";
  std::string asOwner;
};

int
runRevoke(const GlobalOptions& g, const RevokeFlags& flags)
{
  auto anchor = loadAnchor(g);
  auto caPrefix = caPrefixOrPrompt(flags.caPrefix);
  KeyStore store(KeyStore::defaultRoot());

  Name certName;
  if (!flags.cert.empty()) {
    certName = Name(flags.cert);
  }
  else {
    auto held = store.latestCertificate(identityOrPrompt(flags.identity));
    if (!held) {
      throw Error(ErrorCode::MissingParameter, "no installed certificate for " + flags.identity);
    }
    certName = held->name();
  }

  auto now = systemTimeSource().now();
  std::optional<crypto::KeyPair> signer;
  RevocationRecord record;
  if (flags.asOwner.empty()) {
    parseCertName(certName);
    signer.emplace(store.loadKey(certName.getPrefix(-2)));
    record = makeRevocationRecord(certName, flags.reason, RevokedBy::CertificateKey, *signer, now);
  }
  else {
    auto ownerCert = store.latestCertificate(Name(flags.asOwner));
    if (!ownerCert) {
      throw Error(ErrorCode::MissingParameter, "no installed certificate for " + flags.asOwner);
    }
    signer.emplace(store.loadKey(ownerCert->keyName()));
    record = makeRevocationRecord(certName, flags.reason, RevokedBy::NamespaceOwner, *signer, now, *ownerCert);
  }

  Transport transport(g.transport, g.config, systemTimeSource());
  Requester requester(transport.face(), anchor);
  auto profile = requester.discoverProfile(caPrefix);
  auto ack = requester.requestRevocation(profile, record, *signer);
  std::cout << "revoked " << ack.certName.toUri() << " by " << toString(ack.signedBy) << std::endl;
  return 0;
}

int
runShow(const std::string& identity)
{
  KeyStore store(KeyStore::defaultRoot());
  std::vector<Name> identities;
  if (identity.empty()) {
    identities = store.identities();
  }
  else {
    identities.emplace_back(identity);
  }
  auto now = systemTimeSource().now();
  for (const auto& id : identities) {
    std::cout << id.toUri() << "\n";
    for (const auto& cert : store.certificates(id)) {
      std::cout << "  " << cert.name().toUri() << "  " << toIsoString(cert.validity().notBefore) << " - "
                << toIsoString(cert.validity().notAfter) << (cert.isValidAt(now, {}) ? "  valid" : "  expired")
                << "\n";
    }
  }
  std::cout.flush();
  return 0;
}

struct AutoRenewFlags
{
  std::string caPrefix;
  std::string identity;
  double lead = 0.5;
  uint64_t durationSeconds = 60;
  std::optional<uint64_t> validitySeconds;
};

int
runAutoRenew(const GlobalOptions& g, const AutoRenewFlags& flags)
{
  auto anchor = loadAnchor(g);
  auto identity = identityOrPrompt(flags.identity);
  KeyStore store(KeyStore::defaultRoot());
  auto held = store.latestCertificate(identity);
  if (!held) {
    throw Error(ErrorCode::MissingParameter, "no installed certificate for " + identity.toUri());
  }
  auto key = std::make_shared<const crypto::KeyPair>(store.loadKey(held->keyName()));

  Transport transport(g.transport, g.config, systemTimeSource());
  Requester requester(transport.face(), anchor);
  auto profile = requester.discoverProfile(caPrefixOrPrompt(flags.caPrefix));
  auto validity = flags.validitySeconds ? Seconds(*flags.validitySeconds)
                                        : std::chrono::duration_cast<Seconds>(held->validity().duration());

  AutoRenewer renewer(*held, flags.lead, makePossessionRenewal(requester, profile, key, validity, &store));
  renewer.setEventHandler([] (const RenewalEvent& event) {
    switch (event.kind) {
      case RenewalEvent::Kind::Renewed:
        std::cout << "renewed " << event.certificate->name().toUri() << std::endl;
        break;
      case RenewalEvent::Kind::Retrying:
        std::cout << "retrying " << toString(event.code) << std::endl;
        break;
      case RenewalEvent::Kind::Stopped:
        std::cout << "stopped " << toString(event.code) << std::endl;
        break;
    }
  });
  renewer.start();
  auto deadline = std::chrono::steady_clock::now() + Seconds(flags.durationSeconds);
  while (std::chrono::steady_clock::now() < deadline && !renewer.isStopped()) {
    std::this_thread::sleep_for(std::chrono::milliseconds(100));
  }
  renewer.stop();
  if (auto reason = renewer.stopReason(); reason && *reason != ErrorCode::None) {
    throw Error(*reason, "automatic renewal stopped");
  }
  return 0;
}

void
addRequestFlags(CLI::App* cmd, RequestFlags& flags)
{
  cmd->add_option("--ca-prefix", flags.caPrefix, "issuer prefix (prompted when absent)");
  cmd->add_option("--identity", flags.identity, "identity to certify (prompted when absent)");
  cmd->add_option("--validity-seconds", flags.validitySeconds, "requested lifetime (default: issuer maximum)");
  cmd->add_option("--out", flags.out, "also write the certificate to this file");
}

} // namespace
} // namespace tools
} // namespace ndncert

int
main(int argc, char** argv)
{
  using namespace ndncert;
  using namespace ndncert::tools;

  CLI::App app{"NDN certificate requester"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--anchor", g.anchor, "trust anchor certificate file");
  app.add_option("--transport", g.transport, "loopback | udp:<host>:<port>");
  app.add_option("--config", g.config, "issuer config hosted in-process by the loopback transport");

  RequestFlags request;
  auto* requestCmd = app.add_subcommand("request", "obtain a certificate for a fresh key");
  addRequestFlags(requestCmd, request);
  requestCmd->add_option("--challenge", request.challenge, "pin | email | possession");
  requestCmd->add_option("--pin", request.pin, "PIN code sent with the first challenge");
  requestCmd->add_option("--pin-from-file", request.pinFile, "file with one code per line, tried in order");
  requestCmd->add_option("--email", request.email, "address for the email challenge");

  RequestFlags renew;
  auto* renewCmd = app.add_subcommand("renew", "renew the newest certificate by proving possession of its key");
  addRequestFlags(renewCmd, renew);

  RevokeFlags revoke;
  auto* revokeCmd = app.add_subcommand("revoke", "revoke a certificate");
  revokeCmd->add_option("--ca-prefix", revoke.caPrefix, "issuer prefix (prompted when absent)");
  revokeCmd->add_option("--identity", revoke.identity, "revoke the newest certificate of this identity");
  revokeCmd->add_option("--cert", revoke.cert, "certificate name to revoke");
  revokeCmd->add_option("--reason", revoke.reason, "revocation reason");
  revokeCmd->add_option("--as-owner", revoke.asOwner, "sign as the owner of this ancestor namespace");

  std::string showIdentity;
  auto* showCmd = app.add_subcommand("show", "list installed certificates");
  showCmd->add_option("--identity", showIdentity, "only this identity");

  AutoRenewFlags autoRenew;
  auto* autoCmd = app.add_subcommand("auto-renew", "keep renewing before expiry for a while");
  autoCmd->add_option("--ca-prefix", autoRenew.caPrefix, "issuer prefix (prompted when absent)");
  autoCmd->add_option("--identity", autoRenew.identity, "identity to keep certified");
  autoCmd->add_option("--lead", autoRenew.lead, "renew when this fraction of the lifetime remains");
  autoCmd->add_option("--duration", autoRenew.durationSeconds, "seconds to keep running");
  autoCmd->add_option("--validity-seconds", autoRenew.validitySeconds, "lifetime of renewed certificates");

  return runTool(TOOL, app, argc, argv, [&] {
    if (*requestCmd) {
      return runRequest(g, request);
    }
    if (*renewCmd) {
      return runRenew(g, renew);
    }
    if (*revokeCmd) {
      return runRevoke(g, revoke);
    }
    if (*showCmd) {
      return runShow(showIdentity);
    }
    return runAutoRenew(g, autoRenew);
  });
}
