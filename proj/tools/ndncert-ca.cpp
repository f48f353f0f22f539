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
#include "ndncert/requester/key-store.hpp"
#include "ndncert/requester/requester.hpp"
#include "ndncert/transport/udp.hpp"

#include <iostream>
#include <sstream>

namespace ndncert {
namespace tools {
namespace {

constexpr std::string_view TOOL = "ndncert-ca";
constexpr auto GC_INTERVAL = std::chrono::milliseconds(1000);

struct InitOptions
{
  std::filesystem::path dir;
  std::string caPrefix;
  int validityDays = 365;
  uint64_t maxValiditySeconds = 86400;
  std::string challenges = "pin, possession";
  std::string listen = "127.0.0.1:6363";
  std::string fromKeyStore;
  std::filesystem::path anchor;
};

int
runInit(const InitOptions& opts)
{
  auto confPath = opts.dir / "ca.conf";
  if (std::filesystem::exists(confPath)) {
    throw Error(ErrorCode::InvalidArgument, confPath.string() + " already exists");
  }
  std::filesystem::create_directories(opts.dir);

  Name caPrefix(opts.caPrefix);
  std::optional<crypto::KeyPair> key;
  std::optional<Certificate> cert;
  if (opts.fromKeyStore.empty()) {
    if (opts.validityDays <= 0) {
      throw Error(ErrorCode::InvalidArgument, "--validity-days must be positive");
    }
    key.emplace(crypto::KeyPair::generate(caPrefix));
    auto now = systemTimeSource().now();
    auto validity = ValidityPeriod::make(now, now + std::chrono::hours(24) * opts.validityDays);
    cert.emplace(makeSelfSignedCertificate(*key, validity, toUnixMillis(now)));
  }
  else {
    // sub-issuer: reuse a certificate obtained from a parent with `ndncert-client request`
    KeyStore store(KeyStore::defaultRoot());
    Name identity(opts.fromKeyStore);
    cert = store.latestCertificate(identity);
    if (!cert) {
      throw Error(ErrorCode::ConfigError, "no certificate for " + identity.toUri() + " in " +
                                          store.root().string());
    }
    key.emplace(store.loadKey(cert->keyName()));
    if (opts.anchor.empty()) {
      throw Error(ErrorCode::ConfigError, "--from-key-store needs --anchor naming the parent's trust anchor");
    }
    if (caPrefix != cert->identity()) {
      throw Error(ErrorCode::ConfigError, "--ca-prefix must equal the certificate identity");
    }
  }

  savePrivateKey(key->privateKey(), opts.dir / "ca.key");
  saveCertificate(*cert, opts.dir / "ca.cert");

  std::ostringstream conf;
  conf << "# issuer configuration written by ndncert-ca init\n"
       << "ca-prefix = " << caPrefix.toUri() << "\n"
       << "cert-file = ca.cert\n"
       << "key-file = ca.key\n";
  if (!opts.anchor.empty()) {
    auto anchor = loadCertificate(opts.anchor);
    saveCertificate(anchor, opts.dir / "anchor.cert");
    conf << "anchor-file = anchor.cert\n";
  }
  conf << "max-validity-seconds = " << opts.maxValiditySeconds << "\n"
       << "challenges = " << opts.challenges << "\n"
       << "repo-dir = repo\n"
       << "log-file = transparency.log\n"
       << "token-file = tokens\n"
       << "outbox-file = outbox\n"
       << "state-file = state\n"
       << "listen = " << opts.listen << "\n";
  writeFileAtomic(confPath, conf.str());

  std::cout << "config " << confPath.string() << "\n"
            << "certificate " << cert->name().toUri() << std::endl;
  return 0;
}

/// Re-reads the config and applies what can change without a restart.
void
reload(Issuer& issuer, const std::filesystem::path& configPath, std::set<Name>& denied)
{
  auto cfg = IssuerConfig::load(configPath);
  if (cfg.caPrefix != issuer.caPrefix()) {
    throw Error(ErrorCode::ConfigError, "ca-prefix cannot change on reload");
  }
  issuer.updateProfile([&] (CaProfile& profile) {
    profile.maxValidity = cfg.maxValidity;
    profile.namePatterns = cfg.effectiveNamePatterns();
    profile.redirects = cfg.redirects;
  });
  std::set<Name> next(cfg.denylist.begin(), cfg.denylist.end());
  for (const auto& name : denied) {
    if (!next.count(name)) {
      issuer.allow(name);
    }
  }
  for (const auto& name : next) {
    issuer.deny(name);
  }
  denied = std::move(next);
}

int
runDaemon(const std::filesystem::path& configPath)
{
  // signals must be blocked before the server spawns its threads
  blockSignals();

  auto cfg = IssuerConfig::load(configPath);
  auto issuer = makeIssuer(cfg);
  Forwarder forwarder(cfg.cacheCapacity);
  issuer->registerWith(forwarder);
  UdpServer server(forwarder, UdpEndpoint::parse(cfg.listen));
  std::set<Name> denied(cfg.denylist.begin(), cfg.denylist.end());

  std::cout << "serving " << issuer->caPrefix().toUri() << " on udp:" << server.localEndpoint().toString()
            << " profile-version " << issuer->profile().version << std::endl;

  while (true) {
    int sig = waitForSignal(GC_INTERVAL);
    if (sig == SIGTERM || sig == SIGINT) {
      break;
    }
    if (sig == SIGHUP) {
      try {
        reload(*issuer, configPath, denied);
        std::cout << "reloaded profile-version " << issuer->profile().version << std::endl;
      }
      catch (const Error& e) {
        // keep serving with the old settings
        reportError(std::cerr, TOOL, e);
      }
    }
    issuer->collectGarbage();
  }

  server.stop();
  auto result = issuer->log().verify();
  if (!result.ok) {
    throw Error(ErrorCode::ValidationFailed, "log broken at record " + std::to_string(result.brokenAt) + ": " +
                                             result.reason);
  }
  std::cout << "stopped; log verified with " << issuer->log().size() << " records" << std::endl;
  return 0;
}

int
runRevoke(const std::filesystem::path& configPath, const std::string& certName, const std::string& reason,
          const std::string& transport)
{
  auto cfg = IssuerConfig::load(configPath);
  auto cert = loadCertificate(cfg.certFile);
  auto key = crypto::KeyPair(loadPrivateKey(cfg.keyFile), cert.keyName());

  UdpFace face(UdpEndpoint::parse(transport.empty() ? cfg.listen : transport));
  Requester requester(face, cert);
  CaProfile profile;
  profile.caPrefix = cfg.caPrefix;
  profile.caCertificate = cert;
  auto record = makeRevocationRecord(Name(certName), reason, RevokedBy::Issuer, key, systemTimeSource().now());
  auto ack = requester.requestRevocation(profile, record, key);
  std::cout << "revoked " << ack.certName.toUri() << std::endl;
  return 0;
}

int
runLogVerify(const std::filesystem::path& configPath)
{
  auto cfg = IssuerConfig::load(configPath);
  auto cert = loadCertificate(cfg.certFile);
  auto result = verifyLogFile(cfg.logFile, cert.publicKey());
  if (!result.ok) {
    throw Error(ErrorCode::ValidationFailed, "log broken at record " + std::to_string(result.brokenAt) + ": " +
                                             result.reason);
  }
  std::cout << "log ok" << std::endl;
  return 0;
}

int
runLogQuery(const std::filesystem::path& configPath, const std::string& prefix)
{
  auto cfg = IssuerConfig::load(configPath);
  auto cert = loadCertificate(cfg.certFile);
  auto key = std::make_shared<const crypto::KeyPair>(loadPrivateKey(cfg.keyFile), cert.keyName());
  TransparencyLog log(key, cfg.logFile);
  for (const auto& r : log.query(Name(prefix))) {
    std::cout << r.sequence << "\t" << toString(r.type) << "\t" << r.certName.toUri() << "\t"
              << toIsoString(fromUnixMillis(r.timestamp)) << "\t" << toHex(r.recordHash) << "\n";
  }
  std::cout.flush();
  return 0;
}

} // namespace
} // namespace tools
} // namespace ndncert

int
main(int argc, char** argv)
{
  using namespace ndncert;
  using namespace ndncert::tools;

  CLI::App app{"NDN certificate issuer daemon and administration"};
  app.require_subcommand(1);

  InitOptions init;
  auto* initCmd = app.add_subcommand("init", "create a key, certificate and config for a new issuer");
  initCmd->add_option("--dir", init.dir, "output directory")->required();
  initCmd->add_option("--ca-prefix", init.caPrefix, "issuer namespace, e.g. /ndn")->required();
  initCmd->add_option("--validity-days", init.validityDays, "lifetime of the self-signed certificate");
  initCmd->add_option("--max-validity-seconds", init.maxValiditySeconds, "longest certificate this issuer signs");
  initCmd->add_option("--challenges", init.challenges, "comma-separated challenge list");
  initCmd->add_option("--listen", init.listen, "UDP host:port to serve on");
  initCmd->add_option("--from-key-store", init.fromKeyStore,
                      "identity whose key and certificate in the key store become the issuer's");
  initCmd->add_option("--anchor", init.anchor, "trust anchor certificate file");

  std::filesystem::path config;
  auto* runCmd = app.add_subcommand("run", "serve until SIGTERM; SIGHUP reloads the profile and denylist");
  runCmd->add_option("--config", config, "issuer config file")->required();

  std::string certName, reason = "unspecified", transport;
  auto* revokeCmd = app.add_subcommand("revoke", "ask the running issuer to revoke a certificate it issued");
  revokeCmd->add_option("--config", config, "issuer config file")->required();
  revokeCmd->add_option("--cert", certName, "certificate name")->required();
  revokeCmd->add_option("--reason", reason, "revocation reason");
  revokeCmd->add_option("--transport", transport, "host:port of the daemon (default: the config's listen)");

  std::string prefix = "/";
  auto* logCmd = app.add_subcommand("log", "transparency log tools");
  logCmd->require_subcommand(1);
  auto* verifyCmd = logCmd->add_subcommand("verify", "check hashes, links and signatures");
  verifyCmd->add_option("--config", config, "issuer config file")->required();
  auto* queryCmd = logCmd->add_subcommand("query", "list records under a name prefix");
  queryCmd->add_option("--config", config, "issuer config file")->required();
  queryCmd->add_option("--prefix", prefix, "certificate name prefix");

  return runTool(TOOL, app, argc, argv, [&] {
    if (*initCmd) {
      return runInit(init);
    }
    if (*runCmd) {
      return runDaemon(config);
    }
    if (*revokeCmd) {
      return runRevoke(config, certName, reason, transport);
    }
    if (*verifyCmd) {
      return runLogVerify(config);
    }
    return runLogQuery(config, prefix);
  });
}
