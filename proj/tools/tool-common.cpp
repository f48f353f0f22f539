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
#include "ndncert/transport/udp.hpp"

#include <iostream>

namespace ndncert {
namespace tools {

int
exitCodeFor(ErrorCode code)
{
  return EXIT_ERROR_BASE + static_cast<int>(code);
}

int
reportError(std::ostream& os, std::string_view tool, const Error& e)
{
  std::string detail;
  for (char c : e.detail()) {
    if (c == '"' || c == '\\') {
      detail += '\\';
      detail += c;
    }
    else if (c == '\n' || c == '\r') {
      detail += ' ';
    }
    else {
      detail += c;
    }
  }
  int status = exitCodeFor(e.code());
  os << "error: code=" << toString(e.code()) << " exit=" << status << " tool=" << tool
     << " detail=\"" << detail << "\"" << std::endl;
  return status;
}

int
runTool(std::string_view tool, CLI::App& app, int argc, char** argv, const std::function<int()>& body)
{
  try {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  }
  catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  }
  catch (const CLI::ParseError& e) {
    std::cerr << "error: code=Usage exit=" << EXIT_USAGE << " tool=" << tool << " detail=\"" << e.what()
              << "\"" << std::endl;
    return EXIT_USAGE;
  }
  try {
    return body();
  }
  catch (const Error& e) {
    return reportError(std::cerr, tool, e);
  }
  catch (const std::exception& e) {
    std::cerr << "error: code=Internal exit=" << EXIT_INTERNAL << " tool=" << tool << " detail=\"" << e.what()
              << "\"" << std::endl;
    return EXIT_INTERNAL;
  }
}

Transport::Transport(std::string_view uri, const std::filesystem::path& config, TimeSource& clock)
{
  if (uri == "loopback") {
    if (config.empty()) {
      throw Error(ErrorCode::ConfigError, "loopback transport needs --config to host the issuer");
    }
    auto cfg = IssuerConfig::load(config);
    m_forwarder = std::make_unique<Forwarder>(cfg.cacheCapacity, clock);
    m_issuer = makeIssuer(cfg, clock);
    m_issuer->registerWith(*m_forwarder);
    m_face = std::make_unique<LoopbackFace>(*m_forwarder);
  }
  else if (uri.rfind("udp:", 0) == 0) {
    m_face = std::make_unique<UdpFace>(UdpEndpoint::parse(uri.substr(4)));
  }
  else {
    throw Error(ErrorCode::InvalidArgument, "transport must be 'loopback' or 'udp:<host>:<port>'");
  }
}

Transport::~Transport() = default;

namespace {

sigset_t
terminationSignals()
{
  sigset_t set;
  sigemptyset(&set);
  sigaddset(&set, SIGTERM);
  sigaddset(&set, SIGINT);
  sigaddset(&set, SIGHUP);
  return set;
}

} // namespace

void
blockSignals()
{
  auto set = terminationSignals();
  pthread_sigmask(SIG_BLOCK, &set, nullptr);
}

int
waitForSignal(std::chrono::milliseconds timeout)
{
  auto set = terminationSignals();
  timespec ts{};
  ts.tv_sec = timeout.count() / 1000;
  ts.tv_nsec = (timeout.count() % 1000) * 1000000;
  int sig = sigtimedwait(&set, nullptr, &ts);
  return sig > 0 ? sig : 0;
}

} // namespace tools
} // namespace ndncert
