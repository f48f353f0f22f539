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

#ifndef NDNCERT_TOOLS_TOOL_COMMON_HPP
#define NDNCERT_TOOLS_TOOL_COMMON_HPP

#include "ndncert/issuer/issuer.hpp"
#include "ndncert/transport/forwarder.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <iosfwd>

namespace ndncert {
namespace tools {

constexpr int EXIT_INTERNAL = 1; ///< unexpected exception
constexpr int EXIT_USAGE = 2;    ///< bad command line
constexpr int EXIT_ERROR_BASE = 10;

/// Exit status for @p code: EXIT_ERROR_BASE + the code's position in ErrorCode.
int
exitCodeFor(ErrorCode code);

/**
 * @brief Prints the one-line error report and returns the exit status.
 *
 *     error: code=ChallengeFailed exit=33 tool=ndncert-client detail="..."
 */
int
reportError(std::ostream& os, std::string_view tool, const Error& e);

/// Runs @p body, mapping CLI11 parse errors and ndncert errors to exit statuses.
int
runTool(std::string_view tool, CLI::App& app, int argc, char** argv, const std::function<int()>& body);

/**
 * @brief Client-side connection to an issuer.
 *
 * "udp:<host>:<port>" talks to a running daemon. "loopback" hosts the issuer described by
 * a daemon config file inside this process and talks to it through a LoopbackFace.
 */
class Transport
{
public:
  /// @throw Error(InvalidArgument) for an unknown transport, Error(ConfigError) for loopback without config
  Transport(std::string_view uri, const std::filesystem::path& config, TimeSource& clock);

  ~Transport();

  Face&
  face() noexcept
  {
    return *m_face;
  }

private:
  std::unique_ptr<Forwarder> m_forwarder;
  std::unique_ptr<Issuer> m_issuer;
  std::unique_ptr<Face> m_face;
};

/**
 * @brief Blocks the usual termination signals in the calling thread and its future children.
 *
 * Call before starting any thread; then wait with waitForSignal().
 */
void
blockSignals();

/// Returns the received signal, or 0 after @p timeout without one.
int
waitForSignal(std::chrono::milliseconds timeout);

} // namespace tools
} // namespace ndncert

#endif // NDNCERT_TOOLS_TOOL_COMMON_HPP
