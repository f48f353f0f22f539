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

#ifndef NDNCERT_TOOLS_BENCH_REPORT_HPP
#define NDNCERT_TOOLS_BENCH_REPORT_HPP

#include "ndncert/common.hpp"

#include <iosfwd>

namespace ndncert {
namespace tools {

/// Packet categories measured from one live issuance, in exchange order.
inline constexpr std::array<std::string_view, 5> PACKET_KINDS{
  "NEW Interest", "NEW Data", "CHALLENGE Interest", "CHALLENGE Data", "Certificate Data"};

/// Crypto operations timed in isolation.
inline constexpr std::array<std::string_view, 6> CRYPTO_OPS{
  "sign", "verify", "ECDH", "HKDF", "AES-GCM encrypt", "AES-GCM decrypt"};

struct PacketSize
{
  std::string kind;
  size_t bytes = 0;
};

struct OpTiming
{
  std::string op;
  double medianMicros = 0;
  size_t runs = 0;
};

struct BenchReport
{
  std::vector<PacketSize> packets;
  std::vector<OpTiming> timings;
};

/**
 * @brief Measures packet sizes and crypto timings.
 *
 * Runs issuer "/ndn" and requester "/ndn/alice" (P-256, AES-128-GCM) over a loopback face
 * with a single-round PIN and records every packet the requester sends or receives; then
 * times each crypto operation @p runs times on inputs of the sizes seen in that exchange.
 */
BenchReport
runBench(size_t runs);

/// Fixed-layout text table.
void
printTable(std::ostream& os, const BenchReport& report);

/// One JSON object per line, one line per measurement.
void
writeJsonLines(std::ostream& os, const BenchReport& report);

} // namespace tools
} // namespace ndncert

#endif // NDNCERT_TOOLS_BENCH_REPORT_HPP
