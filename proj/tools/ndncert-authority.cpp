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

#include "ndncert/challenge/assertion-token-table.hpp"

#include <iostream>

namespace ndncert {
namespace tools {
namespace {

constexpr std::string_view TOOL = "ndncert-authority";

std::filesystem::path
tokenFileOf(const std::filesystem::path& config, const std::filesystem::path& tokenFile)
{
  if (!tokenFile.empty()) {
    return tokenFile;
  }
  if (config.empty()) {
    throw Error(ErrorCode::ConfigError, "either --config or --token-file is required");
  }
  return IssuerConfig::load(config).tokenFile;
}

} // namespace
} // namespace tools
} // namespace ndncert

int
main(int argc, char** argv)
{
  using namespace ndncert;
  using namespace ndncert::tools;

  CLI::App app{"Name authority: provisions one-time PIN tokens for an issuer"};
  app.require_subcommand(1);
  std::filesystem::path config, tokenFile;
  app.add_option("--config", config, "issuer config whose token file to use");
  app.add_option("--token-file", tokenFile, "token file (overrides --config)");

  std::string identity, code;
  uint64_t lifetime = DEFAULT_TOKEN_LIFETIME.count();
  auto* tokenCmd = app.add_subcommand("token", "provision a token and print its code");
  tokenCmd->add_option("--identity", identity, "identity the token vouches for")->required();
  tokenCmd->add_option("--lifetime-seconds", lifetime, "how long the token stays usable");
  tokenCmd->add_option("--code", code, "explicit code (default: random 6 digits)");

  auto* revokeCmd = app.add_subcommand("revoke-token", "withdraw the token for an identity");
  revokeCmd->add_option("--identity", identity, "identity")->required();

  return runTool(TOOL, app, argc, argv, [&] {
    AssertionTokenTable table(tokenFileOf(config, tokenFile));
    if (*tokenCmd) {
      if (lifetime == 0) {
        throw Error(ErrorCode::InvalidArgument, "--lifetime-seconds must be positive");
      }
      auto expiry = systemTimeSource().now() + Seconds(lifetime);
      std::optional<std::string> explicitCode;
      if (!code.empty()) {
        explicitCode = code;
      }
      std::cout << table.insert(Name(identity), expiry, explicitCode) << std::endl;
    }
    else {
      table.revoke(Name(identity));
    }
    return 0;
  });
}
