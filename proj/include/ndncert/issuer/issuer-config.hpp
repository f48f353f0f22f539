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

#ifndef NDNCERT_ISSUER_ISSUER_CONFIG_HPP
#define NDNCERT_ISSUER_ISSUER_CONFIG_HPP

#include "ndncert/protocol/profile.hpp"

#include <filesystem>

namespace ndncert {

/// @brief Issuer daemon configuration.
///
/// Text format: one `key = value` per line, '#' starts a comment line. Relative paths
/// are resolved against the directory of the configuration file.
///
///     ca-prefix = /ndn
///     cert-file = ca.cert
///     key-file = ca.key
///     max-validity-seconds = 86400
///     challenges = pin, possession
///     name-pattern = /ndn/*                        (repeatable)
///     redirect = /ndn/campus1/** /ndn/campus1 <site-cert-name>   (repeatable)
///     deny = /ndn/mallory                           (repeatable)
///     repo-dir = repo
///     log-file = transparency.log
struct IssuerConfig
{
  std::filesystem::path source; ///< file the config came from, if any

  Name caPrefix;
  std::filesystem::path certFile;
  std::filesystem::path keyFile;
  /// Trust anchor for presented certificates; defaults to the issuer's own certificate.
  std::filesystem::path anchorFile;
  Seconds maxValidity{86400};
  std::vector<std::string> challenges{"pin"};
  /// Empty means "<ca-prefix>/*".
  std::vector<NamePattern> namePatterns;
  std::vector<RedirectRule> redirects;
  std::vector<Name> denylist;
  std::string issuerId = "NDNCERT";
  /// How long an identity may renew by possession alone; nullopt = forever.
  std::optional<Seconds> reverifyAfter;

  std::filesystem::path repoDir;
  std::filesystem::path logFile;
  std::filesystem::path tokenFile;
  std::filesystem::path outboxFile;
  std::filesystem::path stateFile; ///< empty disables request-state persistence

  std::string listen = "127.0.0.1:6363";
  size_t cacheCapacity = 256;

  /// Patterns in effect (the explicit ones or the default).
  std::vector<NamePattern>
  effectiveNamePatterns() const;

  /// @throw Error(ConfigError) with "<source>:<line>: " in front of the message
  static IssuerConfig
  parse(std::string_view text, const std::filesystem::path& baseDir, const std::string& sourceName = "config");

  /// @throw Error(ConfigError)
  static IssuerConfig
  load(const std::filesystem::path& path);
};

} // namespace ndncert

#endif // NDNCERT_ISSUER_ISSUER_CONFIG_HPP
