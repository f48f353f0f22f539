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

#include "ndncert/issuer/issuer-config.hpp"
#include "ndncert/file-util.hpp"

#include <charconv>
#include <set>
#include <sstream>

namespace ndncert {

namespace {

std::vector<std::string>
splitList(std::string_view value, std::string_view separators)
{
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos < value.size()) {
    auto end = value.find_first_of(separators, pos);
    if (end == std::string_view::npos) {
      end = value.size();
    }
    auto item = trim(value.substr(pos, end - pos));
    if (!item.empty()) {
      out.emplace_back(item);
    }
    pos = end + 1;
  }
  return out;
}

uint64_t
parseUnsigned(std::string_view value)
{
  uint64_t n = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw std::invalid_argument("expected a non-negative integer, got '" + std::string(value) + "'");
  }
  return n;
}

Name
parseName(std::string_view value)
{
  if (value.empty() || value.front() != '/') {
    throw std::invalid_argument("expected a name starting with '/', got '" + std::string(value) + "'");
  }
  try {
    return Name(value);
  }
  catch (const Error& e) {
    throw std::invalid_argument(e.detail());
  }
}

} // namespace

std::vector<NamePattern>
IssuerConfig::effectiveNamePatterns() const
{
  if (!namePatterns.empty()) {
    return namePatterns;
  }
  return {NamePattern(caPrefix.toUri() == "/" ? "/*" : caPrefix.toUri() + "/*")};
}

IssuerConfig
IssuerConfig::parse(std::string_view text, const std::filesystem::path& baseDir, const std::string& sourceName)
{
  static const std::set<std::string, std::less<>> repeatable{"name-pattern", "redirect", "deny"};
  IssuerConfig cfg;
  std::set<std::string, std::less<>> seen;
  auto resolve = [&] (std::string_view value) {
    std::filesystem::path p{std::string(value)};
    return p.is_absolute() ? p : baseDir / p;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  size_t lineNo = 0;
  auto fail = [&] (const std::string& message) {
    return Error(ErrorCode::ConfigError, sourceName + ":" + std::to_string(lineNo) + ": " + message);
  };

  while (std::getline(in, line)) {
    ++lineNo;
    auto content = trim(line);
    if (content.empty() || content.front() == '#') {
      continue;
    }
    auto eq = content.find('=');
    if (eq == std::string_view::npos) {
      throw fail("expected 'key = value'");
    }
    auto key = std::string(trim(content.substr(0, eq)));
    auto value = trim(content.substr(eq + 1));
    if (value.empty()) {
      throw fail("empty value for '" + key + "'");
    }
    if (!repeatable.count(key) && !seen.insert(key).second) {
      throw fail("'" + key + "' given more than once");
    }

    try {
      if (key == "ca-prefix") {
        cfg.caPrefix = parseName(value);
      }
      else if (key == "cert-file") {
        cfg.certFile = resolve(value);
      }
      else if (key == "key-file") {
        cfg.keyFile = resolve(value);
      }
      else if (key == "anchor-file") {
        cfg.anchorFile = resolve(value);
      }
      else if (key == "max-validity-seconds") {
        auto n = parseUnsigned(value);
        if (n == 0) {
          throw std::invalid_argument("max-validity-seconds must be positive");
        }
        cfg.maxValidity = Seconds(n);
      }
      else if (key == "challenges") {
        cfg.challenges = splitList(value, ", \t");
        if (cfg.challenges.empty()) {
          throw std::invalid_argument("no challenges listed");
        }
      }
      else if (key == "name-pattern") {
        cfg.namePatterns.emplace_back(value);
      }
      else if (key == "redirect") {
        auto parts = splitList(value, " \t");
        if (parts.size() != 3) {
          throw std::invalid_argument("redirect needs '<pattern> <ca-prefix> <ca-cert-name>'");
        }
        cfg.redirects.push_back({NamePattern(parts[0]), parseName(parts[1]), parseName(parts[2])});
      }
      else if (key == "deny") {
        cfg.denylist.push_back(parseName(value));
      }
      else if (key == "issuer-id") {
        cfg.issuerId = std::string(value);
      }
      else if (key == "reverify-after") {
        if (value == "never") {
          cfg.reverifyAfter.reset();
        }
        else {
          cfg.reverifyAfter = Seconds(parseUnsigned(value));
        }
      }
      else if (key == "repo-dir") {
        cfg.repoDir = resolve(value);
      }
      else if (key == "log-file") {
        cfg.logFile = resolve(value);
      }
      else if (key == "token-file") {
        cfg.tokenFile = resolve(value);
      }
      else if (key == "outbox-file") {
        cfg.outboxFile = resolve(value);
      }
      else if (key == "state-file") {
        cfg.stateFile = resolve(value);
      }
      else if (key == "listen") {
        cfg.listen = std::string(value);
      }
      else if (key == "cache-capacity") {
        cfg.cacheCapacity = parseUnsigned(value);
      }
      else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    }
    catch (const Error& e) {
      throw fail(e.detail());
    }
    catch (const std::invalid_argument& e) {
      throw fail(e.what());
    }
  }

  lineNo = 0;
  for (auto required : {"ca-prefix", "cert-file", "key-file"}) {
    if (!seen.count(required)) {
      throw Error(ErrorCode::ConfigError, sourceName + ": missing required key '" + required + "'");
    }
  }
  if (cfg.repoDir.empty()) {
    cfg.repoDir = baseDir / "repo";
  }
  if (cfg.logFile.empty()) {
    cfg.logFile = baseDir / "transparency.log";
  }
  if (cfg.tokenFile.empty()) {
    cfg.tokenFile = baseDir / "tokens";
  }
  if (cfg.outboxFile.empty()) {
    cfg.outboxFile = baseDir / "outbox";
  }
  return cfg;
}

IssuerConfig
IssuerConfig::load(const std::filesystem::path& path)
{
  std::string text;
  try {
    text = readTextFile(path);
  }
  catch (const Error& e) {
    throw Error(ErrorCode::ConfigError, "cannot read config " + path.string() + ": " + e.detail());
  }
  auto base = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  auto cfg = parse(text, std::filesystem::absolute(base), path.string());
  cfg.source = path;
  return cfg;
}

} // namespace ndncert
