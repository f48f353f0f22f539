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

#include "ndncert/challenge/assertion-token-table.hpp"
#include "ndncert/file-util.hpp"
#include "ndncert/security/crypto.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstring>
#include <sstream>

namespace ndncert {

namespace {

/// flock()-based exclusive lock held for the lifetime of the object.
class FileLock
{
public:
  explicit
  FileLock(const std::filesystem::path& path)
  {
    m_fd = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0600);
    if (m_fd < 0 || ::flock(m_fd, LOCK_EX) != 0) {
      int err = errno;
      if (m_fd >= 0) {
        ::close(m_fd);
      }
      throw Error(ErrorCode::StorageFailure, "cannot lock " + path.string() + ": " + std::strerror(err));
    }
  }

  ~FileLock()
  {
    ::flock(m_fd, LOCK_UN);
    ::close(m_fd);
  }

  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

private:
  int m_fd = -1;
};

void
checkCode(std::string_view code)
{
  if (code.empty() || code.size() > 64 ||
      code.find_first_of("\t\r\n") != std::string_view::npos) {
    throw Error(ErrorCode::InvalidArgument, "token code must be 1-64 characters without tabs or newlines");
  }
}

} // namespace

std::string
generateSecretCode()
{
  // rejection sampling keeps the distribution uniform over 000000..999999
  constexpr uint64_t space = 1000000;
  constexpr uint64_t limit = UINT64_MAX - UINT64_MAX % space;
  uint64_t r;
  do {
    r = crypto::randomUint64();
  } while (r >= limit);
  auto s = std::to_string(r % space);
  return std::string(6 - s.size(), '0') + s;
}

AssertionTokenTable::AssertionTokenTable(std::filesystem::path file)
  : m_file(std::move(file))
{
  load(); // fail early on a corrupt file
}

AssertionTokenTable::Map
AssertionTokenTable::load() const
{
  if (m_file.empty()) {
    return m_memory;
  }
  Map tokens;
  if (!std::filesystem::exists(m_file)) {
    return tokens;
  }
  std::istringstream in(readTextFile(m_file));
  std::string line;
  size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (trim(line).empty()) {
      continue;
    }
    auto t1 = line.find('\t');
    auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) {
      throw Error(ErrorCode::StorageFailure, m_file.string() + ":" + std::to_string(lineNo) + ": malformed token line");
    }
    try {
      Name identity(std::string_view(line).substr(0, t1));
      auto code = line.substr(t1 + 1, t2 - t1 - 1);
      auto expiry = fromUnixMillis(std::stoull(line.substr(t2 + 1)));
      tokens.insert_or_assign(std::move(identity), Token{std::move(code), expiry});
    }
    catch (const std::exception& e) {
      throw Error(ErrorCode::StorageFailure, m_file.string() + ":" + std::to_string(lineNo) + ": " + e.what());
    }
  }
  return tokens;
}

void
AssertionTokenTable::store(const Map& tokens) const
{
  if (m_file.empty()) {
    m_memory = tokens;
    return;
  }
  std::string out;
  for (const auto& [identity, token] : tokens) {
    out += identity.toUri() + "\t" + token.code + "\t" + std::to_string(toUnixMillis(token.expiry)) + "\n";
  }
  writeFileAtomic(m_file, out, true);
}

template<typename Fn>
auto
AssertionTokenTable::withTable(Fn&& fn) const
{
  std::lock_guard guard(m_mutex);
  std::optional<FileLock> fileLock;
  if (!m_file.empty()) {
    fileLock.emplace(m_file.string() + ".lock");
  }
  auto tokens = load();
  auto [result, dirty] = fn(tokens);
  if (dirty) {
    store(tokens);
  }
  return result;
}

std::string
AssertionTokenTable::insert(const Name& identity, TimePoint expiry, std::optional<std::string> code)
{
  if (identity.empty()) {
    throw Error(ErrorCode::InvalidArgument, "token identity must not be empty");
  }
  std::string value = code ? *code : generateSecretCode();
  checkCode(value);
  return withTable([&] (Map& tokens) {
    tokens.insert_or_assign(identity, Token{value, expiry});
    return std::pair{value, true};
  });
}

bool
AssertionTokenTable::has(const Name& identity, TimePoint now) const
{
  return withTable([&] (Map& tokens) {
    auto it = tokens.find(identity);
    return std::pair{it != tokens.end() && now <= it->second.expiry, false};
  });
}

AssertionTokenTable::ConsumeResult
AssertionTokenTable::consume(const Name& identity, std::string_view code, TimePoint now)
{
  return withTable([&] (Map& tokens) {
    auto it = tokens.find(identity);
    if (it == tokens.end()) {
      return std::pair{ConsumeResult::NoToken, false};
    }
    if (now > it->second.expiry) {
      tokens.erase(it);
      return std::pair{ConsumeResult::NoToken, true};
    }
    if (!crypto::constantTimeEquals(asBytes(it->second.code), asBytes(code))) {
      return std::pair{ConsumeResult::Mismatch, false};
    }
    tokens.erase(it);
    return std::pair{ConsumeResult::Consumed, true};
  });
}

void
AssertionTokenTable::revoke(const Name& identity)
{
  withTable([&] (Map& tokens) {
    bool erased = tokens.erase(identity) > 0;
    return std::pair{0, erased};
  });
}

size_t
AssertionTokenTable::size(TimePoint now) const
{
  return withTable([&] (Map& tokens) {
    size_t n = 0;
    for (const auto& entry : tokens) {
      n += now <= entry.second.expiry;
    }
    return std::pair{n, false};
  });
}

} // namespace ndncert
