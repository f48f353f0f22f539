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

#include "ndncert/protocol/replay-guard.hpp"

namespace ndncert {

void
ReplayGuard::accept(const Name& keyName, const InterestNonce& nonce, uint64_t timestampMs, TimePoint now)
{
  auto nowMs = toUnixMillis(now);
  auto windowMs = static_cast<uint64_t>(std::chrono::duration_cast<Milliseconds>(m_window).count());
  auto distance = timestampMs > nowMs ? timestampMs - nowMs : nowMs - timestampMs;
  if (distance > windowMs) {
    throw Error(ErrorCode::StaleTimestamp, "timestamp is " + std::to_string(distance) +
                " ms away from local time");
  }

  std::lock_guard lock(m_mutex);
  if (nowMs - m_lastPrune > windowMs / 4) {
    prune(nowMs);
  }
  auto key = std::pair(keyName, nonce);
  if (m_seen.count(key) > 0) {
    throw Error(ErrorCode::Replayed, "nonce already used by " + keyName.toUri());
  }
  auto last = m_lastTimestamp.find(keyName);
  if (last != m_lastTimestamp.end() && timestampMs <= last->second) {
    throw Error(ErrorCode::StaleTimestamp, "timestamp does not increase for " + keyName.toUri());
  }
  m_seen.emplace(std::move(key), timestampMs);
  m_lastTimestamp.insert_or_assign(keyName, timestampMs);
}

void
ReplayGuard::accept(const Interest& interest, TimePoint now)
{
  const auto& info = interest.signatureInfo();
  if (!info || !info->keyLocator()) {
    throw Error(ErrorCode::BadSignature, "Interest is not signed by a named key");
  }
  accept(*info->keyLocator(), interest.nonce(), interest.timestamp(), now);
}

size_t
ReplayGuard::size() const
{
  std::lock_guard lock(m_mutex);
  return m_seen.size();
}

void
ReplayGuard::prune(uint64_t nowMs)
{
  // Anything older than the window would be rejected as stale anyway.
  auto windowMs = static_cast<uint64_t>(std::chrono::duration_cast<Milliseconds>(m_window).count());
  auto horizon = nowMs > windowMs ? nowMs - windowMs : 0;
  std::erase_if(m_seen, [=] (const auto& entry) { return entry.second < horizon; });
  std::erase_if(m_lastTimestamp, [=] (const auto& entry) { return entry.second < horizon; });
  m_lastPrune = nowMs;
}

} // namespace ndncert
