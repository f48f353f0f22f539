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

#ifndef NDNCERT_PROTOCOL_REPLAY_GUARD_HPP
#define NDNCERT_PROTOCOL_REPLAY_GUARD_HPP

#include "ndncert/encoding/packet.hpp"

#include <map>
#include <mutex>
#include <set>

namespace ndncert {

constexpr Clock::duration REPLAY_WINDOW = std::chrono::seconds(60);

/**
 * @brief Rejects signed Interests that were seen before or carry stale timestamps.
 *
 * A (key, nonce, timestamp) triple is accepted when the timestamp is within the window of
 * the local clock, the (key, nonce) pair has not been accepted within the window, and the
 * timestamp is strictly greater than the last one accepted for that key.
 */
class ReplayGuard
{
public:
  explicit
  ReplayGuard(Clock::duration window = REPLAY_WINDOW)
    : m_window(window)
  {
  }

  /**
   * @brief Atomic check-and-record.
   * @throw Error(StaleTimestamp) timestamp outside the window or not increasing
   * @throw Error(Replayed) nonce already accepted for this key
   */
  void
  accept(const Name& keyName, const InterestNonce& nonce, uint64_t timestampMs, TimePoint now);

  /// Convenience for a signed Interest (key name taken from its KeyLocator).
  void
  accept(const Interest& interest, TimePoint now);

  size_t
  size() const;

private:
  void
  prune(uint64_t nowMs);

private:
  Clock::duration m_window;
  mutable std::mutex m_mutex;
  std::map<std::pair<Name, InterestNonce>, uint64_t> m_seen; ///< -> timestamp
  std::map<Name, uint64_t> m_lastTimestamp;
  uint64_t m_lastPrune = 0;
};

} // namespace ndncert

#endif // NDNCERT_PROTOCOL_REPLAY_GUARD_HPP
