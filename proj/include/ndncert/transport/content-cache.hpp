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

#ifndef NDNCERT_TRANSPORT_CONTENT_CACHE_HPP
#define NDNCERT_TRANSPORT_CONTENT_CACHE_HPP

#include "ndncert/encoding/packet.hpp"
#include "ndncert/time-source.hpp"

#include <list>
#include <map>
#include <mutex>

namespace ndncert {

/**
 * @brief LRU Data cache where certificates get a second chance.
 *
 * Entries whose name contains a "KEY" component are inserted with two lives: when one
 * reaches the LRU tail it loses a life and moves back to the head instead of being
 * evicted. Capacity 0 disables caching. Data with an explicit FreshnessPeriod of 0 is
 * never admitted: protocol replies are one-shot, and serving them from the cache would
 * answer a replayed Interest without it ever reaching the issuer's replay check.
 */
class ContentCache
{
public:
  explicit
  ContentCache(size_t capacity, TimeSource& clock = systemTimeSource())
    : m_capacity(capacity)
    , m_clock(clock)
  {
  }

  void
  insert(const Data& data);

  /// Honors CanBePrefix, MustBeFresh (FreshnessPeriod from insertion time) and implicit digests.
  std::optional<Data>
  find(const Interest& interest);

  /// Exact-name presence check that does not refresh recency.
  bool
  contains(const Name& name) const;

  size_t
  size() const;

  size_t
  capacity() const noexcept
  {
    return m_capacity;
  }

  void
  clear();

private:
  struct Entry
  {
    Data data;
    TimePoint staleAt;
    int lives;
  };
  using List = std::list<Entry>;

  void
  evictOne();

  bool
  canSatisfy(const Interest& interest, const Entry& e, TimePoint now) const;

private:
  size_t m_capacity;
  TimeSource& m_clock;
  mutable std::mutex m_mutex;
  List m_lru; ///< front = most recent
  std::map<Name, List::iterator> m_index;
};

} // namespace ndncert

#endif // NDNCERT_TRANSPORT_CONTENT_CACHE_HPP
