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

#include "ndncert/transport/content-cache.hpp"

namespace ndncert {

namespace {

const Component KEY_COMPONENT = Component::fromString("KEY");

bool
isCertificateName(const Name& name)
{
  return std::find(name.begin(), name.end(), KEY_COMPONENT) != name.end();
}

} // namespace

void
ContentCache::insert(const Data& data)
{
  // an explicit zero freshness marks a one-shot reply to a signed Interest
  if (m_capacity == 0 || data.freshnessPeriod() == Milliseconds(0)) {
    return;
  }
  auto now = m_clock.now();
  Entry entry{data, now + data.freshnessPeriod().value_or(Milliseconds(0)),
              isCertificateName(data.name()) ? 2 : 1};

  std::lock_guard lock(m_mutex);
  auto it = m_index.find(data.name());
  if (it != m_index.end()) {
    m_lru.erase(it->second);
    m_index.erase(it);
  }
  while (m_lru.size() >= m_capacity) {
    evictOne();
  }
  m_lru.push_front(std::move(entry));
  m_index.emplace(data.name(), m_lru.begin());
}

void
ContentCache::evictOne()
{
  while (true) {
    auto last = std::prev(m_lru.end());
    if (--last->lives > 0) {
      m_lru.splice(m_lru.begin(), m_lru, last);
      continue;
    }
    m_index.erase(last->data.name());
    m_lru.erase(last);
    return;
  }
}

bool
ContentCache::canSatisfy(const Interest& interest, const Entry& e, TimePoint now) const
{
  if (interest.mustBeFresh() && now >= e.staleAt) {
    return false;
  }
  return interest.matchesData(e.data);
}

std::optional<Data>
ContentCache::find(const Interest& interest)
{
  if (m_capacity == 0) {
    return std::nullopt;
  }
  auto now = m_clock.now();
  const Name& name = interest.name();
  bool fullName = !name.empty() && name[-1].type() == tlv::ImplicitSha256DigestComponent;
  Name lookup = fullName ? name.getPrefix(-1) : name;

  std::lock_guard lock(m_mutex);
  std::optional<List::iterator> best;
  for (auto it = m_index.lower_bound(lookup); it != m_index.end() && lookup.isPrefixOf(it->first); ++it) {
    if (!canSatisfy(interest, *it->second, now)) {
      continue;
    }
    // prefer the latest (last in canonical order) among prefix matches
    best = it->second;
    if (!interest.canBePrefix()) {
      break;
    }
  }
  if (!best) {
    return std::nullopt;
  }
  m_lru.splice(m_lru.begin(), m_lru, *best);
  return (*best)->data;
}

bool
ContentCache::contains(const Name& name) const
{
  std::lock_guard lock(m_mutex);
  return m_index.count(name) > 0;
}

size_t
ContentCache::size() const
{
  std::lock_guard lock(m_mutex);
  return m_lru.size();
}

void
ContentCache::clear()
{
  std::lock_guard lock(m_mutex);
  m_lru.clear();
  m_index.clear();
}

} // namespace ndncert
