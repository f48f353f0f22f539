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

#include "ndncert/transport/forwarder.hpp"

namespace ndncert {

void
Forwarder::registerPrefix(const Name& prefix, InterestHandler handler)
{
  if (prefix.empty()) {
    throw Error(ErrorCode::InvalidArgument, "cannot register the empty prefix");
  }
  std::unique_lock lock(m_mutex);
  if (!m_handlers.emplace(prefix, std::move(handler)).second) {
    throw Error(ErrorCode::DuplicatePrefix, prefix.toUri() + " is already registered");
  }
}

void
Forwarder::unregisterPrefix(const Name& prefix)
{
  std::unique_lock lock(m_mutex);
  m_handlers.erase(prefix);
}

std::optional<Data>
Forwarder::dispatch(const Interest& interest)
{
  if (auto cached = m_cache.find(interest)) {
    return cached;
  }

  std::vector<InterestHandler> candidates;
  {
    std::shared_lock lock(m_mutex);
    const Name& name = interest.name();
    for (size_t len = name.size(); len > 0; --len) {
      auto it = m_handlers.find(name.getPrefix(static_cast<ptrdiff_t>(len)));
      if (it != m_handlers.end()) {
        candidates.push_back(it->second);
      }
    }
  }
  for (const auto& handler : candidates) {
    auto data = handler(interest);
    if (data && interest.matchesData(*data)) {
      m_cache.insert(*data);
      return data;
    }
  }
  return std::nullopt;
}

LossModel::LossModel(double rate, uint64_t seed)
  : m_rate(rate)
  , m_state(seed | 1)
{
}

bool
LossModel::drop()
{
  std::lock_guard lock(m_mutex);
  // xorshift64*
  m_state ^= m_state >> 12;
  m_state ^= m_state << 25;
  m_state ^= m_state >> 27;
  auto r = (m_state * 0x2545F4914F6CDD1DULL) >> 11;
  return static_cast<double>(r) / static_cast<double>(1ULL << 53) < m_rate;
}

Data
LoopbackFace::expressInterest(const Interest& interest, Milliseconds)
{
  auto wire = interest.wireEncode();
  if (wire.size() > MAX_PACKET_SIZE) {
    throw Error(ErrorCode::InvalidArgument, "Interest exceeds " + std::to_string(MAX_PACKET_SIZE) + " bytes");
  }
  if (m_hook) {
    m_hook(PacketDirection::ToNetwork, wire);
  }
  if (m_loss && m_loss->drop()) {
    throw Error(ErrorCode::Timeout, "Interest " + interest.name().toUri() + " lost");
  }
  auto data = m_forwarder.dispatch(Interest::wireDecode(wire));
  if (!data) {
    throw Error(ErrorCode::Timeout, "no Data for " + interest.name().toUri());
  }
  auto reply = data->wireEncode();
  if (m_loss && m_loss->drop()) {
    throw Error(ErrorCode::Timeout, "Data for " + interest.name().toUri() + " lost");
  }
  if (m_hook) {
    m_hook(PacketDirection::FromNetwork, reply);
  }
  return Data::wireDecode(reply);
}

Data
expressWithRetries(Face& face, const std::function<Interest()>& makeInterest, int tries, Milliseconds timeout)
{
  for (int attempt = 1; ; ++attempt) {
    try {
      return face.expressInterest(makeInterest(), timeout);
    }
    catch (const Error& e) {
      if (e.code() != ErrorCode::Timeout || attempt >= tries) {
        throw;
      }
    }
  }
}

} // namespace ndncert
