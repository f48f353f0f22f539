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

#ifndef NDNCERT_TRANSPORT_FORWARDER_HPP
#define NDNCERT_TRANSPORT_FORWARDER_HPP

#include "ndncert/transport/content-cache.hpp"

#include <functional>
#include <memory>
#include <shared_mutex>

namespace ndncert {

/// NDN maximum packet size; also the UDP datagram limit.
constexpr size_t MAX_PACKET_SIZE = 8800;

/// Produces a Data for an Interest, or nullopt to decline.
using InterestHandler = std::function<std::optional<Data>(const Interest&)>;

/**
 * @brief Longest-prefix dispatch of Interests to local producers.
 *
 * Handlers are tried from the longest matching prefix to the shortest until one
 * returns Data. Returned Data is inserted into the content cache, which is consulted
 * before any handler.
 */
class Forwarder
{
public:
  explicit
  Forwarder(size_t cacheCapacity = 0, TimeSource& clock = systemTimeSource())
    : m_cache(cacheCapacity, clock)
  {
  }

  /// @throw Error(DuplicatePrefix), Error(InvalidArgument) for an empty prefix
  void
  registerPrefix(const Name& prefix, InterestHandler handler);

  void
  unregisterPrefix(const Name& prefix);

  std::optional<Data>
  dispatch(const Interest& interest);

  ContentCache&
  cache() noexcept
  {
    return m_cache;
  }

private:
  std::shared_mutex m_mutex;
  std::map<Name, InterestHandler> m_handlers;
  ContentCache m_cache;
};

/// Requester-side view of the network.
class Face
{
public:
  virtual
  ~Face() = default;

  /**
   * @brief Sends @p interest and waits for the first matching Data.
   * @throw Error(Timeout)
   */
  virtual Data
  expressInterest(const Interest& interest, Milliseconds timeout) = 0;
};

/// Direction of a packet seen by a transcript hook.
enum class PacketDirection { ToNetwork, FromNetwork };

using TranscriptHook = std::function<void(PacketDirection, ByteView)>;

/// Seeded random drop of packets in either direction.
class LossModel
{
public:
  LossModel(double rate, uint64_t seed);

  bool
  drop();

private:
  std::mutex m_mutex;
  double m_rate;
  uint64_t m_state;
};

/**
 * @brief In-process face: packets go through their wire encoding to a Forwarder.
 *
 * Delivery is synchronous and FIFO. A dropped or unanswered Interest fails with
 * Timeout immediately rather than after the timeout elapses.
 */
class LoopbackFace : public Face
{
public:
  explicit
  LoopbackFace(Forwarder& forwarder)
    : m_forwarder(forwarder)
  {
  }

  Data
  expressInterest(const Interest& interest, Milliseconds timeout) override;

  void
  setTranscriptHook(TranscriptHook hook)
  {
    m_hook = std::move(hook);
  }

  void
  setLossModel(std::shared_ptr<LossModel> loss)
  {
    m_loss = std::move(loss);
  }

private:
  Forwarder& m_forwarder;
  TranscriptHook m_hook;
  std::shared_ptr<LossModel> m_loss;
};

/// Sends @p makeInterest() up to @p tries times; a fresh Interest is built for every attempt.
Data
expressWithRetries(Face& face, const std::function<Interest()>& makeInterest, int tries = 3,
                   Milliseconds timeout = Milliseconds(2000));

} // namespace ndncert

#endif // NDNCERT_TRANSPORT_FORWARDER_HPP
