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

#ifndef NDNCERT_TRANSPORT_UDP_HPP
#define NDNCERT_TRANSPORT_UDP_HPP

#include "ndncert/transport/forwarder.hpp"

#include <atomic>
#include <condition_variable>
#include <deque>
#include <thread>

namespace ndncert {

struct UdpEndpoint
{
  std::string host = "127.0.0.1";
  uint16_t port = 0;

  /// Parses "host:port"; throws Error(InvalidArgument).
  static UdpEndpoint
  parse(std::string_view text);

  std::string
  toString() const;
};

/**
 * @brief Serves a Forwarder over UDP, one packet per datagram.
 *
 * A receiver thread queues incoming Interests; @p nWorkers threads dispatch them and
 * send the Data back to the source address. Undecodable datagrams are dropped.
 */
class UdpServer
{
public:
  /// @throw Error(BindError)
  UdpServer(Forwarder& forwarder, const UdpEndpoint& bindTo, size_t nWorkers = 4);

  ~UdpServer();

  UdpServer(const UdpServer&) = delete;
  UdpServer& operator=(const UdpServer&) = delete;

  /// Actual bound endpoint (useful with port 0).
  UdpEndpoint
  localEndpoint() const;

  void
  setLossModel(std::shared_ptr<LossModel> loss)
  {
    m_loss = std::move(loss);
  }

  void
  stop();

private:
  struct Job
  {
    Bytes wire;
    std::vector<uint8_t> peer; // raw sockaddr
  };

  void
  receiveLoop();

  void
  workerLoop();

private:
  Forwarder& m_forwarder;
  int m_fd = -1;
  std::shared_ptr<LossModel> m_loss;
  std::atomic<bool> m_stopping{false};
  std::mutex m_mutex;
  std::condition_variable m_cv;
  std::deque<Job> m_queue;
  std::thread m_receiver;
  std::vector<std::thread> m_workers;
};

/// Requester face talking to one UdpServer.
class UdpFace : public Face
{
public:
  /// @throw Error(BindError) if the socket cannot be created or the peer not resolved
  explicit
  UdpFace(const UdpEndpoint& peer);

  ~UdpFace() override;

  UdpFace(const UdpFace&) = delete;
  UdpFace& operator=(const UdpFace&) = delete;

  Data
  expressInterest(const Interest& interest, Milliseconds timeout) override;

  void
  setLossModel(std::shared_ptr<LossModel> loss)
  {
    m_loss = std::move(loss);
  }

  /// Number of Interests still waiting for Data.
  size_t
  pendingCount() const;

private:
  struct PendingEntry
  {
    Interest interest;
    std::optional<Data> reply;
  };

  void
  receiveLoop();

private:
  int m_fd = -1;
  std::shared_ptr<LossModel> m_loss;
  std::atomic<bool> m_stopping{false};
  mutable std::mutex m_mutex;
  std::condition_variable m_cv;
  std::list<std::shared_ptr<PendingEntry>> m_pit;
  std::thread m_receiver;
};

} // namespace ndncert

#endif // NDNCERT_TRANSPORT_UDP_HPP
