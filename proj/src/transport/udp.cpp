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

#include "ndncert/transport/udp.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

namespace ndncert {

namespace {

constexpr int POLL_INTERVAL_MS = 100;

sockaddr_in
resolve(const UdpEndpoint& ep)
{
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_DGRAM;
  addrinfo* res = nullptr;
  int rc = ::getaddrinfo(ep.host.c_str(), nullptr, &hints, &res);
  if (rc != 0 || res == nullptr) {
    throw Error(ErrorCode::BindError, "cannot resolve " + ep.host + ": " + ::gai_strerror(rc));
  }
  sockaddr_in addr{};
  std::memcpy(&addr, res->ai_addr, sizeof(addr));
  ::freeaddrinfo(res);
  addr.sin_port = htons(ep.port);
  return addr;
}

int
openSocket()
{
  int fd = ::socket(AF_INET, SOCK_DGRAM | SOCK_CLOEXEC, 0);
  if (fd < 0) {
    throw Error(ErrorCode::BindError, std::string("socket: ") + std::strerror(errno));
  }
  return fd;
}

/// Waits until @p fd is readable or the poll interval passes.
bool
waitReadable(int fd)
{
  pollfd p{fd, POLLIN, 0};
  return ::poll(&p, 1, POLL_INTERVAL_MS) > 0 && (p.revents & POLLIN);
}

} // namespace

UdpEndpoint
UdpEndpoint::parse(std::string_view text)
{
  auto colon = text.rfind(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size()) {
    throw Error(ErrorCode::InvalidArgument, "expected host:port, got '" + std::string(text) + "'");
  }
  UdpEndpoint ep;
  ep.host = std::string(text.substr(0, colon));
  unsigned long port = 0;
  auto digits = text.substr(colon + 1);
  for (char c : digits) {
    if (c < '0' || c > '9' || port > 65535) {
      throw Error(ErrorCode::InvalidArgument, "bad port '" + std::string(digits) + "'");
    }
    port = port * 10 + static_cast<unsigned long>(c - '0');
  }
  if (port > 65535) {
    throw Error(ErrorCode::InvalidArgument, "bad port '" + std::string(digits) + "'");
  }
  ep.port = static_cast<uint16_t>(port);
  return ep;
}

std::string
UdpEndpoint::toString() const
{
  return host + ":" + std::to_string(port);
}

UdpServer::UdpServer(Forwarder& forwarder, const UdpEndpoint& bindTo, size_t nWorkers)
  : m_forwarder(forwarder)
{
  auto addr = resolve(bindTo);
  m_fd = openSocket();
  if (::bind(m_fd, reinterpret_cast<const sockaddr*>(&addr), sizeof(addr)) != 0) {
    int err = errno;
    ::close(m_fd);
    throw Error(ErrorCode::BindError, "cannot bind " + bindTo.toString() + ": " + std::strerror(err));
  }
  m_receiver = std::thread([this] { receiveLoop(); });
  for (size_t i = 0; i < std::max<size_t>(nWorkers, 1); ++i) {
    m_workers.emplace_back([this] { workerLoop(); });
  }
}

UdpServer::~UdpServer()
{
  stop();
}

void
UdpServer::stop()
{
  if (m_stopping.exchange(true)) {
    return;
  }
  m_cv.notify_all();
  if (m_receiver.joinable()) {
    m_receiver.join();
  }
  for (auto& t : m_workers) {
    t.join();
  }
  ::close(m_fd);
}

UdpEndpoint
UdpServer::localEndpoint() const
{
  sockaddr_in addr{};
  socklen_t len = sizeof(addr);
  ::getsockname(m_fd, reinterpret_cast<sockaddr*>(&addr), &len);
  char buf[INET_ADDRSTRLEN] = {};
  ::inet_ntop(AF_INET, &addr.sin_addr, buf, sizeof(buf));
  return {buf, ntohs(addr.sin_port)};
}

void
UdpServer::receiveLoop()
{
  std::vector<uint8_t> buf(MAX_PACKET_SIZE + 1);
  while (!m_stopping) {
    if (!waitReadable(m_fd)) {
      continue;
    }
    sockaddr_storage peer{};
    socklen_t peerLen = sizeof(peer);
    auto n = ::recvfrom(m_fd, buf.data(), buf.size(), 0, reinterpret_cast<sockaddr*>(&peer), &peerLen);
    if (n <= 0 || static_cast<size_t>(n) > MAX_PACKET_SIZE) {
      continue;
    }
    if (m_loss && m_loss->drop()) {
      continue;
    }
    Job job{Bytes(buf.begin(), buf.begin() + n),
            std::vector<uint8_t>(reinterpret_cast<uint8_t*>(&peer), reinterpret_cast<uint8_t*>(&peer) + peerLen)};
    {
      std::lock_guard lock(m_mutex);
      m_queue.push_back(std::move(job));
    }
    m_cv.notify_one();
  }
}

void
UdpServer::workerLoop()
{
  while (true) {
    Job job;
    {
      std::unique_lock lock(m_mutex);
      m_cv.wait(lock, [this] { return m_stopping || !m_queue.empty(); });
      if (m_queue.empty()) {
        return;
      }
      job = std::move(m_queue.front());
      m_queue.pop_front();
    }
    std::optional<Data> data;
    try {
      data = m_forwarder.dispatch(Interest::wireDecode(job.wire));
    }
    catch (const Error&) {
      continue; // not an Interest we can parse
    }
    if (!data) {
      continue;
    }
    auto reply = data->wireEncode();
    if (reply.size() > MAX_PACKET_SIZE || (m_loss && m_loss->drop())) {
      continue;
    }
    ::sendto(m_fd, reply.data(), reply.size(), 0,
             reinterpret_cast<const sockaddr*>(job.peer.data()), static_cast<socklen_t>(job.peer.size()));
  }
}

UdpFace::UdpFace(const UdpEndpoint& peer)
{
  auto addr = resolve(peer);
  m_fd = openSocket();
  if (::connect(m_fd, reinterpret_cast<const sockaddr*>(&addr), sizeof(addr)) != 0) {
    int err = errno;
    ::close(m_fd);
    throw Error(ErrorCode::BindError, "cannot connect to " + peer.toString() + ": " + std::strerror(err));
  }
  m_receiver = std::thread([this] { receiveLoop(); });
}

UdpFace::~UdpFace()
{
  m_stopping = true;
  if (m_receiver.joinable()) {
    m_receiver.join();
  }
  ::close(m_fd);
}

size_t
UdpFace::pendingCount() const
{
  std::lock_guard lock(m_mutex);
  return m_pit.size();
}

Data
UdpFace::expressInterest(const Interest& interest, Milliseconds timeout)
{
  auto wire = interest.wireEncode();
  if (wire.size() > MAX_PACKET_SIZE) {
    throw Error(ErrorCode::InvalidArgument, "Interest exceeds " + std::to_string(MAX_PACKET_SIZE) + " bytes");
  }
  auto entry = std::make_shared<PendingEntry>(PendingEntry{interest, std::nullopt});
  std::unique_lock lock(m_mutex);
  auto it = m_pit.insert(m_pit.end(), entry);
  if (!(m_loss && m_loss->drop())) {
    ::send(m_fd, wire.data(), wire.size(), 0);
  }
  bool got = m_cv.wait_for(lock, timeout, [&] { return entry->reply.has_value(); });
  m_pit.erase(it);
  if (!got) {
    throw Error(ErrorCode::Timeout, "no Data for " + interest.name().toUri() + " within " +
                std::to_string(timeout.count()) + " ms");
  }
  return std::move(*entry->reply);
}

void
UdpFace::receiveLoop()
{
  std::vector<uint8_t> buf(MAX_PACKET_SIZE + 1);
  while (!m_stopping) {
    if (!waitReadable(m_fd)) {
      continue;
    }
    auto n = ::recv(m_fd, buf.data(), buf.size(), 0);
    if (n <= 0 || static_cast<size_t>(n) > MAX_PACKET_SIZE) {
      continue;
    }
    if (m_loss && m_loss->drop()) {
      continue;
    }
    Data data;
    try {
      data = Data::wireDecode(ByteView(buf.data(), static_cast<size_t>(n)));
    }
    catch (const Error&) {
      continue;
    }
    std::lock_guard lock(m_mutex);
    bool any = false;
    for (auto& entry : m_pit) {
      if (!entry->reply && entry->interest.matchesData(data)) {
        entry->reply = data;
        any = true;
      }
    }
    if (any) {
      m_cv.notify_all();
    }
  }
}

} // namespace ndncert
