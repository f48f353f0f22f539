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

#include "ndncert/requester/auto-renewer.hpp"

namespace ndncert {

namespace {

bool
isTransient(ErrorCode code)
{
  return code == ErrorCode::Timeout || code == ErrorCode::Unfetchable;
}

} // namespace

AutoRenewer::AutoRenewer(Certificate current, double leadFraction, Renew renew, TimeSource& clock)
  : m_renew(std::move(renew))
  , m_leadFraction(leadFraction)
  , m_clock(clock)
  , m_current(std::move(current))
{
  if (!(leadFraction > 0.0 && leadFraction <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "lead fraction must be in (0, 1]");
  }
  if (!m_renew) {
    throw Error(ErrorCode::InvalidArgument, "no renewal function");
  }
  if (m_clock.now() > m_current.validity().notAfter) {
    throw Error(ErrorCode::InvalidArgument, m_current.name().toUri() + " has already expired");
  }
}

AutoRenewer::~AutoRenewer()
{
  stop();
}

void
AutoRenewer::setEventHandler(EventHandler handler)
{
  std::lock_guard lock(m_mutex);
  m_handler = std::move(handler);
}

TimePoint
AutoRenewer::dueAt() const
{
  std::lock_guard lock(m_mutex);
  const auto& v = m_current.validity();
  auto lead = std::chrono::duration_cast<Clock::duration>(v.duration() * m_leadFraction);
  auto due = v.notAfter - lead;
  if (m_retryAt && *m_retryAt > due) {
    due = *m_retryAt;
  }
  return due;
}

void
AutoRenewer::emit(const RenewalEvent& event)
{
  EventHandler handler;
  {
    std::lock_guard lock(m_mutex);
    handler = m_handler;
  }
  if (handler) {
    handler(event);
  }
}

bool
AutoRenewer::poll()
{
  auto now = m_clock.now();
  Certificate current = this->current();
  if (isStopped() || now < dueAt()) {
    return false;
  }

  try {
    auto next = m_renew(current);
    {
      std::lock_guard lock(m_mutex);
      m_current = next;
      m_retryAt.reset();
    }
    emit({RenewalEvent::Kind::Renewed, next, ErrorCode::None, {}});
  }
  catch (const Error& e) {
    bool expired = m_clock.now() > current.validity().notAfter;
    if (isTransient(e.code()) && !expired) {
      {
        std::lock_guard lock(m_mutex);
        m_retryAt = m_clock.now() + RETRY_BACKOFF;
      }
      emit({RenewalEvent::Kind::Retrying, std::nullopt, e.code(), e.detail()});
    }
    else {
      {
        std::lock_guard lock(m_mutex);
        m_stopReason = e.code();
      }
      m_cv.notify_all();
      emit({RenewalEvent::Kind::Stopped, std::nullopt, e.code(), e.detail()});
    }
  }
  return true;
}

void
AutoRenewer::start(Clock::duration pollInterval)
{
  std::lock_guard lock(m_mutex);
  if (m_thread.joinable()) {
    throw Error(ErrorCode::InvalidArgument, "renewer already started");
  }
  m_stopRequested = false;
  m_thread = std::thread([this, pollInterval] {
    while (true) {
      {
        std::unique_lock lock(m_mutex);
        if (m_stopRequested || m_stopReason) {
          return;
        }
      }
      poll();
      std::unique_lock lock(m_mutex);
      m_cv.wait_for(lock, pollInterval, [this] { return m_stopRequested || m_stopReason.has_value(); });
    }
  });
}

void
AutoRenewer::stop()
{
  {
    std::lock_guard lock(m_mutex);
    m_stopRequested = true;
  }
  m_cv.notify_all();
  if (m_thread.joinable() && m_thread.get_id() != std::this_thread::get_id()) {
    m_thread.join();
  }
}

Certificate
AutoRenewer::current() const
{
  std::lock_guard lock(m_mutex);
  return m_current;
}

bool
AutoRenewer::isStopped() const
{
  std::lock_guard lock(m_mutex);
  return m_stopReason.has_value();
}

std::optional<ErrorCode>
AutoRenewer::stopReason() const
{
  std::lock_guard lock(m_mutex);
  return m_stopReason;
}

AutoRenewer::Renew
makePossessionRenewal(Requester& requester, CaProfile profile, std::shared_ptr<const crypto::KeyPair> key,
                      Seconds validity, KeyStore* store)
{
  return [&requester, profile = std::move(profile), key = std::move(key), validity, store]
         (const Certificate& current) {
    RequestOptions options;
    options.identity = current.identity();
    options.challenge = "possession";
    options.responder = makePossessionResponder(current, key);
    options.validity = validity;
    auto result = requester.requestCertificate(profile, key, options);
    if (store != nullptr) {
      store->installCertificate(result.certificate);
    }
    return result.certificate;
  };
}

} // namespace ndncert
