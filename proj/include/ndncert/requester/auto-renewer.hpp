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

#ifndef NDNCERT_REQUESTER_AUTO_RENEWER_HPP
#define NDNCERT_REQUESTER_AUTO_RENEWER_HPP

#include "ndncert/requester/key-store.hpp"
#include "ndncert/requester/requester.hpp"

#include <condition_variable>
#include <thread>

namespace ndncert {

struct RenewalEvent
{
  enum class Kind { Renewed, Retrying, Stopped };

  Kind kind;
  std::optional<Certificate> certificate; ///< set for Renewed
  ErrorCode code = ErrorCode::None;
  std::string info;
};

/**
 * @brief Keeps a short-lived certificate fresh.
 *
 * Renewal is due at notAfter - leadFraction * lifetime. Timeout and Unfetchable are
 * retried after a back-off; any other error, or reaching notAfter without a new
 * certificate, stops the renewer. RenewDenied is how an issuer that no longer
 * certifies a name shows up here.
 */
class AutoRenewer
{
public:
  using Renew = std::function<Certificate(const Certificate& current)>;
  using EventHandler = std::function<void(const RenewalEvent&)>;

  static constexpr Clock::duration RETRY_BACKOFF = std::chrono::seconds(1);

  /// @throw Error(InvalidArgument) unless 0 < leadFraction <= 1 and @p current is unexpired
  AutoRenewer(Certificate current, double leadFraction, Renew renew, TimeSource& clock = systemTimeSource());

  ~AutoRenewer();

  void
  setEventHandler(EventHandler handler);

  TimePoint
  dueAt() const;

  /// Renews if due; returns true when a renewal was attempted.
  bool
  poll();

  /// Runs poll() on a background thread until stop() or a terminal failure.
  void
  start(Clock::duration pollInterval = std::chrono::milliseconds(100));

  void
  stop();

  Certificate
  current() const;

  bool
  isStopped() const;

  std::optional<ErrorCode>
  stopReason() const;

private:
  void
  emit(const RenewalEvent& event);

private:
  Renew m_renew;
  double m_leadFraction;
  TimeSource& m_clock;
  EventHandler m_handler;

  mutable std::mutex m_mutex;
  std::condition_variable m_cv;
  Certificate m_current;
  std::optional<TimePoint> m_retryAt;
  std::optional<ErrorCode> m_stopReason;
  bool m_stopRequested = false;
  std::thread m_thread;
};

/**
 * @brief Renewal through the possession challenge with the same key.
 *
 * The new certificate is installed into @p store when given.
 */
AutoRenewer::Renew
makePossessionRenewal(Requester& requester, CaProfile profile, std::shared_ptr<const crypto::KeyPair> key,
                      Seconds validity, KeyStore* store = nullptr);

} // namespace ndncert

#endif // NDNCERT_REQUESTER_AUTO_RENEWER_HPP
