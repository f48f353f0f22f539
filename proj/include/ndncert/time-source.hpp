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

#ifndef NDNCERT_TIME_SOURCE_HPP
#define NDNCERT_TIME_SOURCE_HPP

#include "ndncert/common.hpp"

#include <atomic>
#include <mutex>

namespace ndncert {

/// Injectable wall clock; every time-dependent component reads time through one of these.
class TimeSource
{
public:
  virtual ~TimeSource() = default;

  virtual TimePoint
  now() const = 0;
};

class SystemTimeSource : public TimeSource
{
public:
  TimePoint
  now() const override
  {
    return Clock::now();
  }
};

/// Test clock that only moves when told to.
class ManualTimeSource : public TimeSource
{
public:
  explicit
  ManualTimeSource(TimePoint start = Clock::now())
    : m_now(start)
  {
  }

  TimePoint
  now() const override
  {
    std::lock_guard lock(m_mutex);
    return m_now;
  }

  void
  advance(Clock::duration d)
  {
    std::lock_guard lock(m_mutex);
    m_now += d;
  }

  void
  set(TimePoint tp)
  {
    std::lock_guard lock(m_mutex);
    m_now = tp;
  }

private:
  mutable std::mutex m_mutex;
  TimePoint m_now;
};

TimeSource&
systemTimeSource();

/**
 * @brief Generates strictly increasing millisecond values: max(now, last + 1).
 *
 * Used for signed-Interest timestamps and certificate versions, both of which
 * must increase even when two calls land in the same millisecond.
 */
class MonotonicMillis
{
public:
  uint64_t
  next(TimePoint now);

private:
  std::atomic<uint64_t> m_last{0};
};

} // namespace ndncert

#endif // NDNCERT_TIME_SOURCE_HPP
