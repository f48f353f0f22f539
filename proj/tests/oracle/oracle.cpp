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

#include "oracle.hpp"

#include <gmpxx.h>

namespace ndncert {
namespace tests {
namespace oracle {

namespace {

constexpr std::array<uint32_t, 64> K = {
  0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1, 0x923f82a4, 0xab1c5ed5,
  0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174,
  0xe49b69c1, 0xefbe4786, 0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
  0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147, 0x06ca6351, 0x14292967,
  0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13, 0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85,
  0xa2bfe8a1, 0xa81a664b, 0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
  0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a, 0x5b9cca4f, 0x682e6ff3,
  0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208, 0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2,
};

uint32_t
rotr(uint32_t x, int n)
{
  return (x >> n) | (x << (32 - n));
}

struct Curve
{
  mpz_class p{"FFFFFFFF00000001000000000000000000000000FFFFFFFFFFFFFFFFFFFFFFFF", 16};
  mpz_class a{p - 3};
  mpz_class b{"5AC635D8AA3A93E7B3EBBD55769886BC651D06B0CC53B0F63BCE3C3E27D2604B", 16};
  mpz_class gx{"6B17D1F2E12C4247F8BCE6E563A440F277037D812DEB33A0F4A13945D898C296", 16};
  mpz_class gy{"4FE342E2FE1A7F9B8EE7EB4A7C0F9E162BCE33576B315ECECBB6406837BF51F5", 16};
  mpz_class n{"FFFFFFFF00000000FFFFFFFFFFFFFFFFBCE6FAADA7179E84F3B9CAC2FC632551", 16};
};

const Curve&
curve()
{
  static const Curve c;
  return c;
}

struct Point
{
  mpz_class x, y;
  bool infinity = true;
};

mpz_class
mod(const mpz_class& v, const mpz_class& m)
{
  mpz_class r = v % m;
  if (r < 0)
    r += m;
  return r;
}

mpz_class
inverse(const mpz_class& v, const mpz_class& m)
{
  mpz_class r;
  mpz_invert(r.get_mpz_t(), mod(v, m).get_mpz_t(), m.get_mpz_t());
  return r;
}

Point
add(const Point& P, const Point& Q)
{
  const auto& c = curve();
  if (P.infinity)
    return Q;
  if (Q.infinity)
    return P;
  mpz_class lambda;
  if (P.x == Q.x) {
    if (mod(P.y + Q.y, c.p) == 0)
      return Point{};
    lambda = mod((3 * P.x * P.x + c.a) * inverse(2 * P.y, c.p), c.p);
  }
  else {
    lambda = mod((Q.y - P.y) * inverse(Q.x - P.x, c.p), c.p);
  }
  Point R;
  R.infinity = false;
  R.x = mod(lambda * lambda - P.x - Q.x, c.p);
  R.y = mod(lambda * (P.x - R.x) - P.y, c.p);
  return R;
}

Point
multiply(mpz_class k, Point P)
{
  Point R;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t()))
      R = add(R, P);
    P = add(P, P);
    k >>= 1;
  }
  return R;
}

Point
generator()
{
  return Point{curve().gx, curve().gy, false};
}

mpz_class
fromBytes(ByteView b)
{
  mpz_class v;
  if (!b.empty())
    mpz_import(v.get_mpz_t(), b.size(), 1, 1, 1, 0, b.data());
  return v;
}

Bytes
toBytes(const mpz_class& v, size_t width)
{
  Bytes out(width, 0);
  size_t count = 0;
  Bytes tmp((mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8 + 1);
  mpz_export(tmp.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
  std::copy(tmp.begin(), tmp.begin() + count, out.begin() + (width - count));
  return out;
}

bool
onCurve(const Point& P)
{
  const auto& c = curve();
  return !P.infinity && mod(P.y * P.y - (P.x * P.x * P.x + c.a * P.x + c.b), c.p) == 0;
}

std::optional<Point>
decodePoint(ByteView point)
{
  if (point.size() != 65 || point[0] != 0x04)
    return std::nullopt;
  Point P{fromBytes(point.subspan(1, 32)), fromBytes(point.subspan(33, 32)), false};
  if (P.x >= curve().p || P.y >= curve().p || !onCurve(P))
    return std::nullopt;
  return P;
}

Bytes
encodePoint(const Point& P)
{
  Bytes out{0x04};
  auto x = toBytes(P.x, 32);
  auto y = toBytes(P.y, 32);
  out.insert(out.end(), x.begin(), x.end());
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

} // namespace

std::array<uint8_t, 32>
sha256(ByteView data)
{
  uint32_t h[8] = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                   0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};
  Bytes msg(data.begin(), data.end());
  uint64_t bitLen = static_cast<uint64_t>(data.size()) * 8;
  msg.push_back(0x80);
  while (msg.size() % 64 != 56)
    msg.push_back(0);
  for (int i = 7; i >= 0; --i)
    msg.push_back(static_cast<uint8_t>(bitLen >> (8 * i)));

  for (size_t off = 0; off < msg.size(); off += 64) {
    uint32_t w[64];
    for (int t = 0; t < 16; ++t) {
      w[t] = (uint32_t(msg[off + 4 * t]) << 24) | (uint32_t(msg[off + 4 * t + 1]) << 16) |
             (uint32_t(msg[off + 4 * t + 2]) << 8) | uint32_t(msg[off + 4 * t + 3]);
    }
    for (int t = 16; t < 64; ++t) {
      uint32_t s0 = rotr(w[t - 15], 7) ^ rotr(w[t - 15], 18) ^ (w[t - 15] >> 3);
      uint32_t s1 = rotr(w[t - 2], 17) ^ rotr(w[t - 2], 19) ^ (w[t - 2] >> 10);
      w[t] = w[t - 16] + s0 + w[t - 7] + s1;
    }
    uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4], f = h[5], g = h[6], hh = h[7];
    for (int t = 0; t < 64; ++t) {
      uint32_t S1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
      uint32_t ch = (e & f) ^ (~e & g);
      uint32_t t1 = hh + S1 + ch + K[t] + w[t];
      uint32_t S0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
      uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
      uint32_t t2 = S0 + maj;
      hh = g; g = f; f = e; e = d + t1; d = c; c = b; b = a; a = t1 + t2;
    }
    h[0] += a; h[1] += b; h[2] += c; h[3] += d; h[4] += e; h[5] += f; h[6] += g; h[7] += hh;
  }
  std::array<uint8_t, 32> out{};
  for (int i = 0; i < 8; ++i) {
    out[4 * i] = static_cast<uint8_t>(h[i] >> 24);
    out[4 * i + 1] = static_cast<uint8_t>(h[i] >> 16);
    out[4 * i + 2] = static_cast<uint8_t>(h[i] >> 8);
    out[4 * i + 3] = static_cast<uint8_t>(h[i]);
  }
  return out;
}

bool
isOnCurve(ByteView point)
{
  return decodePoint(point).has_value();
}

Bytes
publicFromScalar(ByteView scalar)
{
  return encodePoint(multiply(fromBytes(scalar), generator()));
}

std::optional<Bytes>
scalarMultX(ByteView scalar, ByteView point)
{
  auto P = decodePoint(point);
  if (!P)
    return std::nullopt;
  Point R = multiply(fromBytes(scalar), *P);
  if (R.infinity)
    return std::nullopt;
  return toBytes(R.x, 32);
}

bool
ecdsaVerify(ByteView message, ByteView signature, ByteView point)
{
  const auto& c = curve();
  auto Q = decodePoint(point);
  if (!Q || signature.size() != 64)
    return false;
  mpz_class r = fromBytes(signature.subspan(0, 32));
  mpz_class s = fromBytes(signature.subspan(32, 32));
  if (r <= 0 || r >= c.n || s <= 0 || s >= c.n)
    return false;
  auto digest = sha256(message);
  mpz_class e = fromBytes(digest);
  mpz_class w = inverse(s, c.n);
  mpz_class u1 = mod(e * w, c.n);
  mpz_class u2 = mod(r * w, c.n);
  Point X = add(multiply(u1, generator()), multiply(u2, *Q));
  if (X.infinity)
    return false;
  return mod(X.x, c.n) == r;
}

bool
selfTest()
{
  return onCurve(generator()) && multiply(curve().n, generator()).infinity;
}

} // namespace oracle
} // namespace tests
} // namespace ndncert
