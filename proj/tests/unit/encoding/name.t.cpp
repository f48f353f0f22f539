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

#include "ndncert/encoding/name.hpp"

#include "test-common.hpp"

#include <boost/test/unit_test.hpp>

namespace ndncert {
namespace tests {

BOOST_AUTO_TEST_SUITE(EncodingName)

BOOST_AUTO_TEST_CASE(EmptyName)
{
  Name root("/");
  BOOST_CHECK_EQUAL(root.size(), 0);
  BOOST_CHECK(root.wireEncode() == (Bytes{0x07, 0x00}));
  BOOST_CHECK_EQUAL(root.toUri(), "/");
  BOOST_CHECK(Name::wireDecode(root.wireEncode()) == root);
}

BOOST_AUTO_TEST_CASE(CertificateExample)
{
  Name name("/example/alice/KEY/123/ca-1/456");
  BOOST_REQUIRE_EQUAL(name.size(), 6);
  auto wire = name.wireEncode();
  auto outer = tlv::parseSingle(wire, tlv::Name);
  tlv::Reader reader(outer.value);
  std::vector<std::string> seen;
  while (!reader.atEnd()) {
    auto c = reader.next();
    BOOST_CHECK_EQUAL(c.type, tlv::GenericNameComponent);
    seen.push_back(asString(c.value));
  }
  std::vector<std::string> expected{"example", "alice", "KEY", "123", "ca-1", "456"};
  BOOST_CHECK_EQUAL_COLLECTIONS(seen.begin(), seen.end(), expected.begin(), expected.end());
  BOOST_CHECK_EQUAL(name.toUri(), "/example/alice/KEY/123/ca-1/456");
}

BOOST_AUTO_TEST_CASE(Escaping)
{
  Name vehicle("/vehicles/geo:34n-118w/id:123");
  BOOST_CHECK_EQUAL(vehicle.size(), 3);
  BOOST_CHECK_EQUAL(vehicle.toUri(), "/vehicles/geo:34n-118w/id:123");

  Name bin;
  bin.append(Component(tlv::GenericNameComponent, Bytes{0x00, 'a', '/', '%', ' ', 0xFF}));
  BOOST_CHECK_EQUAL(bin.toUri(), "/%00a%2F%25%20%FF");
  BOOST_CHECK(Name(bin.toUri()) == bin);

  Name periods;
  periods.append(Component::fromString("")).append(Component::fromString(".."));
  BOOST_CHECK_EQUAL(periods.toUri(), "/.../.....");
  BOOST_CHECK(Name(periods.toUri()) == periods);

  BOOST_CHECK_THROW(Name("/a/%G1"), Error);
  BOOST_CHECK_THROW(Name("/a/%1"), Error);
  BOOST_CHECK_THROW(Name("/a/.."), Error);
}

BOOST_AUTO_TEST_CASE(TypedComponents)
{
  Bytes digest(32, 0xAB);
  Name n("/a");
  n.append(Component(tlv::ImplicitSha256DigestComponent, digest));
  BOOST_CHECK_EQUAL(n.toUri(), "/a/sha256digest=" + toHex(digest));
  BOOST_CHECK(Name(n.toUri()) == n);
  BOOST_CHECK(n.withoutDigest() == Name("/a"));

  Name typed("/33=x");
  BOOST_CHECK_EQUAL(typed[0].type(), 33);
  BOOST_CHECK_EQUAL(typed.toUri(), "/33=x");
}

BOOST_AUTO_TEST_CASE(PrefixAndOrdering)
{
  Name a("/ndn");
  Name b("/ndn/campus1");
  Name c("/ndn/campus1/alice");
  BOOST_CHECK(a.isPrefixOf(a));
  BOOST_CHECK(a.isPrefixOf(b) && b.isPrefixOf(c) && a.isPrefixOf(c));
  BOOST_CHECK(!c.isPrefixOf(b));
  BOOST_CHECK(Name("/").isPrefixOf(c));
  BOOST_CHECK(a < b && b < c);
  // shorter component sorts first
  BOOST_CHECK(Name("/b") < Name("/aa"));
  BOOST_CHECK(c.getPrefix(-1) == b);
  BOOST_CHECK(c.getPrefix(1) == a);
  BOOST_CHECK(c.getSubName(1, 1) == Name("/campus1"));
  BOOST_CHECK(c[-1] == Component::fromString("alice"));
  BOOST_CHECK_THROW(c.at(3), std::out_of_range);
}

BOOST_AUTO_TEST_CASE(NumberComponents)
{
  BOOST_CHECK_EQUAL(*Component::fromNumber(456).toNumber(), 456);
  BOOST_CHECK(!Component::fromString("045").toNumber());
  BOOST_CHECK(!Component::fromString("12a").toNumber());
  BOOST_CHECK(!Component::fromString("").toNumber());
}

BOOST_AUTO_TEST_CASE(FuzzRoundTrip)
{
  Rng rng(20260101);
  for (int i = 0; i < 10000; ++i) {
    Name name = makeRandomName(rng, 10);
    auto wire = name.wireEncode();
    Name decoded = Name::wireDecode(wire);
    BOOST_REQUIRE(decoded == name);
    BOOST_REQUIRE(decoded.wireEncode() == wire);
    // text -> binary -> text is idempotent on canonical text
    auto uri = name.toUri();
    BOOST_REQUIRE_EQUAL(Name(uri).toUri(), uri);
  }
}

BOOST_AUTO_TEST_CASE(PrefixTransitivityProperty)
{
  Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    Name c = makeRandomName(rng, 8);
    size_t j = std::uniform_int_distribution<size_t>(0, c.size())(rng);
    size_t k = std::uniform_int_distribution<size_t>(0, j)(rng);
    Name b = c.getPrefix(static_cast<ptrdiff_t>(j));
    Name a = c.getPrefix(static_cast<ptrdiff_t>(k));
    BOOST_REQUIRE(c.isPrefixOf(c));
    BOOST_REQUIRE(a.isPrefixOf(b) && b.isPrefixOf(c));
    BOOST_REQUIRE(a.isPrefixOf(c));
  }
}

BOOST_AUTO_TEST_SUITE_END()

} // namespace tests
} // namespace ndncert
