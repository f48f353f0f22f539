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

#ifndef NDNCERT_SECURITY_CRYPTO_HPP
#define NDNCERT_SECURITY_CRYPTO_HPP

#include "ndncert/encoding/packet.hpp"

#include <array>
#include <memory>

typedef struct evp_pkey_st EVP_PKEY;

namespace ndncert {
namespace crypto {

constexpr size_t SIGNATURE_SIZE = 64;   ///< raw r || s
constexpr size_t POINT_SIZE = 65;       ///< uncompressed SEC1 point
constexpr size_t SCALAR_SIZE = 32;
constexpr size_t AES_KEY_SIZE = 16;
constexpr size_t SALT_SIZE = 32;
constexpr size_t IV_SIZE = 12;
constexpr size_t TAG_SIZE = 16;

using AesKey = std::array<uint8_t, AES_KEY_SIZE>;
using Salt = std::array<uint8_t, SALT_SIZE>;
using Iv = std::array<uint8_t, IV_SIZE>;
using Tag = std::array<uint8_t, TAG_SIZE>;

Digest
sha256(ByteView data);

void
fillRandom(std::span<uint8_t> out);

Bytes
randomBytes(size_t n);

uint64_t
randomUint64();

/// Constant-time comparison; lengths are not secret.
bool
constantTimeEquals(ByteView a, ByteView b);

/// Zeroes memory in a way the optimizer will not drop.
void
secureErase(std::span<uint8_t> buf);

Bytes
hmacSha256(ByteView key, ByteView data);

/// HKDF with SHA-256 (extract then expand).
Bytes
hkdfSha256(ByteView ikm, ByteView salt, ByteView info, size_t length);

struct PkeyDeleter
{
  void
  operator()(EVP_PKEY* p) const noexcept;
};

using PkeyPtr = std::unique_ptr<EVP_PKEY, PkeyDeleter>;

/// P-256 public key.
class PublicKey
{
public:
  /// From DER SubjectPublicKeyInfo; throws Error(MalformedKey).
  static PublicKey
  fromSpki(ByteView der);

  /**
   * @brief From an uncompressed SEC1 point.
   * @throw Error(InvalidPoint) for the identity point, wrong encodings, or off-curve points
   */
  static PublicKey
  fromPoint(ByteView point);

  Bytes
  spki() const;

  /// 65-byte uncompressed point.
  Bytes
  point() const;

  EVP_PKEY*
  native() const noexcept
  {
    return m_key.get();
  }

  bool
  operator==(const PublicKey& other) const
  {
    return spki() == other.spki();
  }

private:
  explicit
  PublicKey(std::shared_ptr<EVP_PKEY> key)
    : m_key(std::move(key))
  {
  }

  std::shared_ptr<EVP_PKEY> m_key;

  friend class PrivateKey;
};

/// P-256 private key; move-only.
class PrivateKey
{
public:
  static PrivateKey
  generate();

  /// From PKCS#8 PrivateKeyInfo DER; throws Error(MalformedKey).
  static PrivateKey
  fromPkcs8(ByteView der);

  Bytes
  pkcs8() const;

  PublicKey
  publicKey() const;

  /// Big-endian 32-byte private scalar.
  Bytes
  scalar() const;

  /// ECDSA-SHA256, raw 64-byte r || s.
  Bytes
  sign(ByteView message) const;

  EVP_PKEY*
  native() const noexcept
  {
    return m_key.get();
  }

private:
  explicit
  PrivateKey(PkeyPtr key)
    : m_key(std::move(key))
  {
  }

  PkeyPtr m_key;
};

/// Verifies a raw r || s ECDSA-SHA256 signature; malformed input yields false.
bool
verify(ByteView message, ByteView signature, const PublicKey& key);

/// Hex of the first 8 bytes of SHA-256 over the SubjectPublicKeyInfo.
std::string
computeKeyId(const PublicKey& key);

/// <identity>/KEY/<key-id>
Name
makeKeyName(const Name& identity, const PublicKey& key);

/// Long-term signing key bound to a key name.
class KeyPair
{
public:
  /// @throw Error(InvalidArgument) if @p identity is empty
  static KeyPair
  generate(const Name& identity);

  KeyPair(PrivateKey priv, Name keyName);

  const PrivateKey&
  privateKey() const noexcept
  {
    return m_private;
  }

  const PublicKey&
  publicKey() const noexcept
  {
    return m_public;
  }

  const Name&
  keyName() const noexcept
  {
    return m_keyName;
  }

  /// Identity part of the key name.
  Name
  identity() const
  {
    return m_keyName.getPrefix(-2);
  }

  Bytes
  sign(ByteView message) const
  {
    return m_private.sign(message);
  }

private:
  PrivateKey m_private;
  PublicKey m_public;
  Name m_keyName;
};

/// Symmetric key shared by the two peers of one NEW exchange.
class SessionKey
{
public:
  SessionKey(const AesKey& key, const Salt& salt)
    : m_key(key)
    , m_salt(salt)
  {
  }

  SessionKey(const SessionKey&) = delete;
  SessionKey& operator=(const SessionKey&) = delete;
  SessionKey(SessionKey&& other) noexcept;
  SessionKey& operator=(SessionKey&& other) noexcept;

  ~SessionKey();

  const AesKey&
  aesKey() const noexcept
  {
    return m_key;
  }

  const Salt&
  salt() const noexcept
  {
    return m_salt;
  }

private:
  AesKey m_key;
  Salt m_salt;
};

/**
 * @brief One-shot ECDH key share.
 *
 * The scalar is destroyed by deriveSessionKey(); a second call throws.
 */
class EphemeralKey
{
public:
  EphemeralKey();

  /// Uncompressed point (g^x).
  const Bytes&
  publicPoint() const noexcept
  {
    return m_point;
  }

  /**
   * @brief aesKey = HKDF-SHA256(salt, ECDH(x, peer))[0..16); erases x and the shared secret.
   * @throw Error(InvalidPoint) if @p peerPoint is not a valid P-256 point
   */
  SessionKey
  deriveSessionKey(ByteView peerPoint, const Salt& salt);

  bool
  isConsumed() const noexcept
  {
    return m_key == nullptr;
  }

private:
  PkeyPtr m_key;
  Bytes m_point;
};

/// Raw ECDH shared secret (x coordinate); exposed for tests and benchmarks.
Bytes
ecdh(EVP_PKEY* own, const PublicKey& peer);

struct Sealed
{
  Bytes ciphertext;
  Tag tag{};
};

/// AES-128-GCM encryption with a 12-byte IV.
Sealed
aesGcmSeal(const AesKey& key, const Iv& iv, ByteView plaintext, ByteView associatedData);

/// @throw Error(AuthenticationFailed) when the tag does not verify
Bytes
aesGcmOpen(const AesKey& key, const Iv& iv, ByteView ciphertext, const Tag& tag,
           ByteView associatedData);

/// Sender side of the IV scheme: fixed random 4-byte prefix + 64-bit big-endian counter.
class IvGenerator
{
public:
  IvGenerator();

  Iv
  next();

private:
  std::array<uint8_t, 4> m_prefix;
  uint64_t m_counter = 0;
};

/// Receiver side: the peer's prefix must not change and its counter must strictly increase.
class IvChecker
{
public:
  /// @throw Error(IvReplay) if @p iv would not be accepted
  void
  check(const Iv& iv) const;

  /// Records @p iv as seen; call only after the ciphertext authenticated.
  void
  commit(const Iv& iv);

private:
  std::optional<std::array<uint8_t, 4>> m_prefix;
  std::optional<uint64_t> m_last;
};

} // namespace crypto
} // namespace ndncert

#endif // NDNCERT_SECURITY_CRYPTO_HPP
