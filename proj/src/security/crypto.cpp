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

#include "ndncert/security/crypto.hpp"

#include <openssl/core_names.h>
#include <openssl/crypto.h>
#include <openssl/ec.h>
#include <openssl/evp.h>
#include <openssl/hmac.h>
#include <openssl/kdf.h>
#include <openssl/param_build.h>
#include <openssl/rand.h>
#include <openssl/x509.h>

#include <cstring>

namespace ndncert {
namespace crypto {

namespace {

constexpr const char* CURVE_NAME = "prime256v1";

[[noreturn]] void
fail(const std::string& what)
{
  throw Error(ErrorCode::CryptoFailure, what);
}

struct MdCtxDeleter
{
  void operator()(EVP_MD_CTX* p) const noexcept { EVP_MD_CTX_free(p); }
};
using MdCtxPtr = std::unique_ptr<EVP_MD_CTX, MdCtxDeleter>;

struct PkeyCtxDeleter
{
  void operator()(EVP_PKEY_CTX* p) const noexcept { EVP_PKEY_CTX_free(p); }
};
using PkeyCtxPtr = std::unique_ptr<EVP_PKEY_CTX, PkeyCtxDeleter>;

struct CipherCtxDeleter
{
  void operator()(EVP_CIPHER_CTX* p) const noexcept { EVP_CIPHER_CTX_free(p); }
};
using CipherCtxPtr = std::unique_ptr<EVP_CIPHER_CTX, CipherCtxDeleter>;

struct EcdsaSigDeleter
{
  void operator()(ECDSA_SIG* p) const noexcept { ECDSA_SIG_free(p); }
};
using EcdsaSigPtr = std::unique_ptr<ECDSA_SIG, EcdsaSigDeleter>;

struct BnDeleter
{
  void operator()(BIGNUM* p) const noexcept { BN_clear_free(p); }
};
using BnPtr = std::unique_ptr<BIGNUM, BnDeleter>;

PkeyPtr
generateEcKey()
{
  EVP_PKEY* key = EVP_EC_gen(CURVE_NAME);
  if (key == nullptr) {
    fail("EC key generation failed");
  }
  return PkeyPtr(key);
}

Bytes
publicPointOf(EVP_PKEY* key)
{
  Bytes out(POINT_SIZE);
  size_t len = 0;
  if (EVP_PKEY_get_octet_string_param(key, OSSL_PKEY_PARAM_ENCODED_PUBLIC_KEY, out.data(), out.size(), &len) != 1 ||
      len != POINT_SIZE) {
    fail("cannot export public point");
  }
  return out;
}

} // namespace

Digest
sha256(ByteView data)
{
  Digest out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1) {
    fail("SHA-256 failed");
  }
  return out;
}

void
fillRandom(std::span<uint8_t> out)
{
  if (!out.empty() && RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
    fail("RAND_bytes failed");
  }
}

Bytes
randomBytes(size_t n)
{
  Bytes out(n);
  fillRandom(out);
  return out;
}

uint64_t
randomUint64()
{
  std::array<uint8_t, 8> buf;
  fillRandom(buf);
  uint64_t v = 0;
  for (auto b : buf) {
    v = (v << 8) | b;
  }
  return v;
}

bool
constantTimeEquals(ByteView a, ByteView b)
{
  if (a.size() != b.size()) {
    return false;
  }
  return a.empty() || CRYPTO_memcmp(a.data(), b.data(), a.size()) == 0;
}

void
secureErase(std::span<uint8_t> buf)
{
  if (!buf.empty()) {
    OPENSSL_cleanse(buf.data(), buf.size());
  }
}

Bytes
hmacSha256(ByteView key, ByteView data)
{
  Bytes out(EVP_MAX_MD_SIZE);
  unsigned int len = 0;
  if (HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()), data.data(), data.size(),
           out.data(), &len) == nullptr) {
    fail("HMAC-SHA256 failed");
  }
  out.resize(len);
  return out;
}

Bytes
hkdfSha256(ByteView ikm, ByteView salt, ByteView info, size_t length)
{
  PkeyCtxPtr ctx(EVP_PKEY_CTX_new_id(EVP_PKEY_HKDF, nullptr));
  if (ctx == nullptr || EVP_PKEY_derive_init(ctx.get()) != 1 ||
      EVP_PKEY_CTX_set_hkdf_md(ctx.get(), EVP_sha256()) != 1 ||
      EVP_PKEY_CTX_set1_hkdf_salt(ctx.get(), salt.data(), static_cast<int>(salt.size())) != 1 ||
      EVP_PKEY_CTX_set1_hkdf_key(ctx.get(), ikm.data(), static_cast<int>(ikm.size())) != 1 ||
      EVP_PKEY_CTX_add1_hkdf_info(ctx.get(), info.data(), static_cast<int>(info.size())) != 1) {
    fail("HKDF setup failed");
  }
  Bytes out(length);
  size_t outLen = length;
  if (EVP_PKEY_derive(ctx.get(), out.data(), &outLen) != 1 || outLen != length) {
    fail("HKDF derive failed");
  }
  return out;
}

void
PkeyDeleter::operator()(EVP_PKEY* p) const noexcept
{
  EVP_PKEY_free(p);
}

PublicKey
PublicKey::fromSpki(ByteView der)
{
  const unsigned char* p = der.data();
  EVP_PKEY* key = d2i_PUBKEY(nullptr, &p, static_cast<long>(der.size()));
  if (key == nullptr || p != der.data() + der.size()) {
    EVP_PKEY_free(key);
    throw Error(ErrorCode::MalformedKey, "invalid SubjectPublicKeyInfo");
  }
  std::shared_ptr<EVP_PKEY> holder(key, EVP_PKEY_free);
  char group[64] = {};
  size_t len = 0;
  if (EVP_PKEY_get_base_id(key) != EVP_PKEY_EC ||
      EVP_PKEY_get_utf8_string_param(key, OSSL_PKEY_PARAM_GROUP_NAME, group, sizeof(group), &len) != 1 ||
      std::strcmp(group, CURVE_NAME) != 0) {
    throw Error(ErrorCode::MalformedKey, "public key is not a P-256 key");
  }
  return PublicKey(holder);
}

PublicKey
PublicKey::fromPoint(ByteView point)
{
  if (point.size() != POINT_SIZE || point[0] != 0x04) {
    throw Error(ErrorCode::InvalidPoint, "expected a 65-byte uncompressed point");
  }
  std::unique_ptr<OSSL_PARAM_BLD, decltype(&OSSL_PARAM_BLD_free)> bld(OSSL_PARAM_BLD_new(),
                                                                      OSSL_PARAM_BLD_free);
  if (bld == nullptr ||
      OSSL_PARAM_BLD_push_utf8_string(bld.get(), OSSL_PKEY_PARAM_GROUP_NAME, CURVE_NAME, 0) != 1 ||
      OSSL_PARAM_BLD_push_octet_string(bld.get(), OSSL_PKEY_PARAM_PUB_KEY, point.data(), point.size()) != 1) {
    fail("cannot build EC parameters");
  }
  std::unique_ptr<OSSL_PARAM, decltype(&OSSL_PARAM_free)> params(OSSL_PARAM_BLD_to_param(bld.get()),
                                                                 OSSL_PARAM_free);
  PkeyCtxPtr ctx(EVP_PKEY_CTX_new_from_name(nullptr, "EC", nullptr));
  EVP_PKEY* key = nullptr;
  if (ctx == nullptr || EVP_PKEY_fromdata_init(ctx.get()) != 1 ||
      EVP_PKEY_fromdata(ctx.get(), &key, EVP_PKEY_PUBLIC_KEY, params.get()) != 1) {
    throw Error(ErrorCode::InvalidPoint, "point is not on P-256");
  }
  std::shared_ptr<EVP_PKEY> holder(key, EVP_PKEY_free);
  PkeyCtxPtr check(EVP_PKEY_CTX_new_from_pkey(nullptr, key, nullptr));
  if (check == nullptr || EVP_PKEY_public_check(check.get()) != 1) {
    throw Error(ErrorCode::InvalidPoint, "point failed public-key validation");
  }
  return PublicKey(holder);
}

Bytes
PublicKey::spki() const
{
  int len = i2d_PUBKEY(m_key.get(), nullptr);
  if (len <= 0) {
    fail("cannot encode SubjectPublicKeyInfo");
  }
  Bytes out(static_cast<size_t>(len));
  unsigned char* p = out.data();
  i2d_PUBKEY(m_key.get(), &p);
  return out;
}

Bytes
PublicKey::point() const
{
  return publicPointOf(m_key.get());
}

PrivateKey
PrivateKey::generate()
{
  return PrivateKey(generateEcKey());
}

PrivateKey
PrivateKey::fromPkcs8(ByteView der)
{
  const unsigned char* p = der.data();
  PKCS8_PRIV_KEY_INFO* info = d2i_PKCS8_PRIV_KEY_INFO(nullptr, &p, static_cast<long>(der.size()));
  if (info == nullptr) {
    throw Error(ErrorCode::MalformedKey, "invalid PKCS#8 PrivateKeyInfo");
  }
  EVP_PKEY* key = EVP_PKCS82PKEY(info);
  PKCS8_PRIV_KEY_INFO_free(info);
  if (key == nullptr || EVP_PKEY_get_base_id(key) != EVP_PKEY_EC) {
    EVP_PKEY_free(key);
    throw Error(ErrorCode::MalformedKey, "PKCS#8 does not hold an EC key");
  }
  return PrivateKey(PkeyPtr(key));
}

Bytes
PrivateKey::pkcs8() const
{
  PKCS8_PRIV_KEY_INFO* info = EVP_PKEY2PKCS8(m_key.get());
  if (info == nullptr) {
    fail("cannot convert key to PKCS#8");
  }
  int len = i2d_PKCS8_PRIV_KEY_INFO(info, nullptr);
  Bytes out(static_cast<size_t>(len > 0 ? len : 0));
  unsigned char* p = out.data();
  if (len <= 0 || i2d_PKCS8_PRIV_KEY_INFO(info, &p) != len) {
    PKCS8_PRIV_KEY_INFO_free(info);
    fail("cannot encode PKCS#8");
  }
  PKCS8_PRIV_KEY_INFO_free(info);
  return out;
}

PublicKey
PrivateKey::publicKey() const
{
  return PublicKey::fromPoint(publicPointOf(m_key.get()));
}

Bytes
PrivateKey::scalar() const
{
  BIGNUM* raw = nullptr;
  if (EVP_PKEY_get_bn_param(m_key.get(), OSSL_PKEY_PARAM_PRIV_KEY, &raw) != 1) {
    fail("cannot export private scalar");
  }
  BnPtr bn(raw);
  Bytes out(SCALAR_SIZE);
  if (BN_bn2binpad(bn.get(), out.data(), static_cast<int>(out.size())) != static_cast<int>(SCALAR_SIZE)) {
    fail("private scalar too large");
  }
  return out;
}

Bytes
PrivateKey::sign(ByteView message) const
{
  MdCtxPtr ctx(EVP_MD_CTX_new());
  size_t derLen = 0;
  if (ctx == nullptr ||
      EVP_DigestSignInit(ctx.get(), nullptr, EVP_sha256(), nullptr, m_key.get()) != 1 ||
      EVP_DigestSign(ctx.get(), nullptr, &derLen, message.data(), message.size()) != 1) {
    fail("ECDSA sign init failed");
  }
  Bytes der(derLen);
  if (EVP_DigestSign(ctx.get(), der.data(), &derLen, message.data(), message.size()) != 1) {
    fail("ECDSA sign failed");
  }
  const unsigned char* p = der.data();
  EcdsaSigPtr sig(d2i_ECDSA_SIG(nullptr, &p, static_cast<long>(derLen)));
  if (sig == nullptr) {
    fail("cannot parse ECDSA signature");
  }
  Bytes out(SIGNATURE_SIZE);
  const BIGNUM* r = ECDSA_SIG_get0_r(sig.get());
  const BIGNUM* s = ECDSA_SIG_get0_s(sig.get());
  if (BN_bn2binpad(r, out.data(), 32) != 32 || BN_bn2binpad(s, out.data() + 32, 32) != 32) {
    fail("ECDSA component too large");
  }
  return out;
}

bool
verify(ByteView message, ByteView signature, const PublicKey& key)
{
  if (signature.size() != SIGNATURE_SIZE) {
    return false;
  }
  EcdsaSigPtr sig(ECDSA_SIG_new());
  BIGNUM* r = BN_bin2bn(signature.data(), 32, nullptr);
  BIGNUM* s = BN_bin2bn(signature.data() + 32, 32, nullptr);
  if (sig == nullptr || r == nullptr || s == nullptr || ECDSA_SIG_set0(sig.get(), r, s) != 1) {
    BN_free(r);
    BN_free(s);
    return false;
  }
  int derLen = i2d_ECDSA_SIG(sig.get(), nullptr);
  if (derLen <= 0) {
    return false;
  }
  Bytes der(static_cast<size_t>(derLen));
  unsigned char* p = der.data();
  i2d_ECDSA_SIG(sig.get(), &p);

  MdCtxPtr ctx(EVP_MD_CTX_new());
  if (ctx == nullptr ||
      EVP_DigestVerifyInit(ctx.get(), nullptr, EVP_sha256(), nullptr, key.native()) != 1) {
    return false;
  }
  return EVP_DigestVerify(ctx.get(), der.data(), der.size(), message.data(), message.size()) == 1;
}

std::string
computeKeyId(const PublicKey& key)
{
  auto digest = sha256(key.spki());
  return toHex(ByteView(digest.data(), 8));
}

Name
makeKeyName(const Name& identity, const PublicKey& key)
{
  Name name(identity);
  name.append("KEY").append(computeKeyId(key));
  return name;
}

KeyPair
KeyPair::generate(const Name& identity)
{
  if (identity.empty()) {
    throw Error(ErrorCode::InvalidArgument, "identity name must not be empty");
  }
  auto priv = PrivateKey::generate();
  auto keyName = makeKeyName(identity, priv.publicKey());
  return KeyPair(std::move(priv), std::move(keyName));
}

KeyPair::KeyPair(PrivateKey priv, Name keyName)
  : m_private(std::move(priv))
  , m_public(m_private.publicKey())
  , m_keyName(std::move(keyName))
{
}

SessionKey::SessionKey(SessionKey&& other) noexcept
  : m_key(other.m_key)
  , m_salt(other.m_salt)
{
  secureErase(other.m_key);
}

SessionKey&
SessionKey::operator=(SessionKey&& other) noexcept
{
  if (this != &other) {
    m_key = other.m_key;
    m_salt = other.m_salt;
    secureErase(other.m_key);
  }
  return *this;
}

SessionKey::~SessionKey()
{
  secureErase(m_key);
}

EphemeralKey::EphemeralKey()
  : m_key(generateEcKey())
  , m_point(publicPointOf(m_key.get()))
{
}

Bytes
ecdh(EVP_PKEY* own, const PublicKey& peer)
{
  PkeyCtxPtr ctx(EVP_PKEY_CTX_new_from_pkey(nullptr, own, nullptr));
  size_t len = 0;
  if (ctx == nullptr || EVP_PKEY_derive_init(ctx.get()) != 1 ||
      EVP_PKEY_derive_set_peer(ctx.get(), peer.native()) != 1 ||
      EVP_PKEY_derive(ctx.get(), nullptr, &len) != 1) {
    throw Error(ErrorCode::InvalidPoint, "ECDH with peer key failed");
  }
  Bytes secret(len);
  if (EVP_PKEY_derive(ctx.get(), secret.data(), &len) != 1) {
    throw Error(ErrorCode::InvalidPoint, "ECDH derive failed");
  }
  secret.resize(len);
  return secret;
}

SessionKey
EphemeralKey::deriveSessionKey(ByteView peerPoint, const Salt& salt)
{
  if (m_key == nullptr) {
    throw Error(ErrorCode::CryptoFailure, "ephemeral key already consumed");
  }
  auto peer = PublicKey::fromPoint(peerPoint);
  Bytes shared = ecdh(m_key.get(), peer);
  // the private scalar is cleared by EVP_PKEY_free
  m_key.reset();
  Bytes okm = hkdfSha256(shared, salt, {}, AES_KEY_SIZE);
  secureErase(shared);
  AesKey key{};
  std::copy(okm.begin(), okm.end(), key.begin());
  secureErase(okm);
  SessionKey session(key, salt);
  secureErase(key);
  return session;
}

Sealed
aesGcmSeal(const AesKey& key, const Iv& iv, ByteView plaintext, ByteView associatedData)
{
  CipherCtxPtr ctx(EVP_CIPHER_CTX_new());
  int len = 0;
  if (ctx == nullptr ||
      EVP_EncryptInit_ex(ctx.get(), EVP_aes_128_gcm(), nullptr, nullptr, nullptr) != 1 ||
      EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_IVLEN, IV_SIZE, nullptr) != 1 ||
      EVP_EncryptInit_ex(ctx.get(), nullptr, nullptr, key.data(), iv.data()) != 1) {
    fail("AES-GCM init failed");
  }
  if (!associatedData.empty() &&
      EVP_EncryptUpdate(ctx.get(), nullptr, &len, associatedData.data(),
                        static_cast<int>(associatedData.size())) != 1) {
    fail("AES-GCM AAD failed");
  }
  Sealed out;
  out.ciphertext.resize(plaintext.size());
  if (!plaintext.empty() &&
      EVP_EncryptUpdate(ctx.get(), out.ciphertext.data(), &len, plaintext.data(),
                        static_cast<int>(plaintext.size())) != 1) {
    fail("AES-GCM encrypt failed");
  }
  if (EVP_EncryptFinal_ex(ctx.get(), out.ciphertext.data() + plaintext.size(), &len) != 1 ||
      EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_GET_TAG, TAG_SIZE, out.tag.data()) != 1) {
    fail("AES-GCM finalize failed");
  }
  return out;
}

Bytes
aesGcmOpen(const AesKey& key, const Iv& iv, ByteView ciphertext, const Tag& tag,
           ByteView associatedData)
{
  CipherCtxPtr ctx(EVP_CIPHER_CTX_new());
  int len = 0;
  if (ctx == nullptr ||
      EVP_DecryptInit_ex(ctx.get(), EVP_aes_128_gcm(), nullptr, nullptr, nullptr) != 1 ||
      EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_IVLEN, IV_SIZE, nullptr) != 1 ||
      EVP_DecryptInit_ex(ctx.get(), nullptr, nullptr, key.data(), iv.data()) != 1) {
    fail("AES-GCM init failed");
  }
  if (!associatedData.empty() &&
      EVP_DecryptUpdate(ctx.get(), nullptr, &len, associatedData.data(),
                        static_cast<int>(associatedData.size())) != 1) {
    fail("AES-GCM AAD failed");
  }
  Bytes plaintext(ciphertext.size());
  if (!ciphertext.empty() &&
      EVP_DecryptUpdate(ctx.get(), plaintext.data(), &len, ciphertext.data(),
                        static_cast<int>(ciphertext.size())) != 1) {
    fail("AES-GCM decrypt failed");
  }
  Tag tagCopy = tag;
  if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_TAG, TAG_SIZE, tagCopy.data()) != 1 ||
      EVP_DecryptFinal_ex(ctx.get(), plaintext.data() + plaintext.size(), &len) != 1) {
    secureErase(plaintext);
    throw Error(ErrorCode::AuthenticationFailed, "AES-GCM tag mismatch");
  }
  return plaintext;
}

IvGenerator::IvGenerator()
{
  fillRandom(m_prefix);
}

Iv
IvGenerator::next()
{
  ++m_counter;
  Iv iv{};
  std::copy(m_prefix.begin(), m_prefix.end(), iv.begin());
  for (int i = 0; i < 8; ++i) {
    iv[4 + i] = static_cast<uint8_t>(m_counter >> (8 * (7 - i)));
  }
  return iv;
}

namespace {

uint64_t
ivCounter(const Iv& iv)
{
  uint64_t c = 0;
  for (int i = 4; i < 12; ++i) {
    c = (c << 8) | iv[i];
  }
  return c;
}

} // namespace

void
IvChecker::check(const Iv& iv) const
{
  if (m_prefix && !std::equal(m_prefix->begin(), m_prefix->end(), iv.begin())) {
    throw Error(ErrorCode::IvReplay, "IV prefix changed within a session");
  }
  if (m_last && ivCounter(iv) <= *m_last) {
    throw Error(ErrorCode::IvReplay, "IV counter did not increase");
  }
}

void
IvChecker::commit(const Iv& iv)
{
  check(iv);
  std::array<uint8_t, 4> prefix;
  std::copy(iv.begin(), iv.begin() + 4, prefix.begin());
  m_prefix = prefix;
  m_last = ivCounter(iv);
}

} // namespace crypto
} // namespace ndncert
