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

#include "ndncert/protocol/messages.hpp"

namespace ndncert {

std::string_view
toString(RequestStatus status)
{
  switch (status) {
    case RequestStatus::BeforeChallenge:
      return "before-challenge";
    case RequestStatus::Challenge:
      return "challenge";
    case RequestStatus::Success:
      return "success";
    case RequestStatus::Failure:
      return "failure";
  }
  return "unknown";
}

ParameterMap&
ParameterMap::set(std::string_view key, ByteView value)
{
  if (key.empty() || key.size() > MAX_PARAMETER_KEY_SIZE) {
    throw Error(ErrorCode::MalformedParams, "parameter key must be 1.." +
                std::to_string(MAX_PARAMETER_KEY_SIZE) + " bytes");
  }
  if (value.size() > MAX_PARAMETER_VALUE_SIZE) {
    throw Error(ErrorCode::MalformedParams, "value of " + std::string(key) + " exceeds " +
                std::to_string(MAX_PARAMETER_VALUE_SIZE) + " bytes");
  }
  if (find(key) != nullptr) {
    throw Error(ErrorCode::MalformedParams, "duplicate parameter " + std::string(key));
  }
  m_entries.emplace_back(std::string(key), Bytes(value.begin(), value.end()));
  return *this;
}

const Bytes*
ParameterMap::find(std::string_view key) const
{
  for (const auto& [k, v] : m_entries) {
    if (k == key) {
      return &v;
    }
  }
  return nullptr;
}

std::optional<std::string>
ParameterMap::getString(std::string_view key) const
{
  if (auto v = find(key)) {
    return asString(*v);
  }
  return std::nullopt;
}

const Bytes&
ParameterMap::require(std::string_view key) const
{
  if (auto v = find(key)) {
    return *v;
  }
  throw Error(ErrorCode::MissingParameter, "parameter " + std::string(key) + " is required");
}

namespace {

const Component CA_COMPONENT = Component::fromString("CA");
const Component NEW_COMPONENT = Component::fromString("NEW");
const Component CHALLENGE_COMPONENT = Component::fromString("CHALLENGE");
const Component INFO_COMPONENT = Component::fromString("INFO");
const Component REVOKE_COMPONENT = Component::fromString("REVOKE");
const Component REVOKED_COMPONENT = Component::fromString("REVOKED");
constexpr uint32_t KEYWORD_COMPONENT = 32;

Name
caName(const Name& caPrefix, const Component& verb)
{
  Name name = caPrefix;
  name.append(CA_COMPONENT).append(verb);
  return name;
}

[[noreturn]] void
malformed(const std::string& what)
{
  throw Error(ErrorCode::MalformedPayload, what);
}

template<size_t N>
std::array<uint8_t, N>
fixedField(const tlv::Element& e, const char* what)
{
  if (e.value.size() != N) {
    malformed(std::string(what) + " must be " + std::to_string(N) + " bytes");
  }
  std::array<uint8_t, N> out{};
  std::copy(e.value.begin(), e.value.end(), out.begin());
  return out;
}

/// Runs @p fn, converting codec failures into MalformedPayload.
template<typename Fn>
auto
decodeGuarded(const char* what, Fn&& fn)
{
  try {
    return fn();
  }
  catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::MalformedParams:
      case ErrorCode::InvalidPoint:
      case ErrorCode::MalformedPayload:
        throw;
      default:
        throw Error(ErrorCode::MalformedPayload, std::string(what) + ": " + e.detail());
    }
  }
}

} // namespace

Name
makeNewName(const Name& caPrefix)
{
  return caName(caPrefix, NEW_COMPONENT);
}

Name
makeChallengeName(const Name& caPrefix, const RequestId& id)
{
  return caName(caPrefix, CHALLENGE_COMPONENT).append(Component(tlv::GenericNameComponent, Bytes(id.begin(), id.end())));
}

Name
makeInfoPrefix(const Name& caPrefix)
{
  return caName(caPrefix, INFO_COMPONENT);
}

Name
makeInfoMetadataName(const Name& caPrefix)
{
  return makeInfoPrefix(caPrefix).append(Component(KEYWORD_COMPONENT, toBytes("metadata")));
}

Name
makeRevokeName(const Name& caPrefix)
{
  return caName(caPrefix, REVOKE_COMPONENT);
}

Name
makeRevokedListPrefix(const Name& caPrefix)
{
  return caName(caPrefix, REVOKED_COMPONENT);
}

RequestKind
classifyRequest(const Name& caPrefix, const Name& interestName)
{
  Name base = caPrefix;
  base.append(CA_COMPONENT);
  if (!base.isPrefixOf(interestName) || interestName.size() <= base.size()) {
    return RequestKind::Unknown;
  }
  const auto& verb = interestName[static_cast<ptrdiff_t>(base.size())];
  if (verb == NEW_COMPONENT) {
    return RequestKind::New;
  }
  if (verb == CHALLENGE_COMPONENT) {
    return RequestKind::Challenge;
  }
  if (verb == INFO_COMPONENT) {
    return RequestKind::Info;
  }
  if (verb == REVOKE_COMPONENT) {
    return RequestKind::Revoke;
  }
  if (verb == REVOKED_COMPONENT) {
    return RequestKind::RevokedList;
  }
  return RequestKind::Unknown;
}

RequestId
requestIdFromChallengeName(const Name& caPrefix, const Name& interestName)
{
  auto index = static_cast<ptrdiff_t>(caPrefix.size() + 2);
  if (classifyRequest(caPrefix, interestName) != RequestKind::Challenge ||
      interestName.size() <= static_cast<size_t>(index)) {
    malformed("CHALLENGE name lacks a request id");
  }
  const auto& c = interestName[index];
  if (!c.isGeneric() || c.value().size() != std::tuple_size_v<RequestId>) {
    malformed("request id component must be 8 bytes");
  }
  RequestId id{};
  std::copy(c.value().begin(), c.value().end(), id.begin());
  return id;
}

Bytes
NewRequest::encode() const
{
  tlv::Encoder enc;
  enc.appendTlv(tlv::EcdhPub, ecdhPub);
  enc.appendTlv(tlv::CertRequest, certRequest.wireEncode());
  return enc.release();
}

NewRequest
NewRequest::decode(ByteView params)
{
  return decodeGuarded("NEW request", [&] {
    tlv::ElementMap fields(params, {tlv::EcdhPub, tlv::CertRequest});
    Bytes point(fields.require(tlv::EcdhPub).value.begin(), fields.require(tlv::EcdhPub).value.end());
    crypto::PublicKey::fromPoint(point);
    auto cert = Certificate::wireDecode(fields.require(tlv::CertRequest).value);
    return NewRequest{std::move(point), std::move(cert)};
  });
}

Bytes
NewResponse::encode() const
{
  tlv::Encoder enc;
  enc.appendTlv(tlv::SignatureNonce, nonce);
  if (isRedirect()) {
    for (const auto& r : redirects) {
      enc.appendNested(tlv::Redirect, [&] (tlv::Encoder& inner) {
        inner.appendTlv(tlv::RedirectCaPrefix, r.caPrefix.wireEncode());
        inner.appendTlv(tlv::RedirectCertName, r.certName.wireEncode());
      });
    }
    return enc.release();
  }
  enc.appendTlv(tlv::EcdhPub, ecdhPub);
  enc.appendTlv(tlv::Salt, salt);
  enc.appendTlv(tlv::RequestId, requestId);
  for (const auto& c : challenges) {
    enc.appendTlv(tlv::OfferedChallenge, std::string_view(c));
  }
  return enc.release();
}

NewResponse
NewResponse::decode(ByteView content)
{
  return decodeGuarded("NEW response", [&] {
    tlv::ElementMap fields(content, {tlv::SignatureNonce, tlv::EcdhPub, tlv::Salt, tlv::RequestId,
                                     tlv::OfferedChallenge, tlv::Redirect},
                           {tlv::OfferedChallenge, tlv::Redirect});
    NewResponse r;
    r.nonce = fixedField<8>(fields.require(tlv::SignatureNonce), "nonce");
    for (const auto& e : fields.all(tlv::Redirect)) {
      tlv::ElementMap inner(e.value, {tlv::RedirectCaPrefix, tlv::RedirectCertName});
      r.redirects.push_back({Name::wireDecode(inner.require(tlv::RedirectCaPrefix).value),
                             Name::wireDecode(inner.require(tlv::RedirectCertName).value)});
    }
    bool hasOffer = fields.find(tlv::EcdhPub) || fields.find(tlv::Salt) || fields.find(tlv::RequestId) ||
                    fields.find(tlv::OfferedChallenge);
    if (hasOffer == r.isRedirect()) {
      malformed("NEW response must carry either a challenge offer or a redirect");
    }
    if (hasOffer) {
      const auto& pub = fields.require(tlv::EcdhPub).value;
      r.ecdhPub.assign(pub.begin(), pub.end());
      r.salt = fixedField<crypto::SALT_SIZE>(fields.require(tlv::Salt), "salt");
      r.requestId = fixedField<8>(fields.require(tlv::RequestId), "request id");
      for (const auto& e : fields.all(tlv::OfferedChallenge)) {
        r.challenges.push_back(asString(e.value));
      }
      if (r.challenges.empty()) {
        malformed("NEW response offers no challenge");
      }
    }
    return r;
  });
}

Bytes
ChallengeMessage::encode() const
{
  tlv::Encoder enc;
  enc.appendTlv(tlv::ChallengeId, std::string_view(challengeId));
  enc.appendNonNegativeInteger(tlv::RequestStatus, static_cast<uint64_t>(status));
  enc.appendTlv(tlv::ChallengeStatus, std::string_view(challengeStatus));
  for (const auto& [k, v] : params.entries()) {
    enc.appendTlv(tlv::ParameterKey, std::string_view(k));
    enc.appendTlv(tlv::ParameterValue, v);
  }
  if (issuedCertName) {
    enc.appendTlv(tlv::IssuedCertName, issuedCertName->wireEncode());
  }
  return enc.release();
}

ChallengeMessage
ChallengeMessage::decode(ByteView plaintext)
{
  return decodeGuarded("challenge message", [&] {
    tlv::ElementMap fields(plaintext, {tlv::ChallengeId, tlv::RequestStatus, tlv::ChallengeStatus,
                                       tlv::ParameterKey, tlv::ParameterValue, tlv::IssuedCertName},
                           {tlv::ParameterKey, tlv::ParameterValue});
    ChallengeMessage m;
    m.challengeId = asString(fields.require(tlv::ChallengeId).value);
    auto status = tlv::readNonNegativeInteger(fields.require(tlv::RequestStatus));
    if (status > static_cast<uint64_t>(RequestStatus::Failure)) {
      malformed("unknown request status");
    }
    m.status = static_cast<RequestStatus>(status);
    m.challengeStatus = asString(fields.require(tlv::ChallengeStatus).value);

    // keys and values must strictly alternate
    const tlv::Element* pendingKey = nullptr;
    for (const auto& e : fields.elements()) {
      if (e.type == tlv::ParameterKey) {
        if (pendingKey) {
          throw Error(ErrorCode::MalformedParams, "parameter key without value");
        }
        pendingKey = &e;
      }
      else if (e.type == tlv::ParameterValue) {
        if (!pendingKey) {
          throw Error(ErrorCode::MalformedParams, "parameter value without key");
        }
        m.params.set(asString(pendingKey->value), e.value);
        pendingKey = nullptr;
      }
    }
    if (pendingKey) {
      throw Error(ErrorCode::MalformedParams, "parameter key without value");
    }
    if (auto issued = fields.find(tlv::IssuedCertName)) {
      m.issuedCertName = Name::wireDecode(issued->value);
    }
    return m;
  });
}

Bytes
SealedPayload::encode() const
{
  tlv::Encoder enc;
  if (nonce) {
    enc.appendTlv(tlv::SignatureNonce, *nonce);
  }
  enc.appendTlv(tlv::RequestId, requestId);
  enc.appendTlv(tlv::InitializationVector, iv);
  enc.appendTlv(tlv::EncryptedPayload, ciphertext);
  enc.appendTlv(tlv::AuthenticationTag, tag);
  return enc.release();
}

SealedPayload
SealedPayload::decode(ByteView wire)
{
  return decodeGuarded("sealed payload", [&] {
    tlv::ElementMap fields(wire, {tlv::SignatureNonce, tlv::RequestId, tlv::InitializationVector,
                                  tlv::EncryptedPayload, tlv::AuthenticationTag});
    SealedPayload p;
    if (auto n = fields.find(tlv::SignatureNonce)) {
      p.nonce = fixedField<8>(*n, "nonce");
    }
    p.requestId = fixedField<8>(fields.require(tlv::RequestId), "request id");
    p.iv = fixedField<crypto::IV_SIZE>(fields.require(tlv::InitializationVector), "IV");
    const auto& ct = fields.require(tlv::EncryptedPayload).value;
    p.ciphertext.assign(ct.begin(), ct.end());
    p.tag = fixedField<crypto::TAG_SIZE>(fields.require(tlv::AuthenticationTag), "tag");
    return p;
  });
}

Bytes
ErrorReply::encode() const
{
  tlv::Encoder enc;
  enc.appendTlv(tlv::SignatureNonce, nonce);
  enc.appendNonNegativeInteger(tlv::ErrorCode, static_cast<uint64_t>(code));
  enc.appendTlv(tlv::ErrorInfo, std::string_view(info));
  return enc.release();
}

std::optional<ErrorReply>
ErrorReply::tryDecode(ByteView content)
{
  try {
    tlv::ElementMap fields(content, {tlv::SignatureNonce, tlv::ErrorCode, tlv::ErrorInfo});
    auto code = fields.find(tlv::ErrorCode);
    if (!code) {
      return std::nullopt;
    }
    ErrorReply r;
    r.nonce = fixedField<8>(fields.require(tlv::SignatureNonce), "nonce");
    auto value = tlv::readNonNegativeInteger(*code);
    r.code = value <= static_cast<uint64_t>(ErrorCode::InvalidArgument) ? static_cast<ErrorCode>(value)
                                                                          : ErrorCode::IssuerError;
    if (auto info = fields.find(tlv::ErrorInfo)) {
      r.info = asString(info->value);
    }
    return r;
  }
  catch (const Error&) {
    return std::nullopt;
  }
}

void
throwIfErrorReply(const Data& data)
{
  if (auto reply = ErrorReply::tryDecode(data.content())) {
    throw Error(reply->code, "issuer replied: " + reply->info);
  }
}

std::optional<InterestNonce>
replyNonce(ByteView content)
{
  try {
    tlv::Reader reader(content);
    if (reader.atEnd()) {
      return std::nullopt;
    }
    auto first = reader.next();
    if (first.type != tlv::SignatureNonce || first.value.size() != 8) {
      return std::nullopt;
    }
    InterestNonce n{};
    std::copy(first.value.begin(), first.value.end(), n.begin());
    return n;
  }
  catch (const Error&) {
    return std::nullopt;
  }
}

} // namespace ndncert
