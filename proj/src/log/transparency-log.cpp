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

#include "ndncert/log/transparency-log.hpp"
#include "ndncert/encoding/base64.hpp"
#include "ndncert/file-util.hpp"

#include <fstream>

#include <fcntl.h>
#include <unistd.h>

namespace ndncert {

std::string_view
toString(LogRecordType type)
{
  switch (type) {
    case LogRecordType::Issuance:
      return "issuance";
    case LogRecordType::Renewal:
      return "renewal";
    case LogRecordType::Revocation:
      return "revocation";
  }
  return "unknown";
}

Bytes
LogRecord::hashedPortion() const
{
  tlv::Encoder enc;
  enc.appendNonNegativeInteger(tlv::LogSequence, sequence);
  enc.appendNonNegativeInteger(tlv::LogRecordType, static_cast<uint64_t>(type));
  enc.appendRaw(certName.wireEncode());
  enc.appendTlv(tlv::PayloadDigest, payloadDigest);
  enc.appendTlv(tlv::PrevHash, prevHash);
  enc.appendNonNegativeInteger(tlv::SignatureTime, timestamp);
  return enc.release();
}

Digest
LogRecord::computeHash() const
{
  return crypto::sha256(hashedPortion());
}

Bytes
LogRecord::signedPortion() const
{
  tlv::Encoder enc;
  enc.appendRaw(hashedPortion());
  enc.appendTlv(tlv::RecordHash, recordHash);
  return enc.release();
}

Bytes
LogRecord::wireEncode() const
{
  tlv::Encoder enc;
  enc.appendNested(tlv::LogRecord, [&] (tlv::Encoder& inner) {
    inner.appendRaw(signedPortion());
    inner.appendTlv(tlv::SignatureValue, signature);
  });
  return enc.release();
}

namespace {

Digest
digestField(const tlv::Element& e)
{
  if (e.value.size() != 32) {
    throw Error(ErrorCode::MalformedPayload, "log digest field must be 32 bytes");
  }
  Digest d;
  std::copy(e.value.begin(), e.value.end(), d.begin());
  return d;
}

} // namespace

LogRecord
LogRecord::wireDecode(ByteView wire)
{
  auto outer = tlv::parseSingle(wire, tlv::LogRecord);
  tlv::ElementMap fields(outer.value, {tlv::LogSequence, tlv::LogRecordType, tlv::Name, tlv::PayloadDigest,
                                       tlv::PrevHash, tlv::SignatureTime, tlv::RecordHash, tlv::SignatureValue});
  LogRecord r;
  r.sequence = tlv::readNonNegativeInteger(fields.require(tlv::LogSequence));
  auto type = tlv::readNonNegativeInteger(fields.require(tlv::LogRecordType));
  if (type > static_cast<uint64_t>(LogRecordType::Revocation)) {
    throw Error(ErrorCode::MalformedPayload, "unknown log record type");
  }
  r.type = static_cast<LogRecordType>(type);
  r.certName = Name::wireDecode(fields.require(tlv::Name));
  r.payloadDigest = digestField(fields.require(tlv::PayloadDigest));
  r.prevHash = digestField(fields.require(tlv::PrevHash));
  r.timestamp = tlv::readNonNegativeInteger(fields.require(tlv::SignatureTime));
  r.recordHash = digestField(fields.require(tlv::RecordHash));
  const auto& sig = fields.require(tlv::SignatureValue).value;
  r.signature.assign(sig.begin(), sig.end());

  // Only the canonical encoding is acceptable, so equal records have equal bytes.
  auto canonical = r.wireEncode();
  if (!std::equal(wire.begin(), wire.end(), canonical.begin(), canonical.end())) {
    throw Error(ErrorCode::MalformedTlv, "log record is not canonically encoded");
  }
  return r;
}

LogVerifyResult
verifyLogRecords(const std::vector<LogRecord>& records, const crypto::PublicKey& issuerKey)
{
  LogVerifyResult result;
  size_t structuralEnd = records.size();
  Digest expectedPrev{};
  for (size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    const char* problem = nullptr;
    if (r.sequence != i) {
      problem = "sequence number out of order";
    }
    else if (r.prevHash != expectedPrev) {
      problem = "previous-hash link does not match";
    }
    else if (r.computeHash() != r.recordHash) {
      problem = "record hash does not match contents";
    }
    if (problem) {
      result = {false, i, problem};
      structuralEnd = i;
      break;
    }
    expectedPrev = r.recordHash;
  }
  for (size_t i = 0; i < structuralEnd; ++i) {
    if (!crypto::verify(records[i].signedPortion(), records[i].signature, issuerKey)) {
      return {false, i, "issuer signature does not verify"};
    }
  }
  return result;
}

LogVerifyResult
verifyLogText(std::string_view text, const crypto::PublicKey& issuerKey)
{
  std::vector<LogRecord> records;
  std::optional<LogVerifyResult> decodeFailure;
  size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      decodeFailure = LogVerifyResult{false, records.size(), "last line is not terminated"};
      break;
    }
    try {
      records.push_back(LogRecord::wireDecode(base64Decode(text.substr(pos, end - pos))));
    }
    catch (const Error& e) {
      decodeFailure = LogVerifyResult{false, records.size(), "undecodable record: " + e.detail()};
      break;
    }
    pos = end + 1;
  }
  auto result = verifyLogRecords(records, issuerKey);
  if (!result.ok || !decodeFailure) {
    return result;
  }
  return *decodeFailure;
}

LogVerifyResult
verifyLogFile(const std::filesystem::path& path, const crypto::PublicKey& issuerKey)
{
  return verifyLogText(readTextFile(path), issuerKey);
}

TransparencyLog::TransparencyLog(std::shared_ptr<const crypto::KeyPair> signer)
  : m_signer(std::move(signer))
{
}

TransparencyLog::TransparencyLog(std::shared_ptr<const crypto::KeyPair> signer, std::filesystem::path path)
  : m_signer(std::move(signer))
  , m_path(std::move(path))
{
  if (!std::filesystem::exists(*m_path)) {
    return;
  }
  auto text = readTextFile(*m_path);
  auto check = verifyLogText(text, m_signer->publicKey());
  if (!check.ok) {
    throw Error(ErrorCode::StorageFailure, m_path->string() + ": log broken at record " +
                std::to_string(check.brokenAt) + " (" + check.reason + ")");
  }
  size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    m_records.push_back(LogRecord::wireDecode(base64Decode(text.substr(pos, end - pos))));
    pos = end + 1;
  }
}

LogRecord
TransparencyLog::append(LogRecordType type, const Name& certName, const Digest& payloadDigest, TimePoint now)
{
  std::lock_guard lock(m_mutex);
  LogRecord r;
  r.sequence = m_records.size();
  r.type = type;
  r.certName = certName;
  r.payloadDigest = payloadDigest;
  if (!m_records.empty()) {
    r.prevHash = m_records.back().recordHash;
  }
  r.timestamp = std::max(toUnixMillis(now), m_records.empty() ? 0 : m_records.back().timestamp);
  r.recordHash = r.computeHash();
  r.signature = m_signer->sign(r.signedPortion());

  if (m_path) {
    auto line = base64Encode(r.wireEncode()) + "\n";
    int fd = ::open(m_path->c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
    if (fd < 0) {
      throw Error(ErrorCode::StorageFailure, "cannot open log " + m_path->string());
    }
    bool ok = ::write(fd, line.data(), line.size()) == static_cast<ssize_t>(line.size()) && ::fsync(fd) == 0;
    ok = (::close(fd) == 0) && ok;
    if (!ok) {
      throw Error(ErrorCode::StorageFailure, "cannot append to log " + m_path->string());
    }
  }
  m_records.push_back(r);
  return r;
}

std::vector<LogRecord>
TransparencyLog::query(const Name& prefix) const
{
  std::lock_guard lock(m_mutex);
  std::vector<LogRecord> out;
  for (const auto& r : m_records) {
    if (prefix.isPrefixOf(r.certName)) {
      out.push_back(r);
    }
  }
  return out;
}

std::vector<LogRecord>
TransparencyLog::records() const
{
  std::lock_guard lock(m_mutex);
  return m_records;
}

size_t
TransparencyLog::size() const
{
  std::lock_guard lock(m_mutex);
  return m_records.size();
}

LogVerifyResult
TransparencyLog::verify() const
{
  return verifyLogRecords(records(), m_signer->publicKey());
}

} // namespace ndncert
