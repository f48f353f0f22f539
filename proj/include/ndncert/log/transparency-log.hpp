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

#ifndef NDNCERT_LOG_TRANSPARENCY_LOG_HPP
#define NDNCERT_LOG_TRANSPARENCY_LOG_HPP

#include "ndncert/security/crypto.hpp"

#include <filesystem>
#include <mutex>

namespace ndncert {

enum class LogRecordType : uint64_t {
  Issuance = 0,
  Renewal = 1,
  Revocation = 2,
};

std::string_view
toString(LogRecordType type);

/**
 * @brief One hash-chained, issuer-signed log entry.
 *
 * recordHash = SHA-256 over the encoded sequence, type, certName, payloadDigest, prevHash
 * and timestamp TLVs; the signature covers the same TLVs followed by RecordHash.
 */
struct LogRecord
{
  uint64_t sequence = 0;
  LogRecordType type = LogRecordType::Issuance;
  Name certName;
  Digest payloadDigest{};
  Digest prevHash{};
  uint64_t timestamp = 0; ///< ms since epoch
  Digest recordHash{};
  Bytes signature;

  /// Encoded fields covered by recordHash.
  Bytes
  hashedPortion() const;

  Digest
  computeHash() const;

  Bytes
  signedPortion() const;

  Bytes
  wireEncode() const;

  /// @throw Error(MalformedTlv), Error(MalformedPayload)
  static LogRecord
  wireDecode(ByteView wire);

  bool
  operator==(const LogRecord&) const = default;
};

struct LogVerifyResult
{
  bool ok = true;
  /// Index of the first record that fails (decoding, hash, link, or signature).
  size_t brokenAt = 0;
  std::string reason;
};

/**
 * @brief Checks a sequence of records: sequence numbers, hashes, links, then signatures.
 *
 * Hashes and links are checked for the whole log first; signatures are only checked
 * below the first structural failure.
 */
LogVerifyResult
verifyLogRecords(const std::vector<LogRecord>& records, const crypto::PublicKey& issuerKey);

/// Verifies the text form (one base64 record per line); undecodable lines count as breaks.
LogVerifyResult
verifyLogText(std::string_view text, const crypto::PublicKey& issuerKey);

/// @throw Error(StorageFailure)
LogVerifyResult
verifyLogFile(const std::filesystem::path& path, const crypto::PublicKey& issuerKey);

/**
 * @brief Append-only log owned by a single writer (the issuer).
 *
 * With a file path every append is written and fsync'ed before append() returns.
 */
class TransparencyLog
{
public:
  /// In-memory log.
  explicit
  TransparencyLog(std::shared_ptr<const crypto::KeyPair> signer);

  /**
   * @brief Opens or creates the file at @p path and loads existing records.
   * @throw Error(StorageFailure) if the file exists but is not a valid log for @p signer
   */
  TransparencyLog(std::shared_ptr<const crypto::KeyPair> signer, std::filesystem::path path);

  /// @throw Error(StorageFailure) when the record cannot be persisted
  LogRecord
  append(LogRecordType type, const Name& certName, const Digest& payloadDigest, TimePoint now);

  /// Records whose certificate name starts with @p prefix, in sequence order.
  std::vector<LogRecord>
  query(const Name& prefix) const;

  std::vector<LogRecord>
  records() const;

  size_t
  size() const;

  LogVerifyResult
  verify() const;

private:
  std::shared_ptr<const crypto::KeyPair> m_signer;
  std::optional<std::filesystem::path> m_path;
  mutable std::mutex m_mutex;
  std::vector<LogRecord> m_records;
};

} // namespace ndncert

#endif // NDNCERT_LOG_TRANSPARENCY_LOG_HPP
