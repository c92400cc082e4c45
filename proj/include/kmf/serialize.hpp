#pragma once

#include "kmf/baranyai.hpp"
#include "kmf/chromatic.hpp"
#include "kmf/minor.hpp"
#include "kmf/verify.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>

namespace kmf {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

// Documents are JSON objects with sorted keys. Minor and coloring documents
// carry "digest", the hex SHA-256 of the compact dump of the document
// without that key.

Json to_json(const MinorCertificate& c);
Json to_json(const ColoringCertificate& c);
Json to_json(const AlmostRegularPartition& a);
Json to_json(const VerificationReport& r);

/// Parsers throw StructuralError on anything malformed, including k-sets
/// whose labels are not strictly increasing.
MinorCertificate minor_from_json(const Json& doc);
ColoringCertificate coloring_from_json(const Json& doc);
AlmostRegularPartition partition_from_json(const Json& doc);

/// "minor", "coloring" or "partition"; throws StructuralError otherwise.
std::string document_kind(const Json& doc);

/// SHA-256 (hex) of `doc` without its "digest" key.
std::string content_digest(const Json& doc);

/// Parses and verifies a document of any kind; for minor and coloring
/// documents a "digest" check is prepended (skipped when the key is absent).
VerificationReport verify_document(const Json& doc);

/// Pretty-printed (indent 2) text with a trailing newline.
std::string render(const Json& doc);

Json load_json(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const Json& doc);

} // namespace kmf
