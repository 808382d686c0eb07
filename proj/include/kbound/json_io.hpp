#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kbound/classical_bounds.hpp"
#include "kbound/scroll_surfaces.hpp"
#include "kbound/theorem_verifier.hpp"

namespace kbound {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "kbound.report/1";
inline constexpr int kCsvSchemaVersion = 1;

/// Rationals are always strings "num/den" (or "num"); integers are JSON numbers
/// when they fit in 64 bits and decimal strings otherwise.
Json rat_json(const Rat& r);
Json big_json(const BigInt& v);
Rat rat_from_json(const Json& j);
BigInt big_from_json(const Json& j);

Json to_json(const GenusBoundResult& r);
Json to_json(const HilbertProfile& p);
Json to_json(const SignCertificate& c);
Json to_json(const Certificate& c);
Json to_json(const ScanRecord& r);
Json to_json(const MinimizeResult& r);
Json to_json(const ExtremalSurface& e);
/// Aggregate report. generated_at is omitted when empty.
Json to_json(const CaseVerdict& v, const std::string& generated_at = {});

SignCertificate sign_certificate_from_json(const Json& j);
Certificate certificate_from_json(const Json& j);
CaseVerdict verdict_from_json(const Json& j);

// CSV tables. Every table starts with a fixed header whose first column is schema_version.
void write_bounds_csv(std::ostream& os, const std::vector<GenusBoundResult>& rows, bool floor_values);
void write_scan_csv(std::ostream& os, const std::vector<ScanRecord>& rows);
void write_certificates_csv(std::ostream& os, const CaseVerdict& v);

// Human-readable tables.
void write_bounds_table(std::ostream& os, const std::vector<GenusBoundResult>& rows, bool floor_values);
void write_scan_table(std::ostream& os, const std::vector<ScanRecord>& rows);
void write_verdict_table(std::ostream& os, const CaseVerdict& v);

}  // namespace kbound
