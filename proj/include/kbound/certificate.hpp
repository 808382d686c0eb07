#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kbound/classical_bounds.hpp"
#include "kbound/sign_certificate.hpp"

namespace kbound {

enum class Status { verified, counterexample, out_of_asserted_range };

std::string_view to_string(Status s);
Status parse_status(std::string_view s);

/// One exact check inside a certificate (identity, pointwise comparison, sweep).
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Outcome of evaluating a claim at every integer in [from, to].
struct RangeReport {
  std::string name;
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::int64_t checked = 0;
  std::int64_t failures = 0;
  std::optional<std::int64_t> first_failure;
  std::string first_failure_detail;
};

/// Machine-checkable verdict for one named claim.
///
/// Claims about all d beyond a threshold carry tail-bounded sign certificates;
/// sweeps over a requested d range are recorded in `ranges`. Sweeps below the
/// claim's threshold are observations only and never affect the status.
struct Certificate {
  std::string claim_id;
  Params params;
  Status status = Status::verified;
  std::optional<std::string> witness;
  std::vector<SignCertificate> sign_certificates;
  std::vector<Check> checks;
  std::vector<RangeReport> ranges;
  std::vector<RangeReport> below_threshold;
  std::string paper_anchor;
  /// Geometric inputs the arithmetic is conditional on.
  std::vector<std::string> hypotheses;
  std::vector<std::string> notes;

  void add_sign(SignCertificate cert) { sign_certificates.push_back(std::move(cert)); }
  void add_check(std::string name, bool passed, std::string detail = {});

  /// Sweeps pred over [from, to]. The part at or above `threshold` is asserted;
  /// the part below is only reported. pred returns a failure description or nullopt.
  void sweep(const std::string& name, std::int64_t from, std::int64_t to, std::int64_t threshold,
             unsigned jobs, const std::function<std::optional<std::string>(std::int64_t)>& pred);

  /// Sets status and witness from the collected evidence.
  void finalize();

 private:
  bool swept_ = false;
  bool swept_in_range_ = false;
};

}  // namespace kbound
