#include "kbound/certificate.hpp"

#include "kbound/errors.hpp"
#include "kbound/parallel.hpp"

namespace kbound {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::counterexample: return "counterexample";
    case Status::out_of_asserted_range: return "out-of-asserted-range";
  }
  return "?";
}

Status parse_status(std::string_view s) {
  if (s == "verified") return Status::verified;
  if (s == "counterexample") return Status::counterexample;
  if (s == "out-of-asserted-range") return Status::out_of_asserted_range;
  throw InvalidArgument("unknown status '" + std::string(s) + "'");
}

void Certificate::add_check(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

namespace {

RangeReport run_sweep(const std::string& name, std::int64_t from, std::int64_t to, unsigned jobs,
                      const std::function<std::optional<std::string>(std::int64_t)>& pred) {
  RangeReport rep{name, from, to, 0, 0, std::nullopt, {}};
  if (to < from) return rep;
  auto guarded = [&pred](std::int64_t d) -> std::optional<std::string> {
    try {
      return pred(d);
    } catch (const std::exception& e) {
      return std::string("error: ") + e.what();
    }
  };
  auto results = parallel_map(from, to, jobs, guarded);
  rep.checked = to - from + 1;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i]) continue;
    if (rep.failures++ == 0) {
      rep.first_failure = from + static_cast<std::int64_t>(i);
      rep.first_failure_detail = *results[i];
    }
  }
  return rep;
}

}  // namespace

void Certificate::sweep(const std::string& name, std::int64_t from, std::int64_t to,
                        std::int64_t threshold, unsigned jobs,
                        const std::function<std::optional<std::string>(std::int64_t)>& pred) {
  swept_ = true;
  if (from < threshold && from <= to) {
    below_threshold.push_back(run_sweep(name, from, std::min(to, threshold - 1), jobs, pred));
  }
  const std::int64_t lo = std::max(from, threshold);
  if (lo <= to) {
    swept_in_range_ = true;
    ranges.push_back(run_sweep(name, lo, to, jobs, pred));
  }
}

void Certificate::finalize() {
  witness.reset();
  for (const auto& sc : sign_certificates) {
    if (sc.holds()) continue;
    status = Status::counterexample;
    witness = (sc.label.empty() ? sc.polynomial.str(sc.variable) : sc.label) + ": fails at " +
              sc.variable + " = " + (sc.counterexample ? sc.counterexample->str() : "?");
    return;
  }
  for (const auto& c : checks) {
    if (c.passed) continue;
    status = Status::counterexample;
    witness = c.name + (c.detail.empty() ? "" : ": " + c.detail);
    return;
  }
  for (const auto& r : ranges) {
    if (r.failures == 0) continue;
    status = Status::counterexample;
    witness = r.name + ": fails at d = " + std::to_string(*r.first_failure) +
              (r.first_failure_detail.empty() ? "" : " (" + r.first_failure_detail + ")");
    return;
  }
  status = swept_ && !swept_in_range_ ? Status::out_of_asserted_range : Status::verified;
}

}  // namespace kbound
