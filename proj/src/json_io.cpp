#include "kbound/json_io.hpp"

#include <iomanip>
#include <limits>
#include <ostream>

namespace kbound {

Json rat_json(const Rat& r) { return r.str(); }

Json big_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  return Rat::parse(j.get<std::string>());
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  return BigInt(j.get<std::string>());
}

namespace {

Json params_json(const Params& p) {
  Json out = Json::object();
  for (const auto& [k, v] : p) out[k] = v;
  return out;
}

Params params_from_json(const Json& j) {
  Params out;
  for (auto it = j.begin(); it != j.end(); ++it) out.emplace_back(it.key(), it.value().get<std::int64_t>());
  return out;
}

Json range_json(const RangeReport& r) {
  Json j;
  j["name"] = r.name;
  j["from"] = r.from;
  j["to"] = r.to;
  j["checked"] = r.checked;
  j["failures"] = r.failures;
  j["first_failure"] = r.first_failure ? Json(*r.first_failure) : Json(nullptr);
  j["first_failure_detail"] = r.first_failure_detail;
  return j;
}

RangeReport range_from_json(const Json& j) {
  RangeReport r;
  r.name = j.at("name").get<std::string>();
  r.from = j.at("from").get<std::int64_t>();
  r.to = j.at("to").get<std::int64_t>();
  r.checked = j.at("checked").get<std::int64_t>();
  r.failures = j.at("failures").get<std::int64_t>();
  if (!j.at("first_failure").is_null()) r.first_failure = j.at("first_failure").get<std::int64_t>();
  r.first_failure_detail = j.at("first_failure_detail").get<std::string>();
  return r;
}

std::vector<std::string> strings_from_json(const Json& j) { return j.get<std::vector<std::string>>(); }

std::string bound_text(const Rat& r, bool floor_values) {
  return floor_values ? r.floor().str() : r.str();
}

std::string params_text(const Params& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ' ';
    out += k + "=" + std::to_string(v);
  }
  return out;
}

}  // namespace

Json to_json(const GenusBoundResult& r) {
  Json j;
  j["formula_id"] = r.formula_id;
  j["bound"] = rat_json(r.bound);
  j["integral"] = r.integral();
  j["parameters"] = params_json(r.parameters);
  j["validity"] = r.validity;
  j["within_validity"] = r.within_validity;
  return j;
}

Json to_json(const HilbertProfile& p) {
  Json j;
  j["label"] = p.label;
  j["d"] = p.d;
  j["values"] = p.values;
  j["stabilization_index"] = p.stabilization_index();
  return j;
}

Json to_json(const SignCertificate& c) {
  Json j;
  j["label"] = c.label;
  j["variable"] = c.variable;
  j["polynomial"] = c.polynomial.str(c.variable);
  Json coeffs = Json::array();
  for (const auto& k : c.polynomial.coefficients()) coeffs.push_back(rat_json(k));
  j["coefficients"] = coeffs;
  j["from"] = big_json(c.from);
  j["asserted_sign"] = std::string(to_string(c.asserted_sign));
  j["tail_bound"] = big_json(c.tail_bound);
  j["scanned_range"] = Json::array({big_json(c.from), big_json(c.scan_to)});
  j["tail_ok"] = c.tail_ok;
  j["counterexample"] = c.counterexample ? big_json(*c.counterexample) : Json(nullptr);
  return j;
}

SignCertificate sign_certificate_from_json(const Json& j) {
  SignCertificate c;
  c.label = j.at("label").get<std::string>();
  c.variable = j.at("variable").get<std::string>();
  std::vector<Rat> coeffs;
  for (const auto& k : j.at("coefficients")) coeffs.push_back(rat_from_json(k));
  c.polynomial = Poly(std::move(coeffs));
  c.from = big_from_json(j.at("from"));
  c.asserted_sign = parse_sign(j.at("asserted_sign").get<std::string>());
  c.tail_bound = big_from_json(j.at("tail_bound"));
  c.scan_to = big_from_json(j.at("scanned_range").at(1));
  c.tail_ok = j.at("tail_ok").get<bool>();
  if (!j.at("counterexample").is_null()) c.counterexample = big_from_json(j.at("counterexample"));
  return c;
}

Json to_json(const Certificate& c) {
  Json j;
  j["claim_id"] = c.claim_id;
  j["params"] = params_json(c.params);
  j["status"] = std::string(to_string(c.status));
  j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
  Json signs = Json::array();
  for (const auto& s : c.sign_certificates) signs.push_back(to_json(s));
  j["sign_certificates"] = signs;
  Json checks = Json::array();
  for (const auto& k : c.checks) checks.push_back({{"name", k.name}, {"passed", k.passed}, {"detail", k.detail}});
  j["checks"] = checks;
  Json ranges = Json::array();
  for (const auto& r : c.ranges) ranges.push_back(range_json(r));
  j["ranges"] = ranges;
  Json below = Json::array();
  for (const auto& r : c.below_threshold) below.push_back(range_json(r));
  j["below_threshold"] = below;
  j["paper_anchor"] = c.paper_anchor;
  j["hypotheses"] = c.hypotheses;
  j["notes"] = c.notes;
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.claim_id = j.at("claim_id").get<std::string>();
  c.params = params_from_json(j.at("params"));
  c.status = parse_status(j.at("status").get<std::string>());
  if (!j.at("witness").is_null()) c.witness = j.at("witness").get<std::string>();
  for (const auto& s : j.at("sign_certificates")) c.sign_certificates.push_back(sign_certificate_from_json(s));
  for (const auto& k : j.at("checks")) {
    c.checks.push_back({k.at("name").get<std::string>(), k.at("passed").get<bool>(),
                        k.at("detail").get<std::string>()});
  }
  for (const auto& r : j.at("ranges")) c.ranges.push_back(range_from_json(r));
  for (const auto& r : j.at("below_threshold")) c.below_threshold.push_back(range_from_json(r));
  c.paper_anchor = j.at("paper_anchor").get<std::string>();
  c.hypotheses = strings_from_json(j.at("hypotheses"));
  c.notes = strings_from_json(j.at("notes"));
  return c;
}

Json to_json(const ScanRecord& r) {
  Json j;
  j["d"] = r.d;
  j["a"] = r.a;
  j["alpha"] = r.cls.alpha;
  j["beta"] = r.cls.beta;
  j["degree"] = r.degree;
  j["k2"] = big_json(r.k2);
  j["genus"] = big_json(r.genus);
  j["admissible"] = r.admissible;
  j["extremal"] = r.extremal;
  return j;
}

Json to_json(const MinimizeResult& r) {
  Json j;
  j["d"] = r.d;
  j["a_min"] = r.a_min;
  j["k2_min"] = big_json(r.k2_min);
  j["unique"] = r.unique;
  j["closed_form"] = rat_json(r.closed_form);
  j["closed_form_floor"] = big_json(r.closed_form.floor());
  j["bound"] = big_json(-BigInt(r.d) * (r.d - 6));
  j["in_theorem_range"] = r.in_theorem_range;
  return j;
}

Json to_json(const ExtremalSurface& e) {
  Json j;
  j["d"] = degree(e.cls);
  j["alpha"] = e.cls.alpha;
  j["beta"] = e.cls.beta;
  j["k2"] = big_json(e.k2);
  j["genus"] = big_json(e.genus);
  return j;
}

Json to_json(const CaseVerdict& v, const std::string& generated_at) {
  Json j;
  j["schema"] = kReportSchema;
  if (!generated_at.empty()) j["generated_at"] = generated_at;
  j["d_range"] = Json::array({v.d_from, v.d_to});
  j["overall"] = v.overall;
  Json certs = Json::array();
  for (const auto& c : v.certificates) certs.push_back(to_json(c));
  j["certificates"] = certs;
  return j;
}

CaseVerdict verdict_from_json(const Json& j) {
  CaseVerdict v;
  v.d_from = j.at("d_range").at(0).get<std::int64_t>();
  v.d_to = j.at("d_range").at(1).get<std::int64_t>();
  v.overall = j.at("overall").get<bool>();
  for (const auto& c : j.at("certificates")) v.certificates.push_back(certificate_from_json(c));
  return v;
}

void write_bounds_csv(std::ostream& os, const std::vector<GenusBoundResult>& rows, bool floor_values) {
  os << "schema_version,formula_id,d,bound,integral,parameters\n";
  for (const auto& r : rows) {
    os << kCsvSchemaVersion << ',' << r.formula_id << ',' << r.param("d") << ','
       << bound_text(r.bound, floor_values) << ',' << (r.integral() ? "true" : "false") << ','
       << params_text(r.parameters) << '\n';
  }
}

void write_scan_csv(std::ostream& os, const std::vector<ScanRecord>& rows) {
  os << "schema_version,d,a,alpha,beta,degree,k2,genus,admissible,extremal\n";
  for (const auto& r : rows) {
    os << kCsvSchemaVersion << ',' << r.d << ',' << r.a << ',' << r.cls.alpha << ',' << r.cls.beta
       << ',' << r.degree << ',' << r.k2 << ',' << r.genus << ',' << (r.admissible ? "true" : "false")
       << ',' << (r.extremal ? "true" : "false") << '\n';
  }
}

void write_certificates_csv(std::ostream& os, const CaseVerdict& v) {
  os << "schema_version,claim_id,params,status,sign_certificates,checks,witness\n";
  for (const auto& c : v.certificates) {
    std::string witness = c.witness.value_or("");
    for (char& ch : witness) {
      if (ch == ',' || ch == '\n') ch = ';';
    }
    os << kCsvSchemaVersion << ',' << c.claim_id << ',' << params_text(c.params) << ','
       << to_string(c.status) << ',' << c.sign_certificates.size() << ',' << c.checks.size() << ','
       << witness << '\n';
  }
}

void write_bounds_table(std::ostream& os, const std::vector<GenusBoundResult>& rows, bool floor_values) {
  os << std::left << std::setw(12) << "formula" << std::setw(8) << "d" << std::setw(16) << "bound"
     << "parameters\n";
  for (const auto& r : rows) {
    os << std::left << std::setw(12) << r.formula_id << std::setw(8) << r.param("d") << std::setw(16)
       << bound_text(r.bound, floor_values) << params_text(r.parameters);
    if (!r.within_validity) os << "  [below validity: " << r.validity << "]";
    os << '\n';
  }
}

void write_scan_table(std::ostream& os, const std::vector<ScanRecord>& rows) {
  os << std::right << std::setw(6) << "d" << std::setw(6) << "a" << std::setw(8) << "alpha"
     << std::setw(8) << "beta" << std::setw(8) << "deg" << std::setw(12) << "K^2" << std::setw(10)
     << "genus" << "  flags\n";
  for (const auto& r : rows) {
    os << std::right << std::setw(6) << r.d << std::setw(6) << r.a << std::setw(8) << r.cls.alpha
       << std::setw(8) << r.cls.beta << std::setw(8) << r.degree << std::setw(12) << r.k2.str()
       << std::setw(10) << r.genus.str() << "  " << (r.admissible ? "admissible" : "inadmissible")
       << (r.extremal ? " extremal" : "") << '\n';
  }
}

void write_verdict_table(std::ostream& os, const CaseVerdict& v) {
  os << "degree range [" << v.d_from << ", " << v.d_to << "]\n";
  for (const auto& c : v.certificates) {
    os << std::left << std::setw(26) << c.claim_id << std::setw(24) << to_string(c.status)
       << params_text(c.params);
    if (c.witness) os << "  witness: " << *c.witness;
    if (!c.below_threshold.empty()) os << "  (below-threshold degrees reported)";
    os << '\n';
  }
  os << "overall: " << (v.overall ? "verified" : "FAILED") << '\n';
}

}  // namespace kbound
