#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "kbound/json_io.hpp"

namespace kbound::cli {

namespace {

struct RunConfig {
  std::string format = "table";
  std::string out_path;
  unsigned jobs = 0;
  bool floor = false;
  bool no_timestamp = false;

  std::string bound_kind;
  std::int64_t r = 0, s = 0, d = 0, d_from = 0, d_to = 0;
  std::int64_t alpha = 0, beta = 0;
  std::string scroll_mode;
  std::string verify_case;
};

unsigned resolve_jobs(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("KBOUND_JOBS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw InvalidArgument("KBOUND_JOBS must be a positive integer");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Inclusive d values requested through --d or --from/--to.
std::vector<std::int64_t> degrees(const RunConfig& cfg) {
  if (cfg.d != 0) return {cfg.d};
  if (cfg.d_from == 0 || cfg.d_to == 0) throw InvalidArgument("give --d or both --from and --to");
  if (cfg.d_to < cfg.d_from) throw InvalidArgument("empty range: --to < --from");
  std::vector<std::int64_t> out;
  for (std::int64_t d = cfg.d_from; d <= cfg.d_to; ++d) out.push_back(d);
  return out;
}

GenusBoundResult compute_bound(const RunConfig& cfg, std::int64_t d) {
  if (cfg.bound_kind == "castelnuovo") return castelnuovo_bound(cfg.r, d);
  if (cfg.bound_kind == "halphen") return halphen_bound(d, cfg.s);
  if (cfg.bound_kind == "pi1") return pi1_bound(d);
  return pi2_bound(d);
}

std::optional<HilbertProfile> profile_for(const RunConfig& cfg, std::int64_t d) {
  if (cfg.bound_kind == "castelnuovo") return castelnuovo_profile(cfg.r, d);
  if (cfg.bound_kind == "pi1") return pi1_profile(d);
  if (cfg.bound_kind == "pi2") return pi2_profile(d);
  return std::nullopt;
}

void render_bound(const RunConfig& cfg, std::ostream& os) {
  std::vector<GenusBoundResult> rows;
  for (std::int64_t d : degrees(cfg)) rows.push_back(compute_bound(cfg, d));
  if (cfg.format == "csv") {
    write_bounds_csv(os, rows, cfg.floor);
  } else if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json j = to_json(r);
      if (cfg.floor) j["bound_floor"] = big_json(r.bound.floor());
      if (rows.size() == 1) {
        if (auto p = profile_for(cfg, r.param("d"))) j["profile"] = to_json(*p);
      }
      arr.push_back(j);
    }
    os << (rows.size() == 1 ? arr[0] : arr).dump(2) << '\n';
  } else {
    write_bounds_table(os, rows, cfg.floor);
    if (rows.size() == 1) {
      if (auto p = profile_for(cfg, rows[0].param("d"))) {
        os << "profile h(1.." << p->values.size() << "):";
        for (auto v : p->values) os << ' ' << v;
        os << "  then " << p->d << '\n';
      }
    }
  }
}

void render_scroll(const RunConfig& cfg, std::ostream& os) {
  if (cfg.scroll_mode == "extremal") {
    const ExtremalSurface e = extremal_class(cfg.d);
    if (cfg.format == "json") {
      os << to_json(e).dump(2) << '\n';
    } else if (cfg.format == "csv") {
      write_scan_csv(os, {describe_class(e.cls)});
    } else {
      os << "alpha=" << e.cls.alpha << " beta=" << e.cls.beta << " k2=" << e.k2 << " g=" << e.genus
         << '\n';
    }
    return;
  }
  if (cfg.scroll_mode == "minimize") {
    const MinimizeResult r = minimize_k2(cfg.d);
    if (cfg.format == "json") {
      os << to_json(r).dump(2) << '\n';
    } else {
      os << "d=" << r.d << " a_min=" << r.a_min << " k2_min=" << r.k2_min
         << " unique=" << (r.unique ? "true" : "false") << " closed_form="
         << (cfg.floor ? r.closed_form.floor().str() : r.closed_form.str())
         << " bound=" << -BigInt(r.d) * (r.d - 6) << '\n';
    }
    return;
  }
  std::vector<ScanRecord> rows;
  if (cfg.scroll_mode == "class") {
    rows.push_back(describe_class({cfg.alpha, cfg.beta}));
  } else {
    for (std::int64_t d : degrees(cfg)) {
      for (auto& r : scan_scroll(d)) rows.push_back(std::move(r));
    }
  }
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    os << (cfg.scroll_mode == "class" ? arr[0] : arr).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    write_scan_csv(os, rows);
  } else {
    write_scan_table(os, rows);
    if (cfg.scroll_mode == "class" && !rows[0].admissible) {
      const auto& c = rows[0].cls;
      os << "inadmissible:";
      if (c.alpha <= 0) os << " alpha <= 0;";
      if (c.alpha + c.beta < 0) os << " alpha + beta < 0;";
      if (3 * c.alpha + c.beta < 4) os << " degree " << 3 * c.alpha + c.beta << " < 4;";
      os << '\n';
    }
  }
}

CaseVerdict run_verify(const RunConfig& cfg) {
  if (cfg.d_to < cfg.d_from) throw InvalidArgument("empty range: --to < --from");
  const VerifyOptions opts{resolve_jobs(cfg.jobs)};
  const std::string& k = cfg.verify_case;
  if (k == "all") return verify_theorem(cfg.d_from, cfg.d_to, opts);
  std::vector<Certificate> certs;
  if (k == "r4") {
    certs = verify_r4(cfg.d_from, cfg.d_to, opts);
  } else if (k == "r5") {
    certs = verify_r5_exclusion(cfg.d_from, cfg.d_to, opts);
    certs.push_back(verify_r5_remark(std::max<std::int64_t>(10000, cfg.d_to)));
  } else if (k == "r6") {
    if (cfg.r != 0) {
      certs.push_back(verify_r_ge6_spanned(cfg.r));
      if (cfg.r >= 6) certs.push_back(verify_r_ge6_scroll(cfg.r));
    } else {
      for (std::int64_t r = 5; r <= 9; ++r) certs.push_back(verify_r_ge6_spanned(r));
      certs.push_back(verify_r_ge6_scroll(6));
      certs.push_back(verify_r_ge6_scroll(7));
    }
  } else if (k == "appendix") {
    certs.push_back(verify_appendix(cfg.d_from, cfg.d_to, opts));
  } else {
    certs.push_back(verify_sharpness(cfg.d_from, cfg.d_to, opts));
  }
  return make_verdict(cfg.d_from, cfg.d_to, std::move(certs));
}

int render_verify(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
  const CaseVerdict v = run_verify(cfg);
  if (cfg.format == "json") {
    os << to_json(v, cfg.no_timestamp ? std::string() : utc_now()).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    write_certificates_csv(os, v);
  } else {
    write_verdict_table(os, v);
  }
  bool below = false;
  for (const auto& c : v.certificates) {
    if (c.status == Status::out_of_asserted_range || !c.below_threshold.empty()) below = true;
  }
  if (below) {
    err << "warning: part of the requested range lies below the asserted degree thresholds; "
           "those degrees are reported, not asserted\n";
  }
  return v.overall ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact genus and K^2 bounds for surfaces, with machine-checked certificates", "kbound"};
  app.fallthrough();
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
  app.add_option("--jobs", cfg.jobs, "Worker threads for degree sweeps (fallback: KBOUND_JOBS)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--floor", cfg.floor, "Print integer floors of rational bounds");
  app.add_flag("--no-timestamp", cfg.no_timestamp, "Omit generated_at from JSON reports");

  auto* bound = app.add_subcommand("bound", "Classical genus bounds");
  bound->add_option("kind", cfg.bound_kind, "castelnuovo | halphen | pi1 | pi2")
      ->required()
      ->check(CLI::IsMember({"castelnuovo", "halphen", "pi1", "pi2"}));
  bound->add_option("--r", cfg.r, "Ambient dimension (castelnuovo)");
  bound->add_option("--s", cfg.s, "Surface degree bound (halphen)");
  bound->add_option("--d", cfg.d, "Curve degree");
  bound->add_option("--from", cfg.d_from, "First degree of a table");
  bound->add_option("--to", cfg.d_to, "Last degree of a table");

  auto* scroll = app.add_subcommand("scroll", "Surfaces on the rational normal 3-fold scroll");
  scroll->add_option("mode", cfg.scroll_mode, "scan | class | extremal | minimize")
      ->required()
      ->check(CLI::IsMember({"scan", "class", "extremal", "minimize"}));
  scroll->add_option("--d", cfg.d, "Surface degree");
  scroll->add_option("--from", cfg.d_from, "First degree (scan)");
  scroll->add_option("--to", cfg.d_to, "Last degree (scan)");
  scroll->add_option("--alpha", cfg.alpha, "Coefficient of H (class)");
  scroll->add_option("--beta", cfg.beta, "Coefficient of W (class)");

  auto* verify = app.add_subcommand("verify", "Produce certificates for the case analysis");
  verify->add_option("case", cfg.verify_case, "all | r4 | r5 | r6 | appendix | sharpness")
      ->required()
      ->check(CLI::IsMember({"all", "r4", "r5", "r6", "appendix", "sharpness"}));
  verify->add_option("--from", cfg.d_from, "First degree")->default_val(kTheoremMinDegree);
  verify->add_option("--to", cfg.d_to, "Last degree")->default_val(500);
  verify->add_option("--r", cfg.r, "Single ambient dimension (r6)")->check(CLI::Range(5, 1000));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg_out, msg_err;
    int code = app.exit(e, msg_out, msg_err);
    out << msg_out.str();
    err << msg_err.str();
    return code == 0 ? kOk : kUsageError;
  }
  if (scroll->parsed() && cfg.scroll_mode == "class" &&
      (scroll->count("--alpha") == 0 || scroll->count("--beta") == 0)) {
    err << "error: scroll class needs --alpha and --beta\n";
    return kUsageError;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (bound->parsed()) {
      render_bound(cfg, buffer);
    } else if (scroll->parsed()) {
      render_scroll(cfg, buffer);
    } else {
      code = render_verify(cfg, buffer, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (cfg.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << buffer.str()) || !file.flush()) {
      err << "error: cannot write " << cfg.out_path << '\n';
      return kIoError;
    }
  }
  return code;
}

}  // namespace kbound::cli
