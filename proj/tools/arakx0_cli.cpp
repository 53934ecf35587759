// arakx0: per-prime reports, verification suites and omega^2 scans for X_0(p^2).

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arakx0/arakx0.h"
#include "json.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

struct Failure {
  ax0_status status;
  std::string message;
};

void check(ax0_status st) {
  if (st != AX0_OK) throw Failure{st, ax0_last_error()};
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string frac(int64_t n, int64_t d) { return std::to_string(n) + "/" + std::to_string(d); }

struct Config {
  uint64_t prime = 0;
  uint64_t pmin = 11;
  uint64_t pmax = 199;
  std::string mode = "main_term";
  std::string suite = "all";
  int64_t bound = 0;
  double precision = 0.0;
  std::string format = "text";
  std::string out;
  bool minimal = false;
};

ax0_mode mode_of(const std::string& m) { return m == "constants" ? AX0_MODE_CONSTANTS : AX0_MODE_MAIN_TERM; }

ordered_json envelope(const std::string& command, ordered_json params, ordered_json results) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["params"] = std::move(params);
  j["results"] = std::move(results);
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// ---- info ----

std::string cmd_info(const Config& c) {
  ax0_curve_info ci;
  check(ax0_curve_info_get(c.prime, &ci));
  const std::string cval = frac(ci.c_num, ci.c_den);
  if (c.format == "json") {
    ordered_json r;
    r["p"] = ci.p;
    r["level"] = ci.level;
    r["genus"] = ci.genus;
    r["cusps"] = ci.cusp_count;
    r["volume"] = ci.volume;
    r["index"] = ci.index;
    r["c"] = cval;
    r["s_p"] = frac(ci.s_p, 1);
    return dump(envelope("info", {{"prime", c.prime}}, r));
  }
  std::ostringstream os;
  if (c.format == "csv") {
    os << "p,level,genus,cusps,volume,index,c,s_p\n"
       << ci.p << ',' << ci.level << ',' << ci.genus << ',' << ci.cusp_count << ',' << num(ci.volume) << ','
       << ci.index << ',' << cval << ',' << ci.s_p << '\n';
    return os.str();
  }
  os << "X_0(" << ci.level << ")\n"
     << "genus   " << ci.genus << "\n"
     << "cusps   " << ci.cusp_count << "\n"
     << "volume  " << num(ci.volume) << "\n"
     << "index   " << ci.index << "\n"
     << "c       " << (ci.c_den == 1 ? std::to_string(ci.c_num) : cval) << "\n"
     << "s_p     " << ci.s_p << "\n";
  return os.str();
}

// ---- fiber ----

struct FiberHandle {
  ax0_fiber* f = nullptr;
  ~FiberHandle() { ax0_fiber_destroy(f); }
};

std::string short_rat(const char* r) {
  std::string s = r;
  if (s.size() > 2 && s.compare(s.size() - 2, 2, "/1") == 0) s.resize(s.size() - 2);
  return s;
}

std::string cmd_fiber(const Config& c) {
  FiberHandle base, mini;
  check(ax0_fiber_create(c.prime, 0, &base.f));
  if (c.minimal) check(ax0_fiber_create(c.prime, 1, &mini.f));
  const ax0_fiber* f = base.f;
  const size_t n = ax0_fiber_size(f);

  if (c.format == "json") {
    auto model_json = [](const ax0_fiber* m) {
      ordered_json j;
      const size_t k = ax0_fiber_size(m);
      ordered_json comps = ordered_json::array();
      for (size_t i = 0; i < k; ++i)
        comps.push_back({{"name", ax0_fiber_name(m, i)},
                         {"multiplicity", ax0_fiber_multiplicity(m, i)},
                         {"arith_genus", ax0_fiber_arith_genus(m, i)},
                         {"canonical_degree", ax0_fiber_canonical_degree(m, i)}});
      ordered_json mat = ordered_json::array();
      for (size_t i = 0; i < k; ++i) {
        ordered_json row = ordered_json::array();
        for (size_t jj = 0; jj < k; ++jj) row.push_back(ax0_fiber_intersection(m, i, jj));
        mat.push_back(row);
      }
      j["components"] = comps;
      j["intersections"] = mat;
      j["adjunction_sum"] = ax0_fiber_adjunction_sum(m);
      j["two_g_minus_two"] = ax0_fiber_expected_adjunction(m);
      j["valid"] = ax0_fiber_valid(m) != 0;
      return j;
    };
    ordered_json r;
    r["p"] = c.prime;
    r["fiber"] = model_json(f);
    if (c.minimal) {
      ordered_json m = model_json(mini.f);
      ordered_json log = ordered_json::array();
      for (size_t k = 0; k < ax0_fiber_contracted_count(mini.f); ++k) log.push_back(ax0_fiber_contracted(mini.f, k));
      m["contracted"] = log;
      ordered_json pb;
      for (size_t i = 0; i < ax0_fiber_size(mini.f); ++i) {
        ordered_json coeffs;
        for (size_t jj = 0; jj < ax0_fiber_basis_size(mini.f); ++jj)
          coeffs[ax0_fiber_basis_name(mini.f, jj)] = ax0_fiber_pullback(mini.f, i, jj);
        pb[ax0_fiber_name(mini.f, i)] = coeffs;
      }
      m["pullbacks"] = pb;
      r["minimal"] = m;
    }
    return dump(envelope("fiber", {{"prime", c.prime}, {"minimal", c.minimal}}, r));
  }

  std::ostringstream os;
  if (c.format == "csv") {
    const ax0_fiber* m = c.minimal ? mini.f : f;
    const size_t k = ax0_fiber_size(m);
    os << "component";
    for (size_t j = 0; j < k; ++j) os << ',' << ax0_fiber_name(m, j);
    os << '\n';
    for (size_t i = 0; i < k; ++i) {
      os << ax0_fiber_name(m, i);
      for (size_t j = 0; j < k; ++j) os << ',' << ax0_fiber_intersection(m, i, j);
      os << '\n';
    }
    return os.str();
  }

  os << "special fiber of X_0(" << c.prime << "^2) at " << c.prime << "\n\n";
  os << "component  mult  p_a  K.C\n";
  for (size_t i = 0; i < n; ++i) {
    char line[96];
    std::snprintf(line, sizeof line, "%-9s  %4" PRId64 "  %3" PRId64 "  %s\n", ax0_fiber_name(f, i),
                  ax0_fiber_multiplicity(f, i), ax0_fiber_arith_genus(f, i),
                  short_rat(ax0_fiber_canonical_degree(f, i)).c_str());
    os << line;
  }
  auto table = [&os](const ax0_fiber* m) {
    const size_t k = ax0_fiber_size(m);
    char cell[32];
    std::snprintf(cell, sizeof cell, "%-9s", "");
    os << cell;
    for (size_t j = 0; j < k; ++j) {
      std::snprintf(cell, sizeof cell, " %8s", ax0_fiber_name(m, j));
      os << cell;
    }
    os << '\n';
    for (size_t i = 0; i < k; ++i) {
      std::snprintf(cell, sizeof cell, "%-9s", ax0_fiber_name(m, i));
      os << cell;
      for (size_t j = 0; j < k; ++j) {
        std::snprintf(cell, sizeof cell, " %8s", short_rat(ax0_fiber_intersection(m, i, j)).c_str());
        os << cell;
      }
      os << '\n';
    }
  };
  os << "\nintersections\n";
  table(f);
  os << "\nsum m (K.C) = " << short_rat(ax0_fiber_adjunction_sum(f)) << ", 2g-2 = " << ax0_fiber_expected_adjunction(f)
     << (ax0_fiber_valid(f) ? "  (ok)" : "  (FAILED)") << "\n";

  if (c.minimal) {
    const ax0_fiber* m = mini.f;
    os << "\ncontractions";
    for (size_t k = 0; k < ax0_fiber_contracted_count(m); ++k) os << (k ? ", " : " ") << ax0_fiber_contracted(m, k);
    os << "\n\npullbacks\n";
    for (size_t i = 0; i < ax0_fiber_size(m); ++i) {
      os << "pi^* " << ax0_fiber_name(m, i) << " =";
      bool first = true;
      for (size_t j = 0; j < ax0_fiber_basis_size(m); ++j) {
        std::string coeff = short_rat(ax0_fiber_pullback(m, i, j));
        if (coeff == "0") continue;
        os << (first ? " " : " + ") << coeff << " " << ax0_fiber_basis_name(m, j);
        first = false;
      }
      os << '\n';
    }
    os << "\nminimal model\n";
    table(m);
  }
  return os.str();
}

// ---- verify ----

struct ReportHandle {
  ax0_report* r = nullptr;
  ~ReportHandle() { ax0_report_destroy(r); }
};

std::string cmd_verify(const Config& c, bool& all_passed) {
  ReportHandle h;
  check(ax0_verify(c.suite.c_str(), c.prime, c.bound, c.precision, &h.r));
  const ax0_report* r = h.r;
  const size_t n = ax0_report_count(r);
  all_passed = ax0_report_failures(r) == 0;

  if (c.format == "json") {
    ordered_json checks = ordered_json::array();
    for (size_t i = 0; i < n; ++i)
      checks.push_back({{"name", ax0_report_name(r, i)},
                        {"passed", ax0_report_passed(r, i) != 0},
                        {"residual", ax0_report_residual(r, i)},
                        {"tolerance", ax0_report_tolerance(r, i)},
                        {"detail", ax0_report_detail(r, i)}});
    ordered_json skipped = ordered_json::array();
    for (size_t i = 0; i < ax0_report_skipped_count(r); ++i) skipped.push_back(ax0_report_skipped(r, i));
    ordered_json params = {{"prime", c.prime}, {"suite", c.suite}};
    if (c.bound > 0) params["bound"] = c.bound;
    if (c.precision > 0) params["precision"] = c.precision;
    ordered_json res = {{"checks", checks},
                        {"failures", ax0_report_failures(r)},
                        {"skipped", skipped},
                        {"passed", all_passed}};
    return dump(envelope("verify", params, res));
  }

  std::ostringstream os;
  if (c.format == "csv") {
    os << "name,passed,residual,tolerance\n";
    for (size_t i = 0; i < n; ++i)
      os << ax0_report_name(r, i) << ',' << ax0_report_passed(r, i) << ',' << num(ax0_report_residual(r, i)) << ','
         << num(ax0_report_tolerance(r, i)) << '\n';
    return os.str();
  }
  for (size_t i = 0; i < n; ++i) {
    char line[160];
    std::snprintf(line, sizeof line, "%s  %-34s residual %.3e  tol %.1e", ax0_report_passed(r, i) ? "PASS" : "FAIL",
                  ax0_report_name(r, i), ax0_report_residual(r, i), ax0_report_tolerance(r, i));
    os << line;
    std::string detail = ax0_report_detail(r, i);
    if (!detail.empty()) os << "  (" << detail << ")";
    os << '\n';
  }
  for (size_t i = 0; i < ax0_report_skipped_count(r); ++i)
    os << "SKIP  " << ax0_report_skipped(r, i) << " (not applicable at p = " << c.prime << ")\n";
  os << n - ax0_report_failures(r) << "/" << n << " checks passed\n";
  return os.str();
}

// ---- omega / scan ----

ordered_json omega_json(const ax0_omega& o) {
  return {{"p", o.p},
          {"g", o.g},
          {"s_p", frac(o.s_p, 1)},
          {"algebraic_coeff", frac(o.algebraic_num, o.algebraic_den)},
          {"algebraic", o.algebraic},
          {"analytic", o.analytic},
          {"total", o.total},
          {"target", o.target},
          {"ratio", o.ratio},
          {"e_p", o.e_p_vanishes ? "0" : "O(log p)"}};
}

const char* kCsvHeader = "p,g,algebraic,analytic,total,target,ratio\n";

std::string csv_row(const ax0_omega& o) {
  return std::to_string(o.p) + "," + std::to_string(o.g) + "," + num(o.algebraic) + "," + num(o.analytic) + "," +
         num(o.total) + "," + num(o.target) + "," + num(o.ratio) + "\n";
}

std::string cmd_omega(const Config& c) {
  ax0_omega o;
  check(ax0_omega_sq(c.prime, mode_of(c.mode), &o));
  int dm_ok = 0;
  check(ax0_dm_orthogonal(c.prime, &dm_ok));
  if (c.format == "json") {
    ordered_json r = omega_json(o);
    r["dm_orthogonal"] = dm_ok != 0;
    return dump(envelope("omega", {{"prime", c.prime}, {"mode", c.mode}}, r));
  }
  if (c.format == "csv") return kCsvHeader + csv_row(o);
  std::ostringstream os;
  os << "omega^2 on X_0(" << c.prime << "^2), mode " << c.mode << "\n"
     << "g            " << o.g << "\n"
     << "algebraic    " << num(o.algebraic) << "  = (" << frac(o.algebraic_num, o.algebraic_den) << ") log p\n"
     << "analytic     " << num(o.analytic) << "\n"
     << "total        " << num(o.total) << "\n"
     << "3g log(p^2)  " << num(o.target) << "\n"
     << "ratio        " << num(o.ratio) << "\n"
     << "E_p          " << (o.e_p_vanishes ? "0" : "O(log p)") << "\n"
     << "<D_m,C'> = 0 " << (dm_ok ? "yes" : "no") << "\n";
  return os.str();
}

struct ScanHandle {
  ax0_scan* s = nullptr;
  ~ScanHandle() { ax0_scan_destroy(s); }
};

std::string cmd_scan(const Config& c) {
  ScanHandle h;
  check(ax0_scan_create(c.pmin, c.pmax, mode_of(c.mode), &h.s));
  const size_t n = ax0_scan_count(h.s);
  std::vector<ax0_omega> rows(n);
  for (size_t i = 0; i < n; ++i) check(ax0_scan_row(h.s, i, &rows[i]));

  if (c.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& o : rows) arr.push_back(omega_json(o));
    ordered_json res = {{"rows", arr},
                        {"max_residual", ax0_scan_max_residual(h.s)},
                        {"max_residual_p", ax0_scan_max_residual_prime(h.s)},
                        {"monotone", ax0_scan_monotone(h.s) != 0}};
    return dump(envelope("scan", {{"pmin", c.pmin}, {"pmax", c.pmax}, {"mode", c.mode}}, res));
  }
  std::string out = kCsvHeader;
  if (c.format == "csv") {
    for (const auto& o : rows) out += csv_row(o);
    return out;
  }
  std::ostringstream os;
  os << "     p        g        total       target    ratio\n";
  for (const auto& o : rows) {
    char line[96];
    std::snprintf(line, sizeof line, "%6" PRIu64 " %8" PRId64 " %12.4f %12.4f %8.5f\n", o.p, o.g, o.total, o.target,
                  o.ratio);
    os << line;
  }
  os << "max |ratio-1| = " << num(ax0_scan_max_residual(h.s)) << " at p = " << ax0_scan_max_residual_prime(h.s) << "\n";
  return os.str();
}

void emit(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Failure{AX0_ERR_INVALID_ARGUMENT, "cannot open " + c.out + " for writing"};
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arakx0: Arakelov self-intersection data for X_0(p^2)"};
  app.set_version_flag("--version", std::string(ax0_version()));
  app.require_subcommand(1);
  Config c;

  auto add_output = [&c](CLI::App* sub) {
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", c.out, "write to PATH instead of stdout");
  };
  auto add_mode = [&c](CLI::App* sub) {
    sub->add_option("--mode", c.mode, "Green's function estimate")->check(CLI::IsMember({"main_term", "constants"}));
  };

  auto* info = app.add_subcommand("info", "level data of X_0(p^2)");
  info->add_option("--prime", c.prime)->required();
  add_output(info);

  auto* fib = app.add_subcommand("fiber", "special fiber intersection calculus (p >= 7)");
  fib->add_option("--prime", c.prime)->required();
  fib->add_flag("--minimal", c.minimal, "contract to the minimal model");
  add_output(fib);

  auto* ver = app.add_subcommand("verify", "run invariant suites");
  ver->add_option("--prime", c.prime)->required();
  ver->add_option("--suite", c.suite)->check(CLI::IsMember({"eisenstein", "fiber", "quadforms", "all"}));
  ver->add_option("--bound", c.bound, "lattice box for the Eisenstein identity (default 300)");
  ver->add_option("--precision", c.precision, "tolerance for the Eisenstein identity (default 1e-6)");
  add_output(ver);

  auto* om = app.add_subcommand("omega", "omega^2 assembly at one prime (p >= 11)");
  om->add_option("--prime", c.prime)->required();
  add_mode(om);
  add_output(om);

  auto* sc = app.add_subcommand("scan", "omega^2 over a range of primes");
  sc->add_option("--pmin", c.pmin);
  sc->add_option("--pmax", c.pmax);
  add_mode(sc);
  add_output(sc);

  CLI11_PARSE(app, argc, argv);

  try {
    bool passed = true;
    std::string text;
    if (*info)
      text = cmd_info(c);
    else if (*fib)
      text = cmd_fiber(c);
    else if (*ver)
      text = cmd_verify(c, passed);
    else if (*om)
      text = cmd_omega(c);
    else
      text = cmd_scan(c);
    emit(c, text);
    return passed ? 0 : 1;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return 2;
  }
}
