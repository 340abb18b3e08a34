// smoothsum: exact evaluation of character-exponential sums and certified
// explicit upper bounds on them, with a built-in verification suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>

#include "smoothsum/congruence.hpp"
#include "smoothsum/verify.hpp"

#ifndef SMOOTHSUM_BUILD_ID
#define SMOOTHSUM_BUILD_ID "unknown"
#endif

using json = nlohmann::ordered_json;
using namespace smoothsum;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

json report_header() {
  json j;
  j["schema"] = 1;
  j["build"] = SMOOTHSUM_BUILD_ID;
  return j;
}

double parse_fraction(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return std::stod(s);
  return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
}

// Character spec: "q=1125;e=(3^2:4),(5^3:7)" or "q=1125;random-primitive;seed=7"
// or "q=1125;principal".
DirichletCharacter parse_chi(const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.empty() || parts[0].rfind("q=", 0) != 0)
    fail(Err::SyntaxError, "character spec must start with q=<modulus>");
  i64 q = std::stoll(parts[0].substr(2));
  u64 seed = 1;
  std::string mode;
  std::string exps;
  for (size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].rfind("seed=", 0) == 0) {
      seed = std::stoull(parts[i].substr(5));
    } else if (parts[i].rfind("e=", 0) == 0) {
      mode = "explicit";
      exps = parts[i].substr(2);
    } else {
      mode = parts[i];
    }
  }
  if (mode == "random-primitive") {
    Rng rng(seed);
    return DirichletCharacter::random_primitive(q, rng);
  }
  if (mode == "random") {
    Rng rng(seed);
    return DirichletCharacter::random_any(q, rng);
  }
  if (mode == "principal" || mode.empty()) return DirichletCharacter::principal(q);
  if (mode != "explicit") fail(Err::SyntaxError, "unknown character mode: " + mode);
  // e=(p^m:exp),(p^m:exp)...
  std::vector<std::pair<i64, i64>> pairs;
  size_t pos = 0;
  while (pos < exps.size()) {
    if (exps[pos] != '(') fail(Err::SyntaxError, "expected '(' in exponent list");
    size_t close = exps.find(')', pos);
    if (close == std::string::npos) fail(Err::SyntaxError, "unbalanced exponent list");
    std::string item = exps.substr(pos + 1, close - pos - 1);
    auto colon = item.find(':');
    if (colon == std::string::npos) fail(Err::SyntaxError, "expected p^m:e");
    std::string ppart = item.substr(0, colon);
    i64 e = std::stoll(item.substr(colon + 1));
    auto caret = ppart.find('^');
    i64 p = std::stoll(caret == std::string::npos ? ppart : ppart.substr(0, caret));
    int m = caret == std::string::npos ? 1 : std::stoi(ppart.substr(caret + 1));
    i64 value = 1;
    for (int i = 0; i < m; ++i) value *= p;
    pairs.emplace_back(value, e);
    pos = close + 1;
    if (pos < exps.size() && exps[pos] == ',') ++pos;
  }
  return DirichletCharacter::from_exponents(q, pairs);
}

void emit(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(path);
    out << j.dump(2) << "\n";
  }
}

struct ScanRow {
  i64 q = 0;
  double y = 0;
  std::string case_tag;
  int k = 0;
  i64 Q = 0;
  i64 N = 0;
  double abs_mean = 0;
  double certified = 1;
  bool vacuous = true;
  double eta = 0;
};

int cmd_scan(i64 qmax, double delta, int trials, u64 seed, int workers,
             const std::string& csv_path) {
  // Family: odd q in N(q^delta) coprime to the excluded modulus for f = x
  // and g in {0, bx} (three distinct primes at this scale).
  RationalFunction fx = parse_ratfun("x");
  Int M = exceptional_modulus(fx, RationalFunction{}, delta);
  std::vector<i64> family;
  std::vector<i64> small = primes_below(1000);
  std::vector<i64> all = primes_below(100000);
  for (size_t i = 0; i < small.size(); ++i) {
    if (gcd(Int(small[i]), 2 * M) != 1) continue;
    for (size_t j = i + 1; j < small.size(); ++j) {
      if (gcd(Int(small[j]), M) != 1) continue;
      i64 base = small[i] * small[j];
      if (base > qmax / small[j]) break;
      for (i64 p3 : all) {
        if (p3 <= small[j]) continue;
        if (base > qmax / p3) break;
        i64 q = base * p3;
        if (gcd(Int(p3), M) != 1) continue;
        double y = std::pow(static_cast<double>(q), delta);
        if (smoothness_profile(q, y).in_N_y) family.push_back(q);
      }
    }
  }
  std::sort(family.begin(), family.end());
  if (family.empty()) {
    std::cerr << "scan: no moduli in the family below qmax\n";
    return kExitUsage;
  }

  std::vector<ScanRow> rows(static_cast<size_t>(trials));
  std::atomic<size_t> next{0};
  std::atomic<bool> violated{false};
  auto work = [&]() {
    while (true) {
      size_t idx = next.fetch_add(1);
      if (idx >= rows.size()) return;
      Rng rng = Rng::fork(seed, idx);
      i64 q = family[rng.below(family.size())];
      auto chi = DirichletCharacter::random_primitive(q, rng);
      RationalFunction g;
      if (rng.range(0, 1)) g = make_ratfun({Rat(0), Rat(rng.range(1, 25))}, {Rat(1)});
      i64 N = rng.range(0, 1) ? q : static_cast<i64>(std::pow(static_cast<double>(q), 0.9));
      SumInstance inst{fx, g, chi, q, {rng.range(-2000, 2000), N}};
      ScanRow row;
      row.q = q;
      row.y = std::pow(static_cast<double>(q), delta);
      row.N = N;
      try {
        CertifiedBound cb = certified_incomplete_bound(inst, delta, 0.1);
        for (const auto& t : cb.trace) {
          if (t.id == "split:case") row.case_tag = t.detail;
          if (t.id == "split:k") row.k = static_cast<int>(t.value);
          if (t.id == "split:Q") row.Q = static_cast<i64>(t.value);
          if (t.id == "meta:eta-nominal") row.eta = t.value;
        }
        row.certified = cb.value;
        row.vacuous = cb.vacuous;
        row.abs_mean = std::abs(brute_interval_mean(inst));
        if (row.abs_mean > row.certified + 1e-9) violated = true;
      } catch (const Error& e) {
        row.case_tag = std::string("error:") + err_name(e.code());
      }
      rows[idx] = row;
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < std::max(workers, 1); ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  std::ostringstream csv;
  csv << "q,y,case,k,Q,N,abs_mean,certified,vacuous,eta_nominal\n";
  for (const auto& r : rows) {
    char line[256];
    std::snprintf(line, sizeof(line), "%lld,%.6f,%s,%d,%lld,%lld,%.12g,%.12g,%d,%.12g\n",
                  static_cast<long long>(r.q), r.y, r.case_tag.c_str(), r.k,
                  static_cast<long long>(r.Q), static_cast<long long>(r.N), r.abs_mean,
                  r.certified, r.vacuous ? 1 : 0, r.eta);
    csv << line;
  }
  if (csv_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(csv_path);
    out << csv.str();
  }
  return violated ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"character-exponential sums: exact evaluation and certified bounds"};
  app.require_subcommand(1);

  std::string f_expr = "x", g_expr = "0", h_expr, chi_spec;
  std::vector<i64> interval;
  double tol_identity = 1e-9, tol_sum = 1e-6;
  i64 limit_q = kModulusLimit;
  std::string json_path, csv_path;
  app.add_option("--tolerance-identity", tol_identity);
  app.add_option("--tolerance-sum", tol_sum);
  app.add_option("--limit-q", limit_q);

  auto* c_eval = app.add_subcommand("eval", "evaluate a sum by brute force");
  c_eval->add_option("--f", f_expr);
  c_eval->add_option("--g", g_expr);
  c_eval->add_option("--chi", chi_spec)->required();
  c_eval->add_option("--interval", interval)->expected(2);
  c_eval->add_option("--json", json_path);

  auto* c_roots = app.add_subcommand("roots", "count roots mod p^m");
  i64 root_p = 3;
  int root_m = 1;
  std::string method = "both";
  c_roots->add_option("--h", h_expr)->required();
  c_roots->add_option("--p", root_p)->required();
  c_roots->add_option("--m", root_m)->required();
  c_roots->add_option("--method", method)->check(CLI::IsMember({"brute", "lift", "both"}));
  c_roots->add_option("--json", json_path);

  auto* c_post = app.add_subcommand("postnikov", "prime-power expansion tools");
  bool check_identity = false, want_bound = false;
  c_post->add_option("--chi", chi_spec)->required();
  c_post->add_flag("--check-identity", check_identity);
  c_post->add_flag("--bound", want_bound);
  c_post->add_option("--f", f_expr);
  c_post->add_option("--g", g_expr);
  c_post->add_option("--json", json_path);

  auto* c_vdc = app.add_subcommand("vdc", "differencing bound for a given split");
  std::string q_split;
  c_vdc->add_option("--q-split", q_split)->required();
  c_vdc->add_option("--f", f_expr);
  c_vdc->add_option("--g", g_expr);
  c_vdc->add_option("--chi", chi_spec)->required();
  c_vdc->add_option("--interval", interval)->expected(2);
  c_vdc->add_option("--json", json_path);

  auto* c_bound = app.add_subcommand("bound", "end-to-end certified bound");
  i64 bound_q = 0;
  std::string delta_str = "1/3";
  double eps = 0.1;
  c_bound->add_option("--q", bound_q)->required();
  c_bound->add_option("--delta", delta_str);
  c_bound->add_option("--epsilon", eps);
  c_bound->add_option("--f", f_expr);
  c_bound->add_option("--g", g_expr);
  c_bound->add_option("--chi", chi_spec)->required();
  c_bound->add_option("--interval", interval)->expected(2);
  c_bound->add_option("--json", json_path);

  auto* c_scan = app.add_subcommand("scan", "scan a modulus family, CSV output");
  std::string family = "smooth";
  double qmax_d = 1e6;
  int trials = 50;
  u64 seed = 42;
  int workers = 1;
  c_scan->add_option("--family", family)->check(CLI::IsMember({"smooth"}));
  c_scan->add_option("--qmax", qmax_d);
  c_scan->add_option("--delta", delta_str);
  c_scan->add_option("--trials", trials);
  c_scan->add_option("--seed", seed);
  c_scan->add_option("--workers", workers);
  c_scan->add_option("--csv", csv_path);

  auto* c_lval = app.add_subcommand("lvalues", "partial character L-sums");
  double t_param = 0.0;
  std::vector<i64> cutoffs{100, 1000, 10000};
  c_lval->add_option("--chi", chi_spec)->required();
  c_lval->add_option("--t", t_param);
  c_lval->add_option("--cutoffs", cutoffs);
  c_lval->add_option("--json", json_path);

  auto* c_verify = app.add_subcommand("verify", "run the verification suite");
  std::string which = "all";
  c_verify->add_option("target", which, "all or a criterion number");
  c_verify->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_eval->parsed()) {
      auto chi = parse_chi(chi_spec);
      SumInstance inst{parse_ratfun(f_expr), parse_ratfun(g_expr), chi, chi.modulus(), {}};
      if (inst.q > limit_q) fail(Err::Overflow, "q above --limit-q");
      i64 n_terms;
      Complex s;
      if (interval.empty()) {
        s = brute_complete_sum(inst);
        n_terms = inst.q;
      } else {
        inst.I = {interval[0], interval[1]};
        s = brute_interval_mean(inst) * static_cast<double>(inst.I.N);
        n_terms = inst.I.N;
      }
      json j = report_header();
      j["sum_re"] = s.real();
      j["sum_im"] = s.imag();
      j["abs"] = std::abs(s);
      j["n_terms"] = n_terms;
      emit(j, json_path);
      return kExitOk;
    }

    if (c_roots->parsed()) {
      RationalFunction h = parse_ratfun(h_expr);
      json j = report_header();
      j["p"] = root_p;
      j["m"] = root_m;
      bool agree = true;
      i64 count = 0, bound = 0;
      if (method == "brute" || method == "both") {
        auto rc = h.is_polynomial() ? count_roots_bruteforce(h.num, root_p, root_m)
                                    : count_roots_with_denominator(h, root_p, root_m);
        count = rc.count;
        bound = rc.bound;
      }
      if (method == "lift" || method == "both") {
        auto rc = h.is_polynomial() ? count_roots_lifting(h.num, root_p, root_m)
                                    : count_roots_with_denominator(h, root_p, root_m);
        if (method == "both") agree = count == rc.count;
        count = rc.count;
        bound = rc.bound;
      }
      j["count"] = count;
      j["bound"] = bound;
      j["method"] = method;
      j["agree"] = agree;
      emit(j, json_path);
      return agree ? kExitOk : kExitViolation;
    }

    if (c_post->parsed()) {
      auto chi = parse_chi(chi_spec);
      json j = report_header();
      if (check_identity) {
        const auto& fac = chi.factors().at(0);
        i64 failures = 0, checks = 0;
        for (int l = 1; l < fac.pp.m; ++l) {
          i64 pml = fac.pp.value;
          for (int i = 0; i < l; ++i) pml /= fac.pp.p;
          for (i64 r = 0; r < pml; ++r) {
            ++checks;
            if (!log_expansion_check(chi, r, l, tol_identity)) ++failures;
          }
        }
        j["C"] = postnikov_C(chi);
        j["checks"] = checks;
        j["failures"] = failures;
        j["ok"] = failures == 0;
        emit(j, json_path);
        return failures == 0 ? kExitOk : kExitViolation;
      }
      RationalFunction f = parse_ratfun(f_expr), g = parse_ratfun(g_expr);
      auto th = tau_H(f, g, chi);
      auto b = bound_prime_power(f, g, chi);
      double brute = std::abs(brute_complete_sum({f, g, chi, chi.modulus(),
                                                  {0, chi.modulus()}})) /
                     static_cast<double>(chi.modulus());
      j["C"] = th.C;
      j["tau"] = th.tau;
      j["D"] = th.D;
      j["bound"] = b.bound;
      j["vacuous"] = b.vacuous;
      j["brute"] = brute;
      j["ok"] = brute <= b.bound + tol_sum;
      emit(j, json_path);
      return brute <= b.bound + tol_sum ? kExitOk : kExitViolation;
    }

    if (c_vdc->parsed()) {
      auto chi = parse_chi(chi_spec);
      std::vector<i64> parts;
      std::string cur;
      for (char ch : q_split + ",") {
        if (ch == ',') {
          if (!cur.empty()) parts.push_back(std::stoll(cur));
          cur.clear();
        } else {
          cur += ch;
        }
      }
      if (parts.empty()) fail(Err::SyntaxError, "empty --q-split");
      i64 Q = parts.back();
      parts.pop_back();
      SumInstance inst{parse_ratfun(f_expr), parse_ratfun(g_expr), chi, chi.modulus(), {}};
      inst.I = interval.empty() ? Interval{0, inst.q} : Interval{interval[0], interval[1]};
      auto cb = vdc_certified(inst, parts, Q);
      double mean = std::abs(brute_interval_mean(inst));
      json j = report_header();
      j["mean_abs"] = mean;
      j["certified"] = cb.value;
      j["vacuous"] = cb.vacuous;
      json tr = json::array();
      for (const auto& t : cb.trace)
        tr.push_back({{"id", t.id}, {"detail", t.detail}, {"value", t.value}});
      j["trace"] = tr;
      emit(j, json_path);
      return mean <= cb.value + tol_sum ? kExitOk : kExitViolation;
    }

    if (c_bound->parsed()) {
      auto chi = parse_chi(chi_spec);
      if (chi.modulus() != bound_q) fail(Err::RangeError, "--q and character modulus differ");
      double delta = parse_fraction(delta_str);
      SumInstance inst{parse_ratfun(f_expr), parse_ratfun(g_expr), chi, bound_q, {}};
      inst.I = interval.empty() ? Interval{0, bound_q} : Interval{interval[0], interval[1]};
      auto cb = certified_incomplete_bound(inst, delta, eps);
      double mean = std::abs(brute_interval_mean(inst));
      json j = report_header();
      j["q"] = bound_q;
      j["delta"] = delta;
      j["epsilon"] = eps;
      j["abs_mean"] = mean;
      j["certified"] = cb.value;
      j["vacuous"] = cb.vacuous;
      json tr = json::array();
      for (const auto& t : cb.trace)
        tr.push_back({{"id", t.id}, {"detail", t.detail}, {"value", t.value}});
      j["trace"] = tr;
      emit(j, json_path);
      return mean <= cb.value + tol_sum ? kExitOk : kExitViolation;
    }

    if (c_scan->parsed()) {
      return cmd_scan(static_cast<i64>(qmax_d), parse_fraction(delta_str), trials, seed,
                      workers, csv_path);
    }

    if (c_lval->parsed()) {
      auto chi = parse_chi(chi_spec);
      auto rep = l_value_partial(chi, t_param, cutoffs);
      json j = report_header();
      j["P1"] = rep.P1;
      j["P2"] = rep.P2;
      j["p1_is_prime"] = rep.p1_is_prime;
      j["comparison"] = rep.comparison;
      json rows = json::array();
      for (const auto& [x, v] : rep.partials) rows.push_back({{"X", x}, {"abs", v}});
      j["partials"] = rows;
      emit(j, json_path);
      return kExitOk;
    }

    if (c_verify->parsed()) {
      std::vector<int> ids;
      if (which == "all") {
        for (int i = 1; i <= verify::kCriterionCount; ++i) ids.push_back(i);
      } else {
        ids.push_back(std::stoi(which));
      }
      bool all_pass = true;
      for (int id : ids) {
        auto r = verify::run_criterion(id, seed);
        std::printf("[%s] criterion %2d: %s — %s [%.1fs]\n", r.pass ? "PASS" : "FAIL",
                    r.id, r.name.c_str(), r.detail.c_str(), r.seconds);
        std::fflush(stdout);
        if (!r.pass) {
          all_pass = false;
          // Retry at other seeds to surface a smaller failing instance.
          for (u64 s2 = 1; s2 <= 2; ++s2) {
            auto r2 = verify::run_criterion(id, seed + s2);
            if (!r2.pass)
              std::printf("       retry (seed %llu): %s\n",
                          static_cast<unsigned long long>(seed + s2), r2.detail.c_str());
          }
        }
      }
      return all_pass ? kExitOk : kExitViolation;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Err::SyntaxError:
      case Err::RangeError:
      case Err::Overflow:
        return kExitUsage;
      default:
        return kExitViolation;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
