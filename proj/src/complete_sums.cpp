#include "smoothsum/complete_sums.hpp"

#include <cmath>

#include "smoothsum/fpoly.hpp"

namespace smoothsum {

PeriodicFn PeriodicFn::from_components(i64 q, std::vector<Component> comps) {
  PeriodicFn fn;
  fn.q_ = q;
  i64 prod = 1;
  for (const auto& c : comps) {
    if (c.modulus < 1 || static_cast<i64>(c.table.size()) != c.modulus)
      fail(Err::RangeError, "component table size mismatch");
    prod *= c.modulus;
  }
  if (prod != q) fail(Err::NotCoprimeSplit, "components do not multiply to q");
  fn.components_ = std::move(comps);
  return fn;
}

PeriodicFn PeriodicFn::constant_one(i64 q) {
  PeriodicFn fn;
  fn.q_ = q;
  return fn;
}

PeriodicFn PeriodicFn::restrict_to(i64 d) const {
  if (d <= 0 || q_ % d != 0 || gcd_i64(d, q_ / d) != 1)
    fail(Err::NotCoprimeSplit, "restriction divisor is not unitary");
  PeriodicFn fn;
  fn.q_ = d;
  for (const auto& c : components_) {
    if (d % c.modulus == 0) {
      fn.components_.push_back(c);
    } else if (gcd_i64(c.modulus, d) != 1) {
      fail(Err::NotCoprimeSplit, "component straddles the split");
    }
  }
  return fn;
}

PeriodicFn make_char_exp_fn(const RationalFunction& f, const RationalFunction& g,
                            const DirichletCharacter& chi, i64 q) {
  if (chi.modulus() != q) fail(Err::RangeError, "character modulus mismatch");
  std::vector<PeriodicFn::Component> comps;
  for (const auto& fac : chi.factors()) {
    i64 pe = fac.pp.value;
    i64 p = fac.pp.p;
    i64 phi = fac.pp.phi();
    i64 cp = inv_mod(floor_mod(q / pe, pe), pe);  // CRT coefficient of 1/q at p^e
    auto dlog = dlog_table(fac.pp, fac.root);
    PeriodicFn::Component comp{pe, std::vector<Complex>(static_cast<size_t>(pe))};
    for (i64 n = 0; n < pe; ++n) {
      i64 fn_num = i_eval_mod(f.num, n, pe);
      i64 fn_den = i_eval_mod(f.den, n, pe);
      i64 gn_den = i_eval_mod(g.den, n, pe);
      if (fn_num % p == 0 || fn_den % p == 0 || gn_den % p == 0) {
        comp.table[static_cast<size_t>(n)] = {0.0, 0.0};
        continue;
      }
      i64 chi_exp = 0;
      if (fac.exponent != 0) {
        i64 d = dlog[static_cast<size_t>(fn_num)] - dlog[static_cast<size_t>(fn_den)];
        chi_exp = mul_mod(fac.exponent, floor_mod(d, phi), phi);
      }
      i64 gn = mul_mod(i_eval_mod(g.num, n, pe), inv_mod(gn_den, pe), pe);
      i64 e_exp = mul_mod(cp, gn, pe);
      // angle = chi_exp/phi + e_exp/p^e, kept exact over the lcm.
      i64 gphi = gcd_i64(phi, pe);
      i64 l = phi / gphi * pe;
      comp.table[static_cast<size_t>(n)] =
          unit_root(chi_exp * (l / phi) + e_exp * (l / pe), l);
    }
    comps.push_back(std::move(comp));
  }
  return PeriodicFn::from_components(q, std::move(comps));
}

PeriodicFn make_noise_fn(i64 q, Rng& rng) {
  std::vector<PeriodicFn::Component> comps;
  for (const auto& pp : factorize(q)) {
    PeriodicFn::Component comp{pp.value, std::vector<Complex>(static_cast<size_t>(pp.value))};
    for (auto& v : comp.table) {
      double angle = 2.0 * M_PI * rng.real01();
      v = {std::cos(angle), std::sin(angle)};
    }
    comps.push_back(std::move(comp));
  }
  return PeriodicFn::from_components(q, std::move(comps));
}

Complex interval_mean(const PeriodicFn& a, const Interval& I) {
  Complex sum{0.0, 0.0};
  for (i64 n = I.M + 1; n <= I.M + I.N; ++n) sum += a.eval(n);
  return sum / static_cast<double>(I.N);
}

Complex brute_complete_sum(const SumInstance& inst) {
  PeriodicFn a = make_char_exp_fn(inst.f, inst.g, inst.chi, inst.q);
  Complex prod{1.0, 0.0};
  for (const auto& comp : a.components()) {
    Complex s{0.0, 0.0};
    for (const auto& v : comp.table) s += v;
    prod *= s;
  }
  return prod;
}

Complex brute_complete_sum_direct(const SumInstance& inst) {
  PeriodicFn a = make_char_exp_fn(inst.f, inst.g, inst.chi, inst.q);
  Complex sum{0.0, 0.0};
  for (i64 n = 0; n < inst.q; ++n) sum += a.eval(n);
  return sum;
}

Complex brute_interval_mean(const SumInstance& inst) {
  PeriodicFn a = make_char_exp_fn(inst.f, inst.g, inst.chi, inst.q);
  return interval_mean(a, inst.I);
}

std::optional<i64> constant_value_mod_p(const RationalFunction& g, i64 p) {
  FpPoly num = fp_reduce(g.num, p);
  FpPoly den = fp_reduce(g.den, p);
  std::optional<i64> value;
  for (i64 n = 0; n < p; ++n) {
    i64 d = fp_eval(den, n, p);
    if (d == 0) continue;
    i64 v = mul_mod(fp_eval(num, n, p), inv_mod(d, p), p);
    if (!value) {
      value = v;
    } else if (*value != v) {
      return std::nullopt;
    }
  }
  return value ? value : std::optional<i64>(0);
}

bool rth_power_test_mod_p(const RationalFunction& f, i64 p, i64 r) {
  if (r % p == 0) fail(Err::RangeError, "r divisible by p");
  FpRatFun red = reduce_ratfun_mod_p(f, p);
  for (const FpPoly* part : {&red.num, &red.den}) {
    if (degree(*part) < 1) continue;
    for (const auto& sf : fp_squarefree_decomposition(*part, p))
      if (sf.multiplicity % r != 0) return false;
  }
  return true;
}

DegeneracyReport degeneracy_mod_p(const RationalFunction& f,
                                  const RationalFunction& g,
                                  const DirichletCharacter& chi_mod_p) {
  i64 p = chi_mod_p.modulus();
  if (!is_prime(p)) fail(Err::RangeError, "modulus must be prime");
  DegeneracyReport rep;
  rep.r = chi_mod_p.order();

  bool f_ok;
  try {
    f_ok = rth_power_test_mod_p(f, p, rep.r);
  } catch (const Error&) {
    return rep;  // no good reduction, not flagged
  }
  if (!f_ok) {
    rep.reason = "f is not a constant times an r_chi-th power mod p";
    return rep;
  }

  std::optional<i64> g_const;
  if (p > rf_deg(g)) {
    // In this regime the Artin-Schreier class collapses to constants.
    try {
      if (is_constant_mod_p(g, p)) g_const = constant_value_mod_p(g, p);
    } catch (const Error&) {
      return rep;
    }
  } else {
    g_const = constant_value_mod_p(g, p);
  }
  if (!g_const) {
    rep.reason = "g is not constant on its support mod p";
    return rep;
  }

  rep.is_degenerate = true;
  rep.c2 = *g_const;
  i64 dn = fp_reduce(f.num, p).empty() ? 0 : fp_reduce(f.num, p).back();
  i64 dd = fp_reduce(f.den, p).empty() ? 1 : fp_reduce(f.den, p).back();
  rep.c1 = dd == 0 ? dn : mul_mod(dn, inv_mod(dd, p), p);
  rep.reason = "summand constant on its support";

  // Verify: chi(f(n)) e(g(n)/p) takes one value on its support.
  PeriodicFn a = make_char_exp_fn(f, g, chi_mod_p, p);
  std::optional<Complex> common;
  bool verified = true;
  for (i64 n = 0; n < p; ++n) {
    Complex v = a.eval(n);
    if (std::abs(v) < 0.5) continue;
    if (!common) {
      common = v;
    } else if (std::abs(v - *common) > 1e-9) {
      verified = false;
      break;
    }
  }
  rep.verified = verified;
  return rep;
}

WeilCheck weil_bound_check(const RationalFunction& f, const RationalFunction& g,
                           const DirichletCharacter& chi_mod_p) {
  i64 p = chi_mod_p.modulus();
  if (!is_prime(p)) fail(Err::RangeError, "modulus must be prime");
  WeilCheck out;
  int df = deg_p(f, p);  // BadReduction propagates
  int dg = deg_p(g, p);
  SumInstance inst{f, g, chi_mod_p, p, Interval{0, p}};
  out.abs_sum = std::abs(brute_complete_sum(inst));
  out.bound = (2.0 * df + 2.0 * dg - 1.0) * std::sqrt(static_cast<double>(p));

  bool g_const = constant_value_mod_p(g, p).has_value();
  bool f_power = chi_mod_p.is_principal() ||
                 rth_power_test_mod_p(f, p, chi_mod_p.order());
  out.exception = g_const && f_power;
  out.ok = out.exception || out.abs_sum <= out.bound + 1e-6;
  return out;
}

}  // namespace smoothsum
