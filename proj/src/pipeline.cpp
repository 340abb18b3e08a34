#include "smoothsum/pipeline.hpp"

#include <algorithm>
#include <cmath>

namespace smoothsum {

namespace {

bool fits_below(i64 value, double y) {
  return static_cast<double>(value) <= y + 1e-9;
}

}  // namespace

SmoothnessProfile smoothness_profile(i64 q, double y) {
  SmoothnessProfile out;
  out.q = q;
  out.y = y;
  out.factors_desc = factorize(q);
  std::sort(out.factors_desc.begin(), out.factors_desc.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.value > b.value; });
  int exceptional = 0;
  bool ok = true;
  for (const auto& pp : out.factors_desc) {
    if (fits_below(pp.value, y)) continue;
    if (pp.m == 1 && static_cast<double>(pp.p) > y &&
        static_cast<double>(pp.p) <= y * y + 1e-9) {
      ++exceptional;
      out.exceptional_prime = pp.p;
    } else {
      ok = false;
    }
  }
  out.in_N_y = ok && exceptional <= 1;
  if (!out.in_N_y) out.exceptional_prime.reset();
  return out;
}

Int exceptional_modulus(const RationalFunction& f, const RationalFunction& g,
                        double delta) {
  i64 k = static_cast<i64>(std::ceil(2.0 / delta));
  return delta_fgk(f, g, k);
}

ModulusSplit factor_modulus(i64 q, double delta, const RationalFunction& f,
                            const RationalFunction& g, const DirichletCharacter& chi) {
  double y = std::pow(static_cast<double>(q), delta);
  SmoothnessProfile prof = smoothness_profile(q, y);
  if (!prof.in_N_y) fail(Err::NotSmooth, "q is not in N(y)");
  Int M = exceptional_modulus(f, g, delta);
  if (gcd(Int(q), abs(M)) != 1) fail(Err::SharedFactorWithM, "gcd(q, M) > 1");

  ModulusSplit out;
  out.y = y;
  // Conductor-guided co-modulus only when g is a low-degree polynomial.
  bool use_conductor = g.is_polynomial() && rf_deg(g) <= 2.0 / delta + 1.0;
  out.qprime = use_conductor ? conductor_of_power_for_f(chi, f) : q;

  // Case I: a prime above y (necessarily to the first power) becomes Q.
  std::optional<i64> big_prime;
  for (const auto& pp : prof.factors_desc)
    if (!fits_below(pp.value, y) && out.qprime % pp.p == 0) big_prime = pp.p;
  if (!big_prime && prof.exceptional_prime)
    big_prime = prof.exceptional_prime;  // fallback: it cannot join any q_i

  std::vector<i64> remaining;
  if (big_prime) {
    out.case_tag = "I";
    out.Q = *big_prime;
  } else {
    // Unitary closure of q' inside q.
    std::vector<i64> closure;
    i64 closure_prod = 1;
    for (const auto& pp : prof.factors_desc) {
      if (out.qprime % pp.p == 0) {
        closure.push_back(pp.value);
        closure_prod *= pp.value;
      }
    }
    if (fits_below(closure_prod, y)) {
      out.case_tag = "II";
      out.Q = closure_prod;
    } else {
      out.case_tag = "III";
      out.Q = 1;
      for (i64 v : closure) {
        if (!fits_below(out.Q * v, y)) break;
        out.Q *= v;
      }
      if (!(static_cast<double>(out.Q) > std::sqrt(y) - 1e-9))
        fail(Err::HypothesisViolation, "case III co-modulus below sqrt(y)");
    }
  }

  for (const auto& pp : prof.factors_desc)
    if (out.Q % pp.p != 0) remaining.push_back(pp.value);

  // Greedy descending packing of the rest into groups <= y.
  i64 group = 1;
  for (i64 v : remaining) {
    if (group != 1 && !fits_below(group * v, y)) {
      out.qs.push_back(group);
      group = 1;
    }
    if (!fits_below(v, y))
      fail(Err::HypothesisViolation, "prime power above y outside the co-modulus");
    group *= v;
  }
  if (group != 1) out.qs.push_back(group);
  out.k = static_cast<int>(out.qs.size());

  // Structural invariants.
  i64 product = out.Q;
  for (i64 qi : out.qs) product *= qi;
  if (product != q) fail(Err::HypothesisViolation, "split does not multiply to q");
  for (size_t i = 0; i + 1 < out.qs.size(); ++i)
    if (!(static_cast<double>(out.qs[i]) > std::sqrt(y) - 1e-9))
      fail(Err::HypothesisViolation, "interior group at or below sqrt(y)");
  for (size_t i = 0; i < out.qs.size(); ++i)
    for (size_t j = i + 1; j < out.qs.size(); ++j)
      if (gcd_i64(out.qs[i], out.qs[j]) != 1)
        fail(Err::HypothesisViolation, "groups share a factor");

  int k_lo = static_cast<int>(std::ceil(1.0 / delta)) - 2;
  int k_hi = static_cast<int>(std::ceil(2.0 / delta));
  out.k_window_ok = out.k >= std::max(k_lo, 0) && out.k < k_hi;
  return out;
}

double eta_nominal(int k, const RationalFunction& f, const RationalFunction& g,
                   double eps) {
  double D = std::ldexp(1.0, k + 1) * (rf_deg(f) + rf_deg(g));
  if (D == 0) return 0;
  return eps / (std::ldexp(1.0, k + 3) * D);
}

CertifiedBound certified_incomplete_bound(const SumInstance& inst, double delta,
                                          double eps) {
  if (inst.I.N < 1) fail(Err::RangeError, "empty interval");
  ModulusSplit split = factor_modulus(inst.q, delta, inst.f, inst.g, inst.chi);

  CertifiedBound out;
  try {
    out = vdc_certified(inst, split.qs, split.Q);
  } catch (const Error& e) {
    if (e.code() != Err::RangeError) throw;
    out.value = 1.0;
    out.vacuous = true;
    out.trace.push_back({"vdc:value", "shift range below 5, trivial bound", 1.0});
  }

  out.trace.push_back({"split:case", split.case_tag,
                       static_cast<double>(split.case_tag.size())});
  out.trace.push_back({"split:k", "number of differencing moduli",
                       static_cast<double>(split.k)});
  out.trace.push_back({"split:Q", "co-modulus", static_cast<double>(split.Q)});
  out.trace.push_back({"split:k-window", "k in [ceil(1/d)-2, ceil(2/d))",
                       split.k_window_ok ? 1.0 : 0.0});
  out.trace.push_back({"meta:eta-nominal", "asymptotic exponent, not asserted",
                       eta_nominal(split.k, inst.f, inst.g, eps)});
  // Side conditions guarding only the asymptotic constants; reported so the
  // nominal eta can be interpreted.
  double logQ = std::log(std::max<double>(split.Q, 3));
  double Dat = std::ldexp(1.0, split.k + 1) * (rf_deg(inst.f) + rf_deg(inst.g));
  double qstar_floor = std::pow(logQ, 12.0 * std::max(Dat, 1.0));
  out.trace.push_back({"meta:k2k-vs-loglogQ",
                       "k 2^k <= log log Q side condition margin",
                       std::log(std::max(logQ, 1.001)) -
                           split.k * std::ldexp(1.0, split.k)});
  out.trace.push_back({"meta:Qstar-floor-ok", "Q* >= (log Q)^(12D)",
                       static_cast<double>(split.Q) >= qstar_floor ? 1.0 : 0.0});
  return out;
}

WeylReference weyl_reference(const RationalFunction& g, i64 q, const Interval& I,
                             double eps) {
  if (!g.is_polynomial()) fail(Err::DegreeTooSmall, "polynomial g required");
  int d = rf_deg(g);
  if (d < 2) fail(Err::DegreeTooSmall, "degree >= 2 required");
  double min_N = std::pow(static_cast<double>(q), 1.0 / d + eps);
  if (static_cast<double>(I.N) < min_N)
    fail(Err::RangeError, "interval shorter than q^(1/d+eps)");

  WeylReference out;
  out.sigma = 1.0 / (static_cast<double>(d) * (d - 1));
  i64 N0 = static_cast<i64>(std::pow(static_cast<double>(q), 1.0 / d + eps / 2.0));
  N0 = std::max<i64>(N0, 1);
  out.block_length = N0;

  // alpha_d = a_d / q reduced; a_d integer after clearing the constant
  // denominator of g.
  Int ad = g.num.back();
  Int den = Int(q) * g.den.back();
  Int gg = gcd(abs(ad), den);
  out.Qprime = static_cast<i64>(den / gg);

  double per_block =
      std::pow(static_cast<double>(N0), 1.0 + eps) *
      std::pow(1.0 / static_cast<double>(out.Qprime) + 1.0 / static_cast<double>(N0) +
                   static_cast<double>(out.Qprime) / std::pow(static_cast<double>(N0), d),
               out.sigma);
  i64 blocks = I.N / N0;
  double total = static_cast<double>(blocks) * per_block +
                 static_cast<double>(std::min(I.N % N0, N0));
  out.estimate_mean = total / static_cast<double>(I.N);

  // Observed value by brute force.
  Complex sum{0, 0};
  for (i64 n = I.M + 1; n <= I.M + I.N; ++n) {
    i64 dn = i_eval_mod(g.den, n, q);
    if (gcd_i64(dn, q) != 1) continue;
    i64 t = mul_mod(i_eval_mod(g.num, n, q), inv_mod(dn, q), q);
    sum += unit_root(t, q);
  }
  out.observed_mean = std::abs(sum) / static_cast<double>(I.N);
  return out;
}

DirichletCharacter primitive_inducing(const DirichletCharacter& chi) {
  i64 cond = chi.conductor();
  if (cond == 1) return DirichletCharacter::principal(1);
  std::vector<std::pair<i64, i64>> exps;
  for (const auto& pp : factorize(cond)) {
    // Find chi's factor at this prime and push its exponent down.
    for (const auto& fac : chi.factors()) {
      if (fac.pp.p != pp.p) continue;
      i64 shift = fac.pp.value / pp.value;  // p^{m-l}
      i64 root_small = primitive_root(pp);
      i64 d = discrete_log(fac.root, root_small, fac.pp);
      i64 v = mul_mod(fac.exponent, d, fac.pp.phi());
      exps.emplace_back(pp.value, (v / shift) % pp.phi());
    }
  }
  return DirichletCharacter::from_exponents(cond, exps);
}

CertifiedBound nonprincipal_char_sum_bound(const DirichletCharacter& chi,
                                           const Interval& I, double delta,
                                           double eps) {
  if (chi.is_principal()) fail(Err::PrincipalCharacter, "nonprincipal chi required");
  i64 Q = chi.conductor();
  DirichletCharacter psi = primitive_inducing(chi);
  i64 r = 1;
  for (const auto& fac : chi.factors())
    if (Q % fac.pp.p != 0) r *= fac.pp.p;

  RationalFunction fx = parse_ratfun("x");
  RationalFunction g0;  // zero

  double pv = std::sqrt(static_cast<double>(Q)) * std::log(static_cast<double>(Q));
  double total = 0;
  int used_pipeline = 0, used_pv = 0, used_trivial = 0;
  std::vector<i64> divs{1};
  for (const auto& pp : factorize(r)) {
    size_t sz = divs.size();
    for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pp.p);
  }
  for (i64 l : divs) {
    i64 m_lo = static_cast<i64>(std::floor(static_cast<double>(I.M) / l));
    i64 m_hi = static_cast<i64>(std::floor(static_cast<double>(I.M + I.N) / l));
    i64 count = m_hi - m_lo;
    if (count <= 0) continue;
    double inner = static_cast<double>(count);  // trivial
    int which = 0;
    if (Q > 2 && pv < inner) {
      inner = pv;
      which = 1;
    }
    if (count >= 1 && count <= Q) {
      try {
        SumInstance sub{fx, g0, psi, Q, Interval{m_lo, count}};
        CertifiedBound cb = certified_incomplete_bound(sub, delta, eps);
        double via = cb.value * static_cast<double>(count);
        if (via < inner) {
          inner = via;
          which = 2;
        }
      } catch (const Error&) {
      }
    }
    total += inner;
    if (which == 0) ++used_trivial;
    if (which == 1) ++used_pv;
    if (which == 2) ++used_pipeline;
  }

  CertifiedBound out;
  out.value = total / static_cast<double>(I.N);
  out.vacuous = out.value >= 1.0;
  out.trace.push_back({"mobius:divisors", "divisor unfolding over the induced part",
                       static_cast<double>(divs.size())});
  out.trace.push_back({"external:polya-vinogradov", "sqrt(Q) log Q pieces",
                       static_cast<double>(used_pv)});
  out.trace.push_back({"pipeline:pieces", "certified incomplete-bound pieces",
                       static_cast<double>(used_pipeline)});
  out.trace.push_back({"trivial:pieces", "interval-length pieces",
                       static_cast<double>(used_trivial)});
  out.trace.push_back({"bound:value", "normalized by N", out.value});
  return out;
}

LValuePartial l_value_partial(const DirichletCharacter& chi, double t,
                              const std::vector<i64>& cutoffs) {
  if (chi.is_principal()) fail(Err::PrincipalCharacter, "nonprincipal chi required");
  i64 q = chi.modulus();
  RationalFunction fx = parse_ratfun("x");
  RationalFunction g0;
  PeriodicFn a = make_char_exp_fn(fx, g0, chi, q);

  LValuePartial out;
  auto pps = factorize(q);
  std::sort(pps.begin(), pps.end(),
            [](const PrimePower& x, const PrimePower& y) { return x.value > y.value; });
  out.P1 = pps.empty() ? 1 : pps[0].value;
  out.P2 = pps.size() > 1 ? pps[1].value : 1;
  out.p1_is_prime = pps.empty() ? false : pps[0].m == 1;
  double logP1 = std::log(static_cast<double>(out.P1));
  double logP2 = out.P2 > 1 ? std::log(static_cast<double>(out.P2)) : 0.0;
  out.comparison = out.p1_is_prime ? std::max(0.5 * logP1, logP2) : logP1;

  i64 max_cut = 0;
  for (i64 c : cutoffs) max_cut = std::max(max_cut, c);
  Complex sum{0, 0};
  size_t idx = 0;
  std::vector<i64> sorted = cutoffs;
  std::sort(sorted.begin(), sorted.end());
  for (i64 n = 1; n <= max_cut; ++n) {
    Complex v = a.eval(n);
    if (v != Complex{0, 0}) {
      double mag = 1.0 / static_cast<double>(n);
      double angle = -t * std::log(static_cast<double>(n));
      sum += v * Complex{mag * std::cos(angle), mag * std::sin(angle)};
    }
    while (idx < sorted.size() && sorted[idx] == n) {
      out.partials.emplace_back(n, std::abs(sum));
      ++idx;
    }
  }
  return out;
}

}  // namespace smoothsum
