#include "smoothsum/postnikov.hpp"

#include <cmath>

#include "smoothsum/fpoly.hpp"

namespace smoothsum {

namespace {

i64 ipow(i64 b, int e) {
  i64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

i64 ceil_div(i64 a, i64 b) { return a >= 0 ? (a + b - 1) / b : 0; }

// Reduce a rational with p-free denominator mod p^m.
i64 rat_mod(const Rat& r, i64 pm, i64 p) {
  Int num = rat_num(r), den = rat_den(r);
  if (den % p == 0) fail(Err::UndefinedAt, "denominator not coprime to p");
  i64 n = floor_mod(static_cast<i64>(num % pm), pm);
  i64 d = floor_mod(static_cast<i64>(den % pm), pm);
  return mul_mod(n, inv_mod(d, pm), pm);
}

const DirichletCharacter::Factor& single_factor(const DirichletCharacter& chi) {
  if (chi.factors().size() != 1)
    fail(Err::RangeError, "prime-power character expected");
  return chi.factors()[0];
}

// e(g(n)/p^m) as an exact exponent; zero flag when g_-(n) = 0 mod p.
CharacterValue exp_value(const RationalFunction& g, i64 n, i64 pm, i64 p) {
  i64 dn = i_eval_mod(g.den, n, pm);
  if (dn % p == 0) return CharacterValue::zero_value();
  i64 t = mul_mod(i_eval_mod(g.num, n, pm), inv_mod(dn, pm), pm);
  return CharacterValue::root(t, pm);
}

}  // namespace

TruncationIndices truncation_indices(i64 p, int l, int m) {
  if (l < 1 || l > m - 1 || ipow(p, l) <= 2)
    fail(Err::RangeError, "need 1 <= l <= m-1 with p^l > 2");
  // v_p(p^{jl}/j) = j*l - v_p(j) >= m for all j > J; the left side exceeds m
  // once j*l - log_p(j) >= m, so scanning to m + 64 is exhaustive.
  int J = 1;
  for (i64 j = 2; j <= m + 64; ++j) {
    if (j * l - vp_int(Int(j), p) < m) J = static_cast<int>(j);
  }
  int I = 1;
  for (i64 i = 2; i <= 4 * static_cast<i64>(m) + 64; ++i) {
    if (i * l - vp_factorial(i, p) < m) I = static_cast<int>(i);
  }
  return {I, J};
}

PostnikovData postnikov_constant(const DirichletCharacter& chi, int l) {
  const auto& fac = single_factor(chi);
  i64 p = fac.pp.p;
  int m = fac.pp.m;
  if (m < 2) fail(Err::RangeError, "constant defined for m >= 2");
  if (!chi.is_primitive()) fail(Err::RangeError, "primitive character expected");
  auto [I, J] = truncation_indices(p, l, m);
  i64 pm = fac.pp.value;
  // Truncated e^{p^l} mod p^m.
  Rat sum = 1;
  Rat term = 1;
  Rat pl = Rat(ipow(p, l));
  for (int i = 1; i <= I; ++i) {
    term *= pl / i;
    sum += term;
  }
  i64 E = rat_mod(sum, pm, p);
  // chi(E) = e(e_chi * dlog(E) / phi) must be a primitive p^{m-l}-th root.
  i64 phi = fac.pp.phi();
  i64 t = mul_mod(fac.exponent, discrete_log(fac.root, E, fac.pp), phi);
  i64 pml = ipow(p, m - l);
  Int c_big = Int(t) * pml;
  if (c_big % phi != 0)
    fail(Err::RangeError, "character value is not a p^(m-l)-th root of unity");
  i64 C = static_cast<i64>(c_big / phi) % pml;
  if (C % p == 0) fail(Err::RangeError, "constant divisible by p for primitive chi");
  return {C, I, J};
}

i64 postnikov_C(const DirichletCharacter& chi) {
  const auto& fac = single_factor(chi);
  i64 p = fac.pp.p;
  int m = fac.pp.m;
  if (m < 2) fail(Err::RangeError, "constant defined for m >= 2");
  i64 pm1 = ipow(p, m - 1);
  if (chi.is_principal()) return pm1;
  i64 cond = chi.conductor();
  if (cond == fac.pp.value) {
    i64 C = postnikov_constant(chi, 1).C % pm1;
    return C == 0 ? pm1 : C;
  }
  // chi = psi^{p^{m-lc}} with psi primitive; C scales by the same power.
  int lc = 0;
  for (i64 c = cond; c > 1; c /= p) ++lc;
  i64 shift = ipow(p, m - lc);
  DirichletCharacter psi = DirichletCharacter::from_exponents(
      fac.pp.value, {{fac.pp.value, fac.exponent / shift}});
  i64 C_psi = postnikov_constant(psi, 1).C;
  i64 C = mul_mod(floor_mod(shift, pm1), floor_mod(C_psi, pm1), pm1);
  return C == 0 ? pm1 : C;
}

bool log_expansion_check(const DirichletCharacter& chi, i64 r, int l, double tol) {
  const auto& fac = single_factor(chi);
  i64 p = fac.pp.p;
  int m = fac.pp.m;
  i64 pm = fac.pp.value;
  if (!chi.is_primitive()) fail(Err::RangeError, "primitive character expected");
  i64 C = postnikov_C(chi);
  int J = truncation_indices(p, l, m).J;
  // L(1 + r p^l) = sum_{j<=J} (-r p^l)^j / j.
  Rat L = 0;
  Rat base = -Rat(r) * ipow(p, l);
  Rat pw = 1;
  for (int j = 1; j <= J; ++j) {
    pw *= base;
    L += pw / j;
  }
  i64 t = rat_mod(-Rat(C) * L, pm, p);
  Complex rhs = unit_root(t, pm);
  Complex lhs = chi.eval(1 + r * ipow(p, l)).to_complex();
  return std::abs(lhs - rhs) < tol;
}

TauH tau_H(const RationalFunction& f, const RationalFunction& g,
           const DirichletCharacter& chi) {
  const auto& fac = single_factor(chi);
  i64 p = fac.pp.p;
  int m = fac.pp.m;
  TauH out;
  if (f.is_constant() && g.is_constant()) {
    out.degenerate = true;
    out.tau = m;
    return out;
  }
  out.C = postnikov_C(chi);
  if (chi.is_principal() && g.is_constant()) {
    // Forced convention: the sum has no cancellation to extract.
    out.degenerate = true;
    out.tau = m;
    if (!f.is_constant())
      out.h = rf_scale(rf_log_derivative(f), Rat(out.C));
    return out;
  }
  RationalFunction h = rf_derivative(g);
  if (!f.is_constant())
    h = rf_add(h, rf_scale(rf_log_derivative(f), Rat(out.C)));
  if (h.is_zero()) fail(Err::ZeroFunction, "h vanished unexpectedly");
  out.h = h;
  GaussVal gv = gauss_val(h, p);
  out.tau = gv.tau;
  out.H = gv.H;
  out.D = std::max(deg_p_poly(gv.H.num, p), 0);
  return out;
}

bool expansion_check(const RationalFunction& f, const RationalFunction& g,
                     const DirichletCharacter& chi, i64 a, i64 b, int l,
                     double tol) {
  const auto& fac = single_factor(chi);
  i64 p = fac.pp.p;
  int m = fac.pp.m;
  i64 pm = fac.pp.value;
  if (l < 1 || l > m - 1) fail(Err::RangeError, "l out of range");
  TauH th = tau_H(f, g, chi);
  if (th.degenerate && th.h.is_zero())
    fail(Err::DegenerateBoth, "no expansion for two constants");
  const RationalFunction& h = th.h;
  int J = truncation_indices(p, l, m).J;

  i64 n = a + b * ipow(p, l);
  CharacterValue lhs_chi = chi.eval_at_ratfun(f, n);
  CharacterValue lhs_exp = exp_value(g, n, pm, p);
  Complex lhs = lhs_chi.times(lhs_exp).to_complex();

  CharacterValue rhs_chi = chi.eval_at_ratfun(f, a);
  if (rhs_chi.zero) fail(Err::UndefinedAt, "chi(f(a)) vanishes");
  CharacterValue rhs_exp = exp_value(g, a, pm, p);
  // g_-(a) = 0 mod p kills both sides (same residue class mod p).
  if (rhs_exp.zero) return std::abs(lhs) < tol;
  // T = sum_{j=1}^{J} (b p^l)^j / j! h^{(j-1)}(a).
  Rat T = 0;
  Rat bpl = Rat(b) * ipow(p, l);
  Rat pw = 1;
  Rat fact = 1;
  RationalFunction hj = h;  // h^{(j-1)}
  for (int j = 1; j <= J; ++j) {
    pw *= bpl;
    fact *= j;
    Rat value;
    try {
      value = rf_eval(hj, Rat(a));
    } catch (const Error&) {
      fail(Err::UndefinedAt, "derivative of h has a pole at a");
    }
    T += pw / fact * value;
    if (j < J) hj = rf_derivative(hj);
  }
  i64 t = rat_mod(T, pm, p);
  Complex rhs = rhs_chi.times(rhs_exp).to_complex() * unit_root(t, pm);
  return std::abs(lhs - rhs) < tol;
}

Complex complete_sum_factorized(const RationalFunction& f, const RationalFunction& g,
                                const DirichletCharacter& chi, int l) {
  const auto& fac = single_factor(chi);
  i64 p = fac.pp.p;
  int m = fac.pp.m;
  i64 pm = fac.pp.value;
  if (!chi.is_primitive()) fail(Err::RangeError, "primitive character expected");
  TauH th = tau_H(f, g, chi);
  i64 tau = th.tau;
  if (!(m > l && 2 * static_cast<i64>(l) >= m - tau && l >= 1))
    fail(Err::RangeError, "l outside the admissible window");
  i64 s = m - l - tau;
  if (s < 0) fail(Err::RangeError, "tau too large for this l");
  i64 pl = ipow(p, l);
  i64 ps = ipow(p, static_cast<int>(s));
  PeriodicFn af = make_char_exp_fn(f, g, chi, pm);
  Complex total{0.0, 0.0};
  for (i64 a = 0; a < pl; ++a) {
    Complex term = af.eval(a);
    if (term == Complex{0.0, 0.0}) continue;
    double inner;
    if (s == 0) {
      inner = 1.0;
    } else {
      i64 hd = i_eval_mod(th.H.den, a, ps);
      if (hd % p == 0)
        fail(Err::UndefinedAt, "H has a pole mod p at a live residue");
      i64 ha = mul_mod(i_eval_mod(th.H.num, a, ps), inv_mod(hd, ps), ps);
      inner = (ha == 0) ? static_cast<double>(ps) : 0.0;
    }
    if (inner != 0.0) total += term * inner;
  }
  return total * static_cast<double>(ipow(p, static_cast<int>(tau)));
}

PrimePowerBound bound_prime_power(const RationalFunction& f, const RationalFunction& g,
                                  const DirichletCharacter& chi) {
  const auto& fac = single_factor(chi);
  i64 p = fac.pp.p;
  int m = fac.pp.m;
  PrimePowerBound out;
  if (f.is_constant() && g.is_constant())
    fail(Err::DegenerateBoth, "f and g both constant");

  // Inputs whose content kills every term give the zero sum outright.
  if ((!f.num.empty() && vp_int(i_content(f.num), p) > 0) ||
      vp_int(i_content(f.den), p) > 0 || vp_int(i_content(g.den), p) > 0) {
    out.bound = 0.0;
    out.vacuous = false;
    out.exact_zero = true;
    out.note = "every term vanishes mod p";
    return out;
  }
  if (f.num.empty()) {
    out.bound = 0.0;
    out.vacuous = false;
    out.exact_zero = true;
    out.note = "f = 0";
    return out;
  }

  if (m == 1) {
    try {
      WeilCheck wc = weil_bound_check(f, g, chi);
      if (wc.exception) {
        out.bound = 1.0;
        out.vacuous = true;
        out.note = "square-root bound exception class";
      } else {
        out.bound = wc.bound / static_cast<double>(p);
        out.vacuous = out.bound >= 1.0;
      }
    } catch (const Error& e) {
      out.bound = 1.0;
      out.vacuous = true;
      out.note = e.what();
    }
    return out;
  }

  TauH th = tau_H(f, g, chi);
  out.tau = th.tau;
  out.D = th.D;
  if (th.degenerate || th.tau < 0) {
    out.bound = 1.0;
    out.vacuous = true;
    out.note = th.degenerate ? "tau forced to m" : "negative valuation input";
    return out;
  }
  if (th.D == 0) {
    if (th.tau <= m - 2) {
      // H is a nonzero constant mod p: no residue survives the inner sum.
      out.bound = 0.0;
      out.vacuous = false;
      out.exact_zero = true;
    } else {
      out.bound = 1.0;
      out.vacuous = true;
    }
  } else {
    i64 e = std::max<i64>(ceil_div(m - th.tau - 1, 2 * th.D), 0);
    out.bound = th.D * std::pow(static_cast<double>(p), -static_cast<double>(e));
    out.vacuous = out.bound >= 1.0;
  }

  // Simplified exponents in the away-from-bad-primes regime.
  int df = rf_deg(f), dg = rf_deg(g);
  if (p > std::max<i64>({16, df, dg}) &&
      abs(delta_f(f) * delta_f(g)) % p != 0) {
    i64 Dp = 2 * (df + dg);
    bool g_const = g.is_constant();
    if (!g_const || chi.is_primitive()) {
      out.simplified_applicable = true;
      out.simplified_bound =
          Dp * std::pow(static_cast<double>(p),
                        -static_cast<double>(m) / (4.0 * Dp));
    } else {
      i64 cond = chi.conductor();
      int lc = 0;
      for (i64 c = cond; c > 1; c /= p) ++lc;
      if (lc >= 1) {
        Rf rf = r_f(f);
        if (lc == 1 && !rf.all && rf.r % chi.order() == 0) {
          out.simplified_excluded = true;
        } else {
          out.simplified_applicable = true;
          out.simplified_bound =
              Dp * std::pow(static_cast<double>(p),
                            -static_cast<double>(lc) / (4.0 * Dp));
        }
      }
    }
  }
  return out;
}

double max_twist_bound(const RationalFunction& f, const RationalFunction& g,
                       const DirichletCharacter& chi, i64 c) {
  const auto& fac = single_factor(chi);
  i64 p = fac.pp.p;
  int m = fac.pp.m;
  i64 pe = fac.pp.value;

  if ((!f.num.empty() && vp_int(i_content(f.num), p) > 0) ||
      vp_int(i_content(f.den), p) > 0 || f.num.empty())
    return 0.0;  // chi(f(n)) = 0 for all n
  if (vp_int(i_content(g.den), p) > 0) return 0.0;

  double worst = 0.0;
  if (m == 1) {
    int df;
    try {
      df = deg_p(f, p);
    } catch (const Error&) {
      return 1.0;
    }
    FpRatFun gr;
    try {
      gr = reduce_ratfun_mod_p(g, p);
    } catch (const Error&) {
      return 1.0;
    }
    bool f_power = chi.is_principal() || rth_power_test_mod_p(f, p, chi.order());
    FpPoly x_poly{0, 1};
    for (i64 b = 0; b < p && worst < 1.0; ++b) {
      // (c g + b x) mod p, cancelled against the denominator of g.
      FpPoly num = fp_add(fp_scale(gr.num, c, p),
                          fp_mul(fp_scale(x_poly, b, p), gr.den, p), p);
      FpPoly gcd = fp_gcd_monic(num, gr.den, p);
      FpPoly num_red = num, den_red = gr.den;
      if (degree(gcd) >= 1) {
        num_red = fp_divrem(num, gcd, p).first;
        den_red = fp_divrem(gr.den, gcd, p).first;
      }
      int dgt = std::max(degree(num_red), degree(den_red));
      bool g_const = dgt <= 0;
      double bound;
      if (g_const && f_power) {
        bound = 1.0;
      } else {
        bound = (2.0 * df + 2.0 * std::max(dgt, 0) - 1.0) /
                std::sqrt(static_cast<double>(p));
      }
      worst = std::max(worst, std::min(bound, 1.0));
    }
    return worst;
  }

  // m >= 2: h_b = c g' + C f'/f + b; valuation and numerator degree are read
  // off the coefficients, with the uncancelled numerator giving a safe D.
  i64 C;
  try {
    C = postnikov_C(chi);
  } catch (const Error&) {
    return 1.0;
  }
  RationalFunction h0 = rf_scale(rf_derivative(g), Rat(c));
  if (!f.is_constant())
    h0 = rf_add(h0, rf_scale(rf_log_derivative(f), Rat(C)));
  i64 vden = h0.den.empty() ? 0 : vp_int(i_content(h0.den), p);
  for (i64 b = 0; b < pe && worst < 1.0; ++b) {
    IPoly num = i_add(h0.num, i_scale(h0.den, Int(b)));
    double bound;
    if (num.empty()) {
      bound = 1.0;  // h identically zero: no oscillation to use
    } else {
      i64 tau = vp_int(i_content(num), p) - vden;
      if (tau < 0) {
        bound = 1.0;
      } else {
        Int pt = pow(Int(p), static_cast<unsigned>(vp_int(i_content(num), p)));
        IPoly Hnum(num.size());
        for (size_t i = 0; i < num.size(); ++i) Hnum[i] = num[i] / pt;
        int D = deg_p_poly(Hnum, p);
        if (D <= 0) {
          bound = tau <= m - 2 ? 0.0 : 1.0;
        } else {
          i64 e = std::max<i64>(ceil_div(m - tau - 1, 2 * D), 0);
          bound = D * std::pow(static_cast<double>(p), -static_cast<double>(e));
        }
      }
    }
    worst = std::max(worst, std::min(bound, 1.0));
  }
  return worst;
}

}  // namespace smoothsum
