#include "smoothsum/ratfun.hpp"

#include <sstream>

namespace smoothsum {

RationalFunction make_ratfun(const QPoly& num, const QPoly& den) {
  if (den.empty()) fail(Err::ZeroDenominator, "zero denominator");
  if (num.empty()) return RationalFunction{{}, {Int(1)}};
  QPoly g = q_gcd_monic(num, den);
  QPoly n = q_divrem(num, g).first;
  QPoly d = q_divrem(den, g).first;
  ScaledIPoly ns = q_clear_denominators(n);
  ScaledIPoly ds = q_clear_denominators(d);
  // h = (ns.num/ns.den)/(ds.num/ds.den) * N/D; fold the rational constant
  // into coprime integers a/b.
  Rat c = Rat(ns.num) / Rat(ns.den) / (Rat(ds.num) / Rat(ds.den));
  Int a = rat_num(c), b = rat_den(c);
  RationalFunction out;
  out.num = i_scale(ns.poly, a);
  out.den = i_scale(ds.poly, b);
  return out;
}

RationalFunction ratfun_from_int(const Int& c) {
  RationalFunction out;
  if (c != 0) out.num = {c};
  return out;
}

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b) {
  QPoly an = to_qpoly(a.num), ad = to_qpoly(a.den);
  QPoly bn = to_qpoly(b.num), bd = to_qpoly(b.den);
  return make_ratfun(q_add(q_mul(an, bd), q_mul(bn, ad)), q_mul(ad, bd));
}

RationalFunction rf_sub(const RationalFunction& a, const RationalFunction& b) {
  QPoly an = to_qpoly(a.num), ad = to_qpoly(a.den);
  QPoly bn = to_qpoly(b.num), bd = to_qpoly(b.den);
  return make_ratfun(q_sub(q_mul(an, bd), q_mul(bn, ad)), q_mul(ad, bd));
}

RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b) {
  return make_ratfun(q_mul(to_qpoly(a.num), to_qpoly(b.num)),
                     q_mul(to_qpoly(a.den), to_qpoly(b.den)));
}

RationalFunction rf_div(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) fail(Err::ZeroDenominator, "division by the zero function");
  return make_ratfun(q_mul(to_qpoly(a.num), to_qpoly(b.den)),
                     q_mul(to_qpoly(a.den), to_qpoly(b.num)));
}

RationalFunction rf_neg(const RationalFunction& a) {
  RationalFunction out(a);
  for (auto& c : out.num) c = -c;
  return out;
}

RationalFunction rf_pow(const RationalFunction& a, i64 e) {
  if (e == 0) return ratfun_from_int(1);
  RationalFunction base = a;
  if (e < 0) {
    base = rf_div(ratfun_from_int(1), a);
    e = -e;
  }
  RationalFunction out = ratfun_from_int(1);
  while (e > 0) {
    if (e & 1) out = rf_mul(out, base);
    base = rf_mul(base, base);
    e >>= 1;
  }
  return out;
}

RationalFunction rf_scale(const RationalFunction& a, const Rat& c) {
  return rf_mul(a, make_ratfun({c}, {Rat(1)}));
}

int rf_deg(const RationalFunction& h) {
  return std::max(degree(h.num), degree(h.den));
}

RationalFunction rf_derivative(const RationalFunction& h) {
  QPoly n = to_qpoly(h.num), d = to_qpoly(h.den);
  QPoly num = q_sub(q_mul(q_derivative(n), d), q_mul(n, q_derivative(d)));
  return make_ratfun(num, q_mul(d, d));
}

RationalFunction rf_log_derivative(const RationalFunction& h) {
  if (h.is_zero()) fail(Err::ZeroFunction, "log-derivative of zero");
  // h'/h = num'/num - den'/den keeps degrees small.
  QPoly n = to_qpoly(h.num), d = to_qpoly(h.den);
  QPoly num = q_sub(q_mul(q_derivative(n), d), q_mul(n, q_derivative(d)));
  return make_ratfun(num, q_mul(n, d));
}

RationalFunction rf_shift(const RationalFunction& h, const Rat& a) {
  return make_ratfun(q_shift(to_qpoly(h.num), a), q_shift(to_qpoly(h.den), a));
}

Rat rf_eval(const RationalFunction& h, const Rat& x) {
  Rat d = q_eval(to_qpoly(h.den), x);
  if (d == 0) fail(Err::UndefinedAt, "pole of the rational function");
  return q_eval(to_qpoly(h.num), x) / d;
}

Rf r_f(const RationalFunction& f) {
  if (f.is_zero()) fail(Err::ZeroFunction, "r_f of the zero function");
  if (f.is_constant()) return Rf{true, 1};
  i64 g = 0;
  for (const IPoly* part : {&f.num, &f.den}) {
    if (degree(*part) < 1) continue;
    for (const auto& sf : q_squarefree_decomposition(to_qpoly(*part)))
      g = gcd_i64(g, sf.multiplicity);
  }
  return Rf{false, g == 0 ? 1 : g};
}

RationalFunction rf_pow_product(const RationalFunction& f,
                                const std::vector<SignedShift>& shifts) {
  RationalFunction out = ratfun_from_int(1);
  for (const auto& s : shifts) {
    RationalFunction term = rf_shift(f, s.offset);
    out = s.sign >= 0 ? rf_mul(out, term) : rf_div(out, term);
  }
  return out;
}

RationalFunction rf_signed_sum(const RationalFunction& g,
                               const std::vector<SignedShift>& shifts) {
  RationalFunction out;  // zero
  for (const auto& s : shifts) {
    RationalFunction term = rf_shift(g, s.offset);
    out = s.sign >= 0 ? rf_add(out, term) : rf_sub(out, term);
  }
  return out;
}

namespace {

// Primitive radical (product of distinct irreducible factors) of num*den.
QPoly radical_of(const RationalFunction& f) {
  QPoly rad{Rat(1)};
  for (const IPoly* part : {&f.num, &f.den}) {
    if (degree(*part) < 1) continue;
    for (const auto& sf : q_squarefree_decomposition(to_qpoly(*part)))
      rad = q_mul(rad, sf.factor);
  }
  return rad;
}

}  // namespace

Int delta_f(const RationalFunction& f) {
  if (f.is_zero() || f.is_constant()) return Int(1);
  QPoly rad = radical_of(f);
  // Leading coefficient of num*den.
  Int cf = f.num.back() * f.den.back();
  QPoly scaled = q_scale(rad, Rat(cf));
  Rat disc = q_discriminant(scaled);
  // disc of an integer polynomial is an integer.
  Int disc_int = rat_num(disc) / rat_den(disc);
  Rf rf = r_f(f);
  Int delta = (rf.all ? Int(1) : Int(rf.r)) * cf * disc_int;
  return delta == 0 ? Int(1) : delta;
}

Int delta_fgk(const RationalFunction& f, const RationalFunction& g, i64 k) {
  Int out = delta_f(f) * delta_f(g);
  out = abs(out);
  i64 cutoff = 2 * (rf_deg(f) + rf_deg(g)) + k + 16;
  for (i64 p : primes_below(cutoff)) out *= p;
  return out;
}

GaussVal gauss_val(const RationalFunction& h, i64 p) {
  if (h.is_zero()) fail(Err::ZeroFunction, "Gauss valuation of zero");
  i64 vn = vp_int(i_content(h.num), p);
  i64 vd = vp_int(i_content(h.den), p);
  i64 tau = vn - vd;
  RationalFunction H;
  Int pn = pow(Int(p), static_cast<unsigned>(vn));
  Int pd = pow(Int(p), static_cast<unsigned>(vd));
  H.num.resize(h.num.size());
  H.den.resize(h.den.size());
  for (size_t i = 0; i < h.num.size(); ++i) H.num[i] = h.num[i] / pn;
  for (size_t i = 0; i < h.den.size(); ++i) H.den[i] = h.den[i] / pd;
  return {tau, H};
}

Valuation vp_ratfun(const RationalFunction& h, i64 p) {
  if (h.is_zero()) return Valuation::infinite();
  return Valuation::finite(gauss_val(h, p).tau);
}

}  // namespace smoothsum
