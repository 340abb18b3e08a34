#include "smoothsum/fpoly.hpp"

namespace smoothsum {

FpPoly fp_reduce(const IPoly& a, i64 p) {
  FpPoly out(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    out[i] = floor_mod(static_cast<i64>(a[i] % p), p);
  trim(out);
  return out;
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b, i64 p) {
  FpPoly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] = floor_mod(out[i] + b[i], p);
  trim(out);
  return out;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, i64 p) {
  FpPoly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] = floor_mod(out[i] - b[i], p);
  trim(out);
  return out;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, i64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = floor_mod(out[i + j] + mul_mod(a[i], b[j], p), p);
  }
  trim(out);
  return out;
}

FpPoly fp_scale(const FpPoly& a, i64 c, i64 p) {
  c = floor_mod(c, p);
  if (c == 0) return {};
  FpPoly out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = mul_mod(a[i], c, p);
  trim(out);
  return out;
}

FpPoly fp_derivative(const FpPoly& a, i64 p) {
  if (a.size() <= 1) return {};
  FpPoly out(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i)
    out[i - 1] = mul_mod(a[i], static_cast<i64>(i % p), p);
  trim(out);
  return out;
}

std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& a, const FpPoly& b, i64 p) {
  if (b.empty()) fail(Err::ZeroDenominator, "mod-p division by zero");
  FpPoly r(a);
  if (a.size() < b.size()) return {{}, r};
  FpPoly q(a.size() - b.size() + 1, 0);
  i64 inv_lc = inv_mod(b.back(), p);
  for (size_t k = q.size(); k-- > 0;) {
    size_t i = k + b.size() - 1;
    if (r[i] == 0) continue;
    i64 c = mul_mod(r[i], inv_lc, p);
    q[k] = c;
    for (size_t j = 0; j < b.size(); ++j)
      r[k + j] = floor_mod(r[k + j] - mul_mod(c, b[j], p), p);
  }
  trim(q);
  trim(r);
  return {q, r};
}

FpPoly fp_monic(FpPoly a, i64 p) {
  if (a.empty()) return a;
  return fp_scale(a, inv_mod(a.back(), p), p);
}

FpPoly fp_gcd_monic(FpPoly a, FpPoly b, i64 p) {
  while (!b.empty()) {
    FpPoly r = fp_divrem(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(std::move(a), p);
}

i64 fp_eval(const FpPoly& a, i64 x, i64 p) {
  i64 v = 0;
  x = floor_mod(x, p);
  for (size_t i = a.size(); i-- > 0;) v = floor_mod(mul_mod(v, x, p) + a[i], p);
  return v;
}

bool fp_equal(const FpPoly& a, const FpPoly& b) { return a == b; }

namespace {

// a must consist only of monomials with exponent divisible by p; returns the
// p-th root via the Frobenius (coefficients are already p-th powers in F_p).
FpPoly fp_pth_root(const FpPoly& a, i64 p) {
  if (a.empty()) return {};
  FpPoly out(a.size() / p + 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    out[i / p] = a[i];  // c^(1/p) = c in F_p
  }
  trim(out);
  return out;
}

void merge_part(std::vector<FpSquarefreePart>& parts, const FpPoly& factor,
                i64 mult, i64 p) {
  if (degree(factor) < 1) return;
  for (auto& part : parts) {
    if (part.multiplicity == mult) {
      part.factor = fp_mul(part.factor, factor, p);
      return;
    }
  }
  parts.push_back({factor, mult});
}

void fp_sqf_rec(const FpPoly& a, i64 p, i64 outer,
                std::vector<FpSquarefreePart>& parts) {
  FpPoly f = fp_monic(a, p);
  if (degree(f) < 1) return;
  FpPoly fp_der = fp_derivative(f, p);
  if (fp_der.empty()) {
    // f is a p-th power.
    fp_sqf_rec(fp_pth_root(f, p), p, outer * p, parts);
    return;
  }
  FpPoly g = fp_gcd_monic(f, fp_der, p);
  FpPoly w = fp_divrem(f, g, p).first;
  // w carries each squarefree factor of f whose multiplicity is not
  // divisible by p, once.
  i64 i = 1;
  while (degree(w) >= 1) {
    FpPoly y = fp_gcd_monic(w, g, p);
    FpPoly fac = fp_divrem(w, y, p).first;
    merge_part(parts, fac, outer * i, p);
    w = std::move(y);
    g = fp_divrem(g, w, p).first;
    ++i;
  }
  // What remains of g is the p-th power part.
  if (degree(g) >= 1) fp_sqf_rec(fp_pth_root(g, p), p, outer * p, parts);
}

}  // namespace

std::vector<FpSquarefreePart> fp_squarefree_decomposition(FpPoly a, i64 p) {
  if (a.empty()) fail(Err::ZeroFunction, "squarefree decomposition of zero mod p");
  std::vector<FpSquarefreePart> parts;
  fp_sqf_rec(a, p, 1, parts);
  std::sort(parts.begin(), parts.end(),
            [](const auto& x, const auto& y) { return x.multiplicity < y.multiplicity; });
  return parts;
}

FpRatFun reduce_ratfun_mod_p(const RationalFunction& h, i64 p) {
  if (h.is_zero()) return {{}, {1}};
  if (vp_int(i_content(h.num), p) != vp_int(i_content(h.den), p))
    fail(Err::BadReduction, "function has nonzero valuation at p");
  if (vp_int(i_content(h.num), p) > 0)
    fail(Err::BadReduction, "contents divisible by p");
  FpPoly n = fp_reduce(h.num, p);
  FpPoly d = fp_reduce(h.den, p);
  FpPoly g = fp_gcd_monic(n, d, p);
  if (degree(g) >= 1) {
    n = fp_divrem(n, g, p).first;
    d = fp_divrem(d, g, p).first;
  }
  return {n, d};
}

int deg_p(const RationalFunction& h, i64 p) {
  FpRatFun r = reduce_ratfun_mod_p(h, p);
  return std::max(degree(r.num), degree(r.den));
}

int deg_p_num(const RationalFunction& h, i64 p) {
  return degree(reduce_ratfun_mod_p(h, p).num);
}

int deg_p_poly(const IPoly& a, i64 p) { return degree(fp_reduce(a, p)); }

bool is_constant_mod_p(const RationalFunction& h, i64 p) {
  return deg_p(h, p) <= 0;
}

}  // namespace smoothsum
