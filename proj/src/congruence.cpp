#include "smoothsum/congruence.hpp"

#include <map>

#include "smoothsum/fpoly.hpp"

namespace smoothsum {

namespace {

i64 ipow(i64 b, int e) {
  i64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_input(const IPoly& h, i64 p, int m) {
  if (m < 1 || ipow(p, m) > 1'000'000'000)
    fail(Err::RangeError, "prime power out of range");
  if (fp_reduce(h, p).empty()) fail(Err::ZeroModP, "h vanishes mod p");
}

struct LiftContext {
  i64 p;
  std::map<std::pair<int, std::vector<i64>>, i64> memo;
};

// #{ a mod p^m : h(a) = 0 mod p^m } for h nonzero mod p, any m >= 0.
i64 count_rec(LiftContext& ctx, const IPoly& h, int m) {
  if (m <= 0) return 1;
  i64 p = ctx.p;
  i64 pm = ipow(p, m);
  std::vector<i64> key;
  key.reserve(h.size());
  for (const auto& c : h) key.push_back(floor_mod(static_cast<i64>(c % pm), pm));
  while (!key.empty() && key.back() == 0) key.pop_back();
  auto memo_key = std::make_pair(m, key);
  auto it = ctx.memo.find(memo_key);
  if (it != ctx.memo.end()) return it->second;

  FpPoly hbar = fp_reduce(h, p);
  int d = degree(hbar);
  i64 total = 0;
  i64 sum_r = 0;
  for (i64 a = 0; a < p; ++a) {
    if (fp_eval(hbar, a, p) != 0) continue;
    if (m == 1) {
      ++total;
      continue;
    }
    // T(x) = h(a + p x); r(a) is its Gauss valuation at p and matches
    // min_j (e_j(a) + j) for the coefficients h^(j)(a)/j! * p^j.
    QPoly t = q_shift(to_qpoly(h), Rat(a));
    IPoly T(t.size());
    Int ppow = 1;
    for (size_t i = 0; i < t.size(); ++i) {
      T[i] = rat_num(t[i]) * ppow;  // integer shift keeps integer coefficients
      ppow *= p;
    }
    trim(T);
    i64 r = vp_int(i_content(T), p);
    sum_r += r;
    if (r > d || sum_r > d)
      fail(Err::HypothesisViolation, "lifting invariant r(a) <= deg_p h failed");
    if (r >= m) {
      total += ipow(p, m - 1);
      continue;
    }
    IPoly H(T.size());
    Int pr = pow(Int(p), static_cast<unsigned>(r));
    for (size_t i = 0; i < T.size(); ++i) H[i] = T[i] / pr;
    if (deg_p_poly(H, p) > r)
      fail(Err::HypothesisViolation, "lifting invariant deg_p H_a <= r(a) failed");
    total += ipow(p, r - 1) * count_rec(ctx, H, m - r);
  }
  ctx.memo.emplace(memo_key, total);
  return total;
}

}  // namespace

i64 root_count_bound(int d, i64 p, int m) {
  if (d <= 0) return 0;
  int ceil_md = (m + d - 1) / d;
  return d * ipow(p, m - ceil_md);
}

RootCount count_roots_bruteforce(const IPoly& h, i64 p, int m) {
  check_input(h, p, m);
  i64 pm = ipow(p, m);
  i64 count = 0;
  for (i64 a = 0; a < pm; ++a)
    if (i_eval_mod(h, a, pm) == 0) ++count;
  return {count, root_count_bound(deg_p_poly(h, p), p, m), "brute"};
}

RootCount count_roots_lifting(const IPoly& h, i64 p, int m) {
  check_input(h, p, m);
  LiftContext ctx{p, {}};
  i64 count = count_rec(ctx, h, m);
  return {count, root_count_bound(deg_p_poly(h, p), p, m), "lifting"};
}

RootCount count_roots_with_denominator(const RationalFunction& h, i64 p, int m) {
  check_input(h.num, p, m);
  FpPoly den_bar = fp_reduce(h.den, p);
  i64 pm = ipow(p, m);
  // Lift only over numerator root branches whose mod-p residue keeps the
  // denominator nonzero; the condition depends on a mod p alone.
  i64 count = 0;
  FpPoly num_bar = fp_reduce(h.num, p);
  LiftContext ctx{p, {}};
  for (i64 a0 = 0; a0 < p; ++a0) {
    if (fp_eval(num_bar, a0, p) != 0) continue;
    if (fp_eval(den_bar, a0, p) == 0) continue;
    // Count roots of num in the branch a = a0 mod p.
    if (m == 1) {
      ++count;
      continue;
    }
    QPoly t = q_shift(to_qpoly(h.num), Rat(a0));
    IPoly T(t.size());
    Int ppow = 1;
    for (size_t i = 0; i < t.size(); ++i) {
      T[i] = rat_num(t[i]) * ppow;
      ppow *= p;
    }
    trim(T);
    i64 r = vp_int(i_content(T), p);
    if (r >= m) {
      count += ipow(p, m - 1);
      continue;
    }
    IPoly H(T.size());
    Int pr = pow(Int(p), static_cast<unsigned>(r));
    for (size_t i = 0; i < T.size(); ++i) H[i] = T[i] / pr;
    count += ipow(p, r - 1) * count_rec(ctx, H, m - r);
  }
  (void)pm;
  return {count, root_count_bound(deg_p_poly(h.num, p), p, m), "lifting"};
}

}  // namespace smoothsum
