#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smoothsum/fpoly.hpp"
#include "smoothsum/ratfun.hpp"

using namespace smoothsum;

namespace {

RationalFunction rf(const std::string& s) { return parse_ratfun(s); }

RationalFunction random_rf(Rng& rng, int max_deg, bool with_den = true) {
  auto poly = [&](int dmax) {
    std::string s = std::to_string(rng.range(-9, 9));
    int d = static_cast<int>(rng.range(1, dmax));
    for (int i = 1; i <= d; ++i)
      s += "+" + std::to_string(rng.range(-9, 9)) + "*x^" + std::to_string(i);
    return s;
  };
  std::string num = poly(max_deg);
  std::string den = with_den && rng.range(0, 1) ? poly(std::max(max_deg / 2, 1)) : "1";
  RationalFunction d = rf(den);
  if (d.is_zero()) d = rf("1");
  RationalFunction n = rf(num);
  if (n.is_zero()) n = rf("x");
  return rf_div(n, d);
}

}  // namespace

TEST_CASE("parser basics") {
  RationalFunction h = rf("x^2/(x+1)");
  CHECK(h.num == IPoly{0, 0, 1});
  CHECK(h.den == IPoly{1, 1});

  RationalFunction cancel = rf("(x-1)*(x+1)/(x-1)");
  CHECK(cancel.num == IPoly{1, 1});
  CHECK(cancel.den == IPoly{1});

  CHECK_THROWS_AS(rf("1/0"), Error);
  CHECK_THROWS_AS(rf("x^^2"), Error);
  CHECK_THROWS_AS(rf("(x+1"), Error);
  CHECK(rf("2/4") == rf("1/2"));
  CHECK(rf("x^-2") == rf("1/x^2"));
  CHECK(rf("-x^2") == rf_neg(rf("x^2")));
}

TEST_CASE("parse-print roundtrip is canonical") {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    RationalFunction h = random_rf(rng, 5);
    RationalFunction back = rf(to_string(h));
    CHECK(back == h);
  }
}

TEST_CASE("canonical form invariants") {
  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    RationalFunction h = random_rf(rng, 5);
    if (h.is_zero()) continue;
    CHECK(h.den.back() > 0);
    CHECK(gcd(i_content(h.num), i_content(h.den)) == 1);
    QPoly g = q_gcd_monic(to_qpoly(h.num), to_qpoly(h.den));
    CHECK(degree(g) == 0);
  }
}

TEST_CASE("degrees") {
  CHECK(rf_deg(rf("x^3/(x^2+1)")) == 3);
  CHECK(deg_p(rf("(x^2-25)/(x-5)"), 5) == 1);
  CHECK(deg_p(rf("7*x^3+x"), 7) == 1);
  CHECK_THROWS_AS(deg_p(rf("x/5"), 5), Error);

  Rng rng(23);
  for (int t = 0; t < 60; ++t) {
    RationalFunction a = random_rf(rng, 4), b = random_rf(rng, 4);
    CHECK(rf_deg(rf_add(a, b)) <= rf_deg(a) + rf_deg(b));
    if (!a.is_zero()) {
      CHECK(rf_deg(rf_derivative(a)) <= 2 * rf_deg(a));
      CHECK(rf_deg(rf_log_derivative(a)) <= 2 * rf_deg(a));
    }
  }
}

TEST_CASE("derivatives") {
  CHECK(rf_log_derivative(rf("x^2")) == rf("2/x"));
  CHECK(rf_derivative(rf("x^5")) == rf("5*x^4"));

  // Quotient-rule oracle computed with separate poly arithmetic.
  Rng rng(29);
  for (int t = 0; t < 50; ++t) {
    RationalFunction h = random_rf(rng, 5);
    if (h.is_zero()) continue;
    QPoly n = to_qpoly(h.num), d = to_qpoly(h.den);
    QPoly expect_num = q_sub(q_mul(q_derivative(n), d), q_mul(n, q_derivative(d)));
    RationalFunction expect = make_ratfun(expect_num, q_mul(d, d));
    CHECK(rf_derivative(h) == expect);
  }
}

TEST_CASE("r_f") {
  CHECK(r_f(rf("x^2/(x+1)^4")).r == 2);
  CHECK(r_f(rf("x")).r == 1);
  CHECK(r_f(rf("7")).all);

  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    RationalFunction F = random_rf(rng, 3);
    if (F.is_zero() || F.is_constant()) continue;
    i64 r = rng.range(2, 4);
    RationalFunction fr = rf_pow(F, r);
    Rf got = r_f(fr);
    REQUIRE(!got.all);
    CHECK(got.r == r * r_f(F).r);
  }
}

TEST_CASE("discriminant quantities") {
  CHECK(delta_f(rf("x^2-1")) == 4);
  CHECK(delta_f(rf("x")) == 1);

  // Delta(f,g,0) = Delta(f) Delta(g) * product of primes below 22.
  RationalFunction f = rf("x"), g = rf("x^2");
  Int tail = 1;
  for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19}) tail *= p;
  CHECK(delta_fgk(f, g, 0) == abs(delta_f(f) * delta_f(g)) * tail);
}

TEST_CASE("gauss valuation") {
  auto gv = gauss_val(rf("5*x/(x+1)"), 5);
  CHECK(gv.tau == 1);
  CHECK(gv.H == rf("x/(x+1)"));

  auto gv2 = gauss_val(rf("(x+5)/5"), 5);
  CHECK(gv2.tau == -1);
  CHECK(gv2.H == rf("x+5"));
  CHECK(deg_p(gv2.H, 5) == 1);

  Rng rng(37);
  for (int t = 0; t < 50; ++t) {
    RationalFunction h = random_rf(rng, 4);
    if (h.is_zero()) continue;
    i64 p = std::vector<i64>{3, 5, 7}[t % 3];
    i64 e = rng.range(1, 4);
    Rat scale = 1;
    for (i64 i = 0; i < e; ++i) scale *= p;
    i64 before = gauss_val(h, p).tau;
    CHECK(gauss_val(rf_scale(h, scale), p).tau == before + e);
  }
}

TEST_CASE("gauss valuation is multiplicative") {
  Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    RationalFunction a = random_rf(rng, 3), b = random_rf(rng, 3);
    if (a.is_zero() || b.is_zero()) continue;
    i64 p = std::vector<i64>{3, 5, 7, 11}[t % 4];
    CHECK(gauss_val(rf_mul(a, b), p).tau ==
          gauss_val(a, p).tau + gauss_val(b, p).tau);
  }
}

TEST_CASE("signed shift operators") {
  // k = 1, shifts 0 and q: g^+ = x^2 - (x+q)^2 = -2qx - q^2.
  i64 q = 13;
  std::vector<SignedShift> shifts{{Rat(0), 1}, {Rat(q), -1}};
  RationalFunction gplus = rf_signed_sum(rf("x^2"), shifts);
  CHECK(gplus == rf("-26*x-169"));

  RationalFunction fstar = rf_pow_product(rf("x"), shifts);
  CHECK(fstar == rf("x/(x+13)"));
}

TEST_CASE("difference of log derivative matches log derivative of product") {
  Rng rng(43);
  for (int t = 0; t < 30; ++t) {
    RationalFunction f = random_rf(rng, 3);
    if (f.is_zero() || f.is_constant()) continue;
    std::vector<SignedShift> shifts;
    int k = 1 + static_cast<int>(rng.range(0, 1));
    std::vector<i64> qs = {rng.range(1, 20), rng.range(1, 20)};
    std::vector<i64> h0 = {rng.range(0, 5), rng.range(0, 5)};
    std::vector<i64> h1 = {h0[0] + rng.range(1, 4), h0[1] + rng.range(1, 4)};
    for (i64 mask = 0; mask < (1 << k); ++mask) {
      i64 off = 0;
      int bits = 0;
      for (int i = 0; i < k; ++i) {
        int j = (mask >> i) & 1;
        bits += j;
        off += (j ? h1[i] : h0[i]) * qs[i];
      }
      shifts.push_back({Rat(off), bits % 2 == 0 ? 1 : -1});
    }
    RationalFunction fstar = rf_pow_product(f, shifts);
    if (fstar.is_zero() || fstar.is_constant()) continue;
    RationalFunction lhs = rf_log_derivative(fstar);
    RationalFunction rhs = rf_signed_sum(rf_log_derivative(f), shifts);
    CHECK(lhs == rhs);
    // Leading coefficients of numerator and denominator agree.
    CHECK(fstar.num.back() == fstar.den.back());
  }
}

TEST_CASE("fp squarefree decomposition handles p-th powers") {
  i64 p = 5;
  // (x+1)^5 (x+2)^2 mod 5.
  FpPoly a = fp_mul(fp_reduce(IPoly{1, 1}, p), fp_reduce(IPoly{1, 1}, p), p);
  FpPoly pow5{1};
  FpPoly x1 = fp_reduce(IPoly{1, 1}, p);
  for (int i = 0; i < 5; ++i) pow5 = fp_mul(pow5, x1, p);
  FpPoly x2 = fp_reduce(IPoly{2, 1}, p);
  FpPoly full = fp_mul(pow5, fp_mul(x2, x2, p), p);
  auto parts = fp_squarefree_decomposition(full, p);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].multiplicity == 2);
  CHECK(parts[0].factor == x2);
  CHECK(parts[1].multiplicity == 5);
  CHECK(parts[1].factor == x1);
}
