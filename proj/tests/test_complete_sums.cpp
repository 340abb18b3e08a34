#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "smoothsum/complete_sums.hpp"
#include "smoothsum/fpoly.hpp"

using namespace smoothsum;

namespace {

RationalFunction rf(const std::string& s) { return parse_ratfun(s); }

RationalFunction random_poly_rf(Rng& rng, int dmax, i64 cmax) {
  std::string s = std::to_string(rng.range(-cmax, cmax));
  int d = static_cast<int>(rng.range(1, dmax));
  for (int i = 1; i <= d; ++i)
    s += "+" + std::to_string(rng.range(-cmax, cmax)) + "*x^" + std::to_string(i);
  RationalFunction out = rf(s);
  return out.is_zero() ? rf("x") : out;
}

}  // namespace

TEST_CASE("CRT product equals direct summation") {
  Rng rng(1);
  for (i64 q : {15L, 45L, 105L, 225L, 1155L}) {
    for (int t = 0; t < 4; ++t) {
      SumInstance inst;
      inst.q = q;
      inst.chi = DirichletCharacter::random_any(q, rng);
      inst.f = random_poly_rf(rng, 3, 5);
      inst.g = random_poly_rf(rng, 3, 5);
      inst.I = {0, q};
      Complex a = brute_complete_sum(inst);
      Complex b = brute_complete_sum_direct(inst);
      CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST_CASE("orthogonality and Gauss sums") {
  Rng rng(2);
  for (i64 q : {7L, 45L}) {
    auto chi = DirichletCharacter::random_primitive(q, rng);
    if (chi.is_principal()) continue;
    SumInstance inst{rf("x"), RationalFunction{}, chi, q, {0, q}};
    CHECK(std::abs(brute_complete_sum(inst)) < 1e-9);
  }

  auto quad7 = DirichletCharacter::from_exponents(7, {{7, 3}});
  SumInstance gauss{rf("x"), rf("x"), quad7, 7, {0, 7}};
  CHECK(std::abs(std::abs(brute_complete_sum(gauss)) - std::sqrt(7.0)) < 1e-9);
}

TEST_CASE("degenerate pairs") {
  auto quad7 = DirichletCharacter::from_exponents(7, {{7, 3}});
  SumInstance inst{rf("x^2"), RationalFunction{}, quad7, 7, {0, 7}};
  CHECK(std::abs(brute_complete_sum(inst) - Complex{6.0, 0.0}) < 1e-9);

  auto rep = degeneracy_mod_p(rf("x^2"), RationalFunction{}, quad7);
  CHECK(rep.is_degenerate);
  CHECK(rep.r == 2);
  CHECK(rep.c2 == 0);
  CHECK(rep.verified);

  auto chi = DirichletCharacter::random_primitive(11, *new Rng(3));
  CHECK(!degeneracy_mod_p(rf("x"), rf("x"), chi).is_degenerate);

  // Constructed degenerate instances are flagged, and the summand really is
  // constant: |S| >= p - deg(f_- f_+ g_-).
  Rng rng(4);
  for (i64 p : {7L, 11L, 13L}) {
    auto ch = DirichletCharacter::random_primitive(p, rng);
    i64 r = ch.order();
    RationalFunction F = random_poly_rf(rng, 2, 4);
    RationalFunction f = rf_scale(rf_pow(F, r), Rat(rng.range(1, p - 1)));
    RationalFunction g = rf(std::to_string(rng.range(0, 6)));
    auto rep2 = degeneracy_mod_p(f, g, ch);
    if (!rep2.is_degenerate) continue;  // reduction degenerated further
    CHECK(rep2.verified);
    SumInstance di{f, g, ch, p, {0, p}};
    int degs = std::max(deg_p_poly(f.num, p), 0) + std::max(deg_p_poly(f.den, p), 0) +
               std::max(deg_p_poly(g.den, p), 0);
    CHECK(std::abs(brute_complete_sum(di)) >= p - degs - 1e-9);
  }
}

TEST_CASE("square-root bound sweep over small boxes") {
  // All f, g with coefficients in {-1,0,1} and degree <= 2, all characters.
  std::vector<RationalFunction> pool;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c) {
        QPoly p;
        p.push_back(Rat(a));
        p.push_back(Rat(b));
        p.push_back(Rat(c));
        trim(p);
        if (p.empty()) continue;
        pool.push_back(make_ratfun(p, {Rat(1)}));
      }
  for (i64 p : {5L, 7L, 11L}) {
    for (i64 e = 0; e < p - 1; ++e) {
      auto chi = DirichletCharacter::from_exponents(p, {{p, e}});
      for (const auto& f : pool) {
        for (const auto& g : pool) {
          WeilCheck wc;
          try {
            wc = weil_bound_check(f, g, chi);
          } catch (const Error&) {
            continue;
          }
          CHECK(wc.ok);
        }
      }
    }
  }
}

TEST_CASE("square-root bound on random rational functions") {
  Rng rng(5);
  const std::vector<i64> primes{5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
  int done = 0;
  while (done < 150) {
    i64 p = primes[rng.below(primes.size())];
    auto chi = DirichletCharacter::random_any(p, rng);
    RationalFunction f = random_poly_rf(rng, 3, 6);
    RationalFunction g = random_poly_rf(rng, 3, 6);
    if (rng.range(0, 1)) f = rf_div(f, random_poly_rf(rng, 2, 4));
    if (rng.range(0, 1)) g = rf_div(g, random_poly_rf(rng, 2, 4));
    WeilCheck wc;
    try {
      wc = weil_bound_check(f, g, chi);
    } catch (const Error&) {
      continue;
    }
    CHECK(wc.ok);
    ++done;
  }
}

TEST_CASE("r-th power tester") {
  CHECK(rth_power_test_mod_p(rf("x^2"), 7, 2));
  CHECK(rth_power_test_mod_p(rf("x^2"), 11, 2));
  CHECK(!rth_power_test_mod_p(rf("x^2+x"), 5, 2));
  CHECK(rth_power_test_mod_p(rf("3"), 13, 4));
  CHECK(rth_power_test_mod_p(rf("x^2/(x+1)^4"), 13, 2));

  // If p does not divide Delta(f) and f is an r-th power mod p then r | r_f.
  Rng rng(6);
  int done = 0;
  while (done < 80) {
    RationalFunction f = random_poly_rf(rng, 4, 6);
    if (rng.range(0, 1)) f = rf_pow(f, rng.range(2, 3));
    if (f.is_constant()) continue;
    i64 p = std::vector<i64>{11, 13, 17, 19}[rng.below(4)];
    if (delta_f(f) % p == 0) continue;
    for (i64 r : {2, 3}) {
      bool is_power;
      try {
        is_power = rth_power_test_mod_p(f, p, r);
      } catch (const Error&) {
        continue;
      }
      if (is_power) {
        Rf rfv = r_f(f);
        CHECK((rfv.all || rfv.r % r == 0));
      }
    }
    ++done;
  }
}
