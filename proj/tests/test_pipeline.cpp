#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "smoothsum/pipeline.hpp"

using namespace smoothsum;

namespace {

RationalFunction rf(const std::string& s) { return parse_ratfun(s); }

}  // namespace

TEST_CASE("smoothness class membership") {
  // Prime in (y, y^2].
  CHECK(smoothness_profile(101 * 15, std::pow(1515.0, 1.0 / 3)).in_N_y);
  // Two primes in the window.
  double y = 20;
  CHECK(!smoothness_profile(23 * 29, y).in_N_y);
  CHECK(smoothness_profile(23 * 7 * 11, y).in_N_y);
  // Fully smooth.
  CHECK(smoothness_profile(3 * 3 * 5 * 7 * 11 * 13, 20).in_N_y);
  // Square of a window prime fails.
  CHECK(!smoothness_profile(23 * 23, 20).in_N_y);
  CHECK_THROWS_AS(smoothness_profile(12, 3), Error);
}

TEST_CASE("exceptional modulus") {
  RationalFunction f = rf("x");
  RationalFunction g;
  Int m_half = exceptional_modulus(f, g, 0.5);
  // Delta(x) = 1, Delta(0) = 1 by convention, primes below 2*1+4+16 = 22.
  Int expect = 1;
  for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19}) expect *= p;
  CHECK(m_half == expect);
  CHECK(exceptional_modulus(f, g, 1.0) <= m_half);  // fewer tail primes
  CHECK(m_half % 2 == 0);
}

TEST_CASE("modulus splitting cases") {
  RationalFunction f = rf("x");
  RationalFunction g;
  Rng rng(1);

  // Case I: prime above y.
  {
    i64 q = 10007 * 29 * 31;  // y = q^(1/3) ~ 208
    auto chi = DirichletCharacter::random_primitive(q, rng);
    auto split = factor_modulus(q, 1.0 / 3, f, g, chi);
    CHECK(split.case_tag == "I");
    CHECK(split.Q == 10007);
    CHECK(split.k_window_ok);
  }

  // Case II: conductor-driven small co-modulus (principal chi has q' = 1).
  {
    i64 q = 29LL * 31 * 37 * 41;
    auto chi = DirichletCharacter::principal(q);
    auto split = factor_modulus(q, 1.0 / 3, f, g, chi);
    CHECK(split.case_tag == "II");
    CHECK(split.Q == 1);
  }

  // Case III: smooth with full conductor.
  {
    i64 q = 29LL * 31 * 37 * 41;  // y ~ 108.8
    auto chi = DirichletCharacter::random_primitive(q, rng);
    auto split = factor_modulus(q, 1.0 / 3, f, g, chi);
    CHECK(split.case_tag == "III");
    CHECK(static_cast<double>(split.Q) > std::sqrt(split.y));
    CHECK(static_cast<double>(split.Q) <= split.y + 1e-9);
    CHECK(split.k_window_ok);
  }

  // Structural invariants across a small scan.
  int checked = 0;
  for (i64 q = 29791; q < 200000 && checked < 40; q += 2) {
    auto prof = smoothness_profile(q, std::pow(static_cast<double>(q), 1.0 / 3));
    if (!prof.in_N_y) continue;
    Int M = exceptional_modulus(f, g, 1.0 / 3);
    if (gcd(Int(q), M) != 1) continue;
    auto chi = DirichletCharacter::random_primitive(q, rng);
    auto split = factor_modulus(q, 1.0 / 3, f, g, chi);
    i64 prod = split.Q;
    for (i64 qi : split.qs) prod *= qi;
    CHECK(prod == q);
    CHECK(split.k_window_ok);
    ++checked;
  }
  CHECK(checked > 0);

  CHECK_THROWS_AS(factor_modulus(3 * 5 * 7, 1.0 / 3, f, g,
                                 DirichletCharacter::principal(105)),
                  Error);  // shares a factor with M
}

TEST_CASE("certified incomplete bound dominates") {
  Rng rng(2);
  RationalFunction f = rf("x");
  int done = 0;
  // Members of N(q^{1/3}) with all prime factors clear of the excluded set.
  for (i64 q : {29LL * 31 * 41, 29LL * 31 * 59, 29LL * 31 * 97, 29LL * 31 * 151,
                29LL * 31 * 41 * 43}) {
    auto prof = smoothness_profile(q, std::pow(static_cast<double>(q), 1.0 / 3));
    REQUIRE(prof.in_N_y);
    SumInstance inst;
    inst.q = q;
    inst.chi = DirichletCharacter::random_primitive(q, rng);
    inst.f = f;
    inst.g = done % 2 ? RationalFunction{} : rf("5*x");
    i64 N = done % 3 == 0 ? q : static_cast<i64>(std::pow(static_cast<double>(q), 0.9));
    inst.I = {rng.range(-1000, 1000), N};
    CertifiedBound cb = certified_incomplete_bound(inst, 1.0 / 3, 0.1);
    double mean = std::abs(brute_interval_mean(inst));
    CHECK(mean <= cb.value + 1e-9);
    CHECK(recombine_trace(cb) == doctest::Approx(cb.value).epsilon(1e-12));
    ++done;
  }
  CHECK(done >= 4);
}

TEST_CASE("full-period incomplete sum vanishes under the bound") {
  Rng rng(3);
  i64 q = 29 * 31 * 41;
  SumInstance inst{rf("x"), RationalFunction{}, DirichletCharacter::random_primitive(q, rng),
                   q, {0, q}};
  double mean = std::abs(brute_interval_mean(inst));
  CHECK(mean < 1e-9);
  auto cb = certified_incomplete_bound(inst, 1.0 / 3, 0.1);
  CHECK(mean <= cb.value);
}

TEST_CASE("weyl reference estimate") {
  RationalFunction g = rf("x^2");
  i64 q = 10007;
  Interval I{0, q};
  auto wr = weyl_reference(g, q, I, 0.05);
  CHECK(!wr.certified);
  CHECK(wr.sigma == doctest::Approx(0.5));
  CHECK(wr.estimate_mean > 0);
  CHECK(wr.observed_mean <= 1.0);
  CHECK(wr.block_length >= static_cast<i64>(std::pow(q, 0.5)));
  CHECK_THROWS_AS(weyl_reference(rf("x"), q, I, 0.05), Error);
  CHECK_THROWS_AS(weyl_reference(g, q, Interval{0, 10}, 0.05), Error);
}

TEST_CASE("nonprincipal character sum bound") {
  Rng rng(4);
  // Primitive over a full period: observed 0.
  i64 p = 10007;
  auto chi = DirichletCharacter::random_primitive(p, rng);
  auto cb = nonprincipal_char_sum_bound(chi, {0, p});
  SumInstance inst{rf("x"), RationalFunction{}, chi, p, {0, p}};
  CHECK(std::abs(brute_interval_mean(inst)) <= cb.value + 1e-9);

  // Random moduli: brute force below the bound.
  for (int t = 0; t < 10; ++t) {
    i64 q = std::vector<i64>{10007L * 3, 255255L, 29L * 31 * 37 * 41}[rng.below(3)];
    auto ch = DirichletCharacter::random_any(q, rng);
    if (ch.is_principal()) continue;
    i64 N = rng.range(q / 10, q);
    Interval I{rng.range(-500, 500), N};
    auto bound = nonprincipal_char_sum_bound(ch, I);
    SumInstance si{rf("x"), RationalFunction{}, ch, q, I};
    CHECK(std::abs(brute_interval_mean(si)) <= bound.value + 1e-9);
  }
  CHECK_THROWS_AS(nonprincipal_char_sum_bound(DirichletCharacter::principal(15), {0, 10}),
                  Error);
}

TEST_CASE("L-value partial sums") {
  Rng rng(5);
  auto quad = DirichletCharacter::from_exponents(101, {{101, 50}});
  auto rep = l_value_partial(quad, 0.0, {10, 100, 1000});
  CHECK(rep.partials.size() == 3);
  CHECK(rep.P1 == 101);
  CHECK(rep.P2 == 1);
  CHECK(rep.p1_is_prime);
  CHECK(rep.comparison == doctest::Approx(0.5 * std::log(101.0)));
  for (const auto& [x, v] : rep.partials) CHECK(std::isfinite(v));

  auto chi = DirichletCharacter::random_primitive(9 * 25, rng);
  auto rep2 = l_value_partial(chi, 0.5, {225});
  CHECK(rep2.P1 == 25);
  CHECK(rep2.P2 == 9);
  CHECK(!rep2.p1_is_prime);
}

TEST_CASE("sharpness demo of the conductor-limited bound") {
  // g = x^D with a tiny interval relative to q: the sum tracks
  // (N/q') sum_{a mod q'} psi(F(a)) because e(g(n)/q) stays near 1.
  Rng rng(6);
  i64 qp = 5;
  i64 r = 10007;
  i64 q = qp * r;
  auto psi = DirichletCharacter::from_exponents(qp, {{qp, 1}});
  auto chi = DirichletCharacter::from_exponents(q, {{qp, 1}, {r, 0}});
  RationalFunction F = rf("x^2+x");
  i64 N = static_cast<i64>(std::pow(static_cast<double>(q), 0.35));
  SumInstance inst{F, rf("x^2"), chi, q, {0, N}};
  Complex observed = brute_interval_mean(inst) * static_cast<double>(N);

  Complex complete{0, 0};
  for (i64 a = 0; a < qp; ++a) complete += psi.eval_at_ratfun(F, a).to_complex();
  double predicted = std::abs(complete) * static_cast<double>(N) / qp;
  REQUIRE(predicted > 1.0);
  double ratio = std::abs(observed) / predicted;
  CHECK(ratio > 0.4);
  CHECK(ratio < 2.5);
}

TEST_CASE("eta nominal") {
  double eta = eta_nominal(2, rf("x"), rf("x^2"), 0.1);
  // D = 2^{k+1}(deg f + deg g) = 8*3 = 24, eta = 0.1 / (2^5 * 24).
  CHECK(eta == doctest::Approx(0.1 / (32.0 * 24.0)));
}
