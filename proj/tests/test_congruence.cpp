#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smoothsum/congruence.hpp"

using namespace smoothsum;

namespace {

IPoly extremal_family(int d, i64 p, int r) {
  // prod_{i=1}^{d} (x - i p^r)
  i64 pr = 1;
  for (int i = 0; i < r; ++i) pr *= p;
  IPoly out{1};
  for (int i = 1; i <= d; ++i) out = i_mul(out, IPoly{-Int(i) * pr, 1});
  return out;
}

IPoly random_poly(Rng& rng, int dmax, i64 cmax) {
  int d = static_cast<int>(rng.range(1, dmax));
  IPoly out(static_cast<size_t>(d) + 1);
  for (auto& c : out) c = rng.range(-cmax, cmax);
  if (out.back() == 0) out.back() = 1;
  return out;
}

}  // namespace

TEST_CASE("root counting basics") {
  CHECK(count_roots_bruteforce(IPoly{0, 1}, 3, 2).count == 1);
  CHECK(count_roots_lifting(IPoly{0, 1}, 3, 2).count == 1);

  // (x-5)(x-10) mod 5^3 has 10 roots.
  IPoly h = i_mul(IPoly{-5, 1}, IPoly{-10, 1});
  CHECK(count_roots_bruteforce(h, 5, 3).count == 10);
  CHECK(count_roots_lifting(h, 5, 3).count == 10);

  CHECK(count_roots_bruteforce(IPoly{1, 0, 1}, 3, 1).count == 0);

  // x^2 mod 7^3: multiples of 49.
  CHECK(count_roots_lifting(IPoly{0, 0, 1}, 7, 3).count == 7);
  CHECK(count_roots_bruteforce(IPoly{0, 0, 1}, 7, 3).count == 7);

  CHECK_THROWS_AS(count_roots_lifting(IPoly{3, 9}, 3, 2), Error);
}

TEST_CASE("extremal family achieves the bound") {
  struct Case {
    int d;
    i64 p;
    int r;
  };
  for (Case c : {Case{2, 5, 1}, Case{3, 7, 1}, Case{2, 5, 2}}) {
    int m = c.d * c.r + 1;
    IPoly h = extremal_family(c.d, c.p, c.r);
    auto lift = count_roots_lifting(h, c.p, m);
    CHECK(lift.count == lift.bound);
    CHECK(lift.count == root_count_bound(c.d, c.p, m));
    auto brute = count_roots_bruteforce(h, c.p, m);
    CHECK(brute.count == lift.count);
  }
}

TEST_CASE("lifting equals brute force on random polynomials") {
  Rng rng(101);
  const std::vector<i64> primes{3, 5, 7, 11, 13};
  int done = 0;
  while (done < 300) {
    i64 p = primes[rng.below(primes.size())];
    int m = 1;
    i64 pm = p;
    int mmax = 1;
    while (pm * p <= 100000) {
      pm *= p;
      ++mmax;
    }
    m = static_cast<int>(rng.range(1, mmax));
    IPoly h = random_poly(rng, 5, 20);
    RootCount lift, brute;
    try {
      lift = count_roots_lifting(h, p, m);
      brute = count_roots_bruteforce(h, p, m);
    } catch (const Error&) {
      continue;  // h vanished mod p
    }
    CHECK(lift.count == brute.count);
    CHECK(lift.count <= lift.bound);
    ++done;
  }
}

TEST_CASE("denominator-filtered counting") {
  RationalFunction h1 = parse_ratfun("x/(x-1)");
  CHECK(count_roots_with_denominator(h1, 5, 2).count == 1);

  RationalFunction h2 = parse_ratfun("(x-5)*(x-10)/x");
  CHECK(count_roots_with_denominator(h2, 5, 3).count == 0);

  Rng rng(202);
  int done = 0;
  while (done < 60) {
    i64 p = std::vector<i64>{3, 5, 7}[rng.below(3)];
    int m = static_cast<int>(rng.range(1, 4));
    IPoly num = random_poly(rng, 4, 10);
    IPoly den = random_poly(rng, 2, 6);
    RationalFunction h = make_ratfun(to_qpoly(num), to_qpoly(den));
    if (h.is_zero() || degree(h.den) < 1) continue;
    RootCount got;
    try {
      got = count_roots_with_denominator(h, p, m);
    } catch (const Error&) {
      continue;
    }
    // Brute oracle directly on both conditions.
    i64 pm = 1;
    for (int i = 0; i < m; ++i) pm *= p;
    i64 expect = 0;
    for (i64 a = 0; a < pm; ++a) {
      if (i_eval_mod(h.num, a, pm) != 0) continue;
      if (i_eval_mod(h.den, a, p) % p == 0) continue;
      ++expect;
    }
    CHECK(got.count == expect);
    CHECK(got.count <= std::max<i64>(got.bound, 0));
    ++done;
  }
}
