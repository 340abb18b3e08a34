#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "smoothsum/errors.hpp"
#include "smoothsum/numeric.hpp"

namespace smoothsum {

// Odd prime power p^m.
struct PrimePower {
  i64 p = 0;
  int m = 0;
  i64 value = 0;

  i64 phi() const { return value / p * (p - 1); }
  bool operator==(const PrimePower&) const = default;
};

// p-adic valuation; v = +infinity exactly for the value 0.
struct Valuation {
  bool inf = false;
  i64 v = 0;

  static Valuation infinite() { return {true, 0}; }
  static Valuation finite(i64 v) { return {false, v}; }
  bool operator==(const Valuation&) const = default;
};

inline Valuation val_min(Valuation a, Valuation b) {
  if (a.inf) return b;
  if (b.inf) return a;
  return Valuation::finite(a.v < b.v ? a.v : b.v);
}

// Configured ceiling for moduli throughout the library.
inline constexpr i64 kModulusLimit = 10'000'000;

// Trial-division factorization of an odd q >= 1, primes strictly increasing.
std::vector<PrimePower> factorize(i64 q);

// v_p of a rational number, with v_p(0) = +infinity.
Valuation vp(const Rat& r, i64 p);

// Smallest generator of the full multiplicative group mod p^m (p odd).
i64 primitive_root(const PrimePower& pp);

// e with g^e = a mod p^m, 0 <= e < phi(p^m). Pohlig-Hellman over the factors
// of the group order with baby-step/giant-step per prime.
i64 discrete_log(i64 g, i64 a, const PrimePower& pp);

// For q = Q*r with gcd(Q, r) = 1 returns (a, b) with a*Q + b*r = 1, so that
// e(m/q) = e(m*a/r) * e(m*b/Q) for every integer m.
std::pair<i64, i64> bezout_split(i64 q, i64 Q, i64 r);

i64 euler_phi(i64 q);

// Largest divisor of a coprime to m.
Int coprime_part(Int a, Int m);

}  // namespace smoothsum
