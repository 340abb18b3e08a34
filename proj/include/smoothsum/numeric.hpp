#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <vector>

namespace smoothsum {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using i64 = std::int64_t;
using u64 = std::uint64_t;
using Complex = std::complex<double>;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline i64 floor_mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

inline i64 mul_mod(i64 a, i64 b, i64 m) {
  return static_cast<i64>(static_cast<__int128>(a) * b % m);
}

inline i64 pow_mod(i64 a, i64 e, i64 m) {
  a = floor_mod(a, m);
  i64 r = 1 % m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

inline i64 gcd_i64(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// g = ax + by with g = gcd(a, b) >= 0.
inline i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  i64 x1, y1;
  i64 g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

i64 inv_mod(i64 a, i64 m);  // throws NotAUnit when gcd(a, m) != 1

// e(num/den) = exp(2*pi*i*num/den).
Complex unit_root(i64 num, i64 den);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(i64 n);

// Exponent of p in n! (Legendre).
i64 vp_factorial(i64 n, i64 p);

i64 vp_int(const Int& n, i64 p);  // n != 0

std::vector<i64> primes_below(i64 bound);

// Small deterministic RNG. Sequences depend only on the seed, never on the
// platform or standard library, so reports reproduce bit-for-bit.
class Rng {
 public:
  explicit Rng(u64 seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  u64 next() {
    u64 z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).
  u64 below(u64 n) {
    u64 x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    u64 lo = static_cast<u64>(m);
    if (lo < n) {
      u64 t = -n % n;
      while (lo < t) {
        x = next();
        m = static_cast<__uint128_t>(x) * n;
        lo = static_cast<u64>(m);
      }
    }
    return static_cast<u64>(m >> 64);
  }

  // Uniform in [lo, hi] inclusive.
  i64 range(i64 lo, i64 hi) {
    return lo + static_cast<i64>(below(static_cast<u64>(hi - lo + 1)));
  }

  double real01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Independent stream for a (seed, index) pair.
  static Rng fork(u64 seed, u64 index) {
    Rng r(seed ^ (0xd1342543de82ef95ULL * (index + 1)));
    r.next();
    return r;
  }

 private:
  u64 state_;
};

}  // namespace smoothsum
