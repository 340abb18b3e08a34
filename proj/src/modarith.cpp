#include "smoothsum/modarith.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace smoothsum {

const char* err_name(Err e) {
  switch (e) {
    case Err::EvenModulus: return "EvenModulus";
    case Err::Overflow: return "Overflow";
    case Err::NotAUnit: return "NotAUnit";
    case Err::NotCoprime: return "NotCoprime";
    case Err::SyntaxError: return "SyntaxError";
    case Err::ZeroDenominator: return "ZeroDenominator";
    case Err::BadReduction: return "BadReduction";
    case Err::ZeroFunction: return "ZeroFunction";
    case Err::ZeroModP: return "ZeroModP";
    case Err::NotCoprimeSplit: return "NotCoprimeSplit";
    case Err::RangeError: return "RangeError";
    case Err::HypothesisViolation: return "HypothesisViolation";
    case Err::DegenerateBoth: return "DegenerateBoth";
    case Err::NotSmooth: return "NotSmooth";
    case Err::SharedFactorWithM: return "SharedFactorWithM";
    case Err::PrincipalCharacter: return "PrincipalCharacter";
    case Err::DegreeTooSmall: return "DegreeTooSmall";
    case Err::UndefinedAt: return "UndefinedAt";
  }
  return "Unknown";
}

i64 inv_mod(i64 a, i64 m) {
  i64 x, y;
  i64 g = ext_gcd(floor_mod(a, m), m, x, y);
  if (g != 1) fail(Err::NotAUnit, "no inverse mod " + std::to_string(m));
  return floor_mod(x, m);
}

Complex unit_root(i64 num, i64 den) {
  double angle = 2.0 * M_PI * static_cast<double>(floor_mod(num, den)) /
                 static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  i64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    i64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

i64 vp_factorial(i64 n, i64 p) {
  i64 v = 0;
  while (n) {
    n /= p;
    v += n;
  }
  return v;
}

i64 vp_int(const Int& n, i64 p) {
  Int a = abs(n);
  i64 v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

std::vector<i64> primes_below(i64 bound) {
  std::vector<i64> out;
  if (bound <= 2) return out;
  std::vector<bool> sieve(static_cast<size_t>(bound), true);
  for (i64 i = 2; i < bound; ++i) {
    if (!sieve[static_cast<size_t>(i)]) continue;
    out.push_back(i);
    for (i64 j = i * i; j < bound; j += i) sieve[static_cast<size_t>(j)] = false;
  }
  return out;
}

std::vector<PrimePower> factorize(i64 q) {
  if (q < 1) fail(Err::RangeError, "modulus must be positive");
  if (q > kModulusLimit) fail(Err::Overflow, "modulus exceeds configured limit");
  if (q % 2 == 0) fail(Err::EvenModulus, "even moduli are out of scope");
  std::vector<PrimePower> out;
  i64 n = q;
  for (i64 d = 3; d * d <= n; d += 2) {
    if (n % d) continue;
    PrimePower pp{d, 0, 1};
    while (n % d == 0) {
      n /= d;
      ++pp.m;
      pp.value *= d;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back(PrimePower{n, 1, n});
  return out;
}

Valuation vp(const Rat& r, i64 p) {
  if (r == 0) return Valuation::infinite();
  return Valuation::finite(vp_int(rat_num(r), p) - vp_int(rat_den(r), p));
}

namespace {

std::vector<i64> prime_divisors(i64 n) {
  std::vector<i64> out;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

i64 order_is_full(i64 g, const PrimePower& pp, const std::vector<i64>& phi_primes) {
  i64 phi = pp.phi();
  for (i64 ell : phi_primes) {
    if (pow_mod(g, phi / ell, pp.value) == 1) return false;
  }
  return true;
}

// Baby-step/giant-step in the cyclic group generated by base of order n mod md.
i64 bsgs(i64 base, i64 target, i64 n, i64 md) {
  i64 s = static_cast<i64>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::map<i64, i64> baby;
  i64 cur = 1;
  for (i64 j = 0; j < s; ++j) {
    baby.emplace(cur, j);
    cur = mul_mod(cur, base, md);
  }
  i64 giant = inv_mod(cur, md);  // base^{-s}
  i64 y = floor_mod(target, md);
  for (i64 i = 0; i <= n / s + 1; ++i) {
    auto it = baby.find(y);
    if (it != baby.end()) {
      i64 e = i * s + it->second;
      if (e < n) return e;
    }
    y = mul_mod(y, giant, md);
  }
  fail(Err::NotAUnit, "discrete log not found");
}

}  // namespace

i64 primitive_root(const PrimePower& pp) {
  auto phi_primes = prime_divisors(pp.phi());
  for (i64 g = 2; g < pp.value; ++g) {
    if (g % pp.p == 0) continue;
    if (order_is_full(g, pp, phi_primes)) return g;
  }
  fail(Err::RangeError, "no primitive root found");
}

i64 discrete_log(i64 g, i64 a, const PrimePower& pp) {
  i64 md = pp.value;
  a = floor_mod(a, md);
  if (a % pp.p == 0) fail(Err::NotAUnit, "argument shares a factor with the modulus");
  i64 n = pp.phi();
  // Pohlig-Hellman across the prime powers of the group order.
  i64 result = 0, modulus = 1;
  i64 rest = n;
  for (i64 ell : prime_divisors(n)) {
    i64 le = 1;
    while (rest % ell == 0) {
      rest /= ell;
      le *= ell;
    }
    // Solve g^x = a in the subgroup of order le.
    i64 gi = pow_mod(g, n / le, md);
    i64 ai = pow_mod(a, n / le, md);
    i64 x = 0, unit = 1;  // unit = ell^j
    i64 gamma = pow_mod(gi, le / ell, md);  // order ell
    for (i64 le_left = le; le_left > 1; le_left /= ell) {
      i64 h = pow_mod(mul_mod(ai, inv_mod(pow_mod(gi, x, md), md), md),
                      le_left / ell, md);
      i64 d = bsgs(gamma, h, ell, md);
      x += d * unit;
      unit *= ell;
    }
    // CRT combine x mod le into result mod modulus.
    i64 u, v;
    ext_gcd(modulus, le, u, v);
    __int128 diff = x - result;
    i64 t = static_cast<i64>(floor_mod(static_cast<i64>(diff % le), le));
    i64 step = mul_mod(t, floor_mod(u, le), le);
    result = result + modulus * step;
    modulus *= le;
    result = floor_mod(result, modulus);
  }
  return result;
}

std::pair<i64, i64> bezout_split(i64 q, i64 Q, i64 r) {
  if (Q * r != q) fail(Err::NotCoprime, "split does not multiply back to q");
  i64 a, b;
  i64 g = ext_gcd(Q, r, a, b);
  if (g != 1) fail(Err::NotCoprime, "split factors share a divisor");
  return {a, b};
}

i64 euler_phi(i64 q) {
  i64 phi = 1;
  for (const auto& pp : factorize(q)) phi *= pp.phi();
  return phi;
}

Int coprime_part(Int a, Int m) {
  Int g = gcd(a, m);
  while (g > 1) {
    while (a % g == 0) a /= g;
    g = gcd(a, m);
  }
  return a;
}

}  // namespace smoothsum
