#pragma once

#include <vector>

#include "smoothsum/modarith.hpp"
#include "smoothsum/ratfun.hpp"

namespace smoothsum {

// Exact root of unity e(num/den), or 0.
struct CharacterValue {
  bool zero = true;
  i64 num = 0;
  i64 den = 1;

  static CharacterValue zero_value() { return {}; }
  static CharacterValue one() { return {false, 0, 1}; }
  static CharacterValue root(i64 num, i64 den);
  CharacterValue times(const CharacterValue& o) const;
  CharacterValue conj() const;
  Complex to_complex() const { return zero ? Complex{0, 0} : unit_root(num, den); }
  bool operator==(const CharacterValue&) const = default;
};

// Character mod an odd q >= 1, stored per prime-power factor as an exponent
// against the fixed primitive root of that factor.
class DirichletCharacter {
 public:
  struct Factor {
    PrimePower pp;
    i64 root;  // primitive_root(pp)
    i64 exponent;  // in [0, phi(pp))
  };

  DirichletCharacter() = default;  // principal mod 1

  static DirichletCharacter principal(i64 q);
  static DirichletCharacter from_exponents(i64 q, const std::vector<std::pair<i64, i64>>& pp_exponents);
  static DirichletCharacter random_primitive(i64 q, Rng& rng);
  static DirichletCharacter random_any(i64 q, Rng& rng);

  i64 modulus() const { return q_; }
  const std::vector<Factor>& factors() const { return factors_; }

  i64 order() const;  // r_chi
  i64 conductor() const;
  bool is_primitive() const { return conductor() == q_; }
  bool is_principal() const;

  DirichletCharacter power(i64 r) const;
  // Restriction to a unitary divisor d | q (gcd(d, q/d) = 1).
  DirichletCharacter component(i64 d) const;

  CharacterValue eval(i64 n) const;
  // chi(f(n)) = chi(f_+(n)) * conj(chi(f_-(n))).
  CharacterValue eval_at_ratfun(const RationalFunction& f, i64 n) const;

  bool operator==(const DirichletCharacter&) const = default;

 private:
  i64 q_ = 1;
  std::vector<Factor> factors_;
};

// chi_q = chi_Q * chi_r with chi_Q = chi_q^{b r} mod Q, chi_r = chi_q^{a Q}
// mod r = q/Q, where a Q + b r = 1.
struct TwistDecomposition {
  DirichletCharacter chi_Q;
  DirichletCharacter chi_r;
  i64 a;
  i64 b;
};
TwistDecomposition twist_decompose(const DirichletCharacter& chi, i64 Q);

// Conductor of chi^{r_f}; 1 for constant f (principal power by convention).
i64 conductor_of_power_for_f(const DirichletCharacter& chi, const RationalFunction& f);

// Discrete-log table for one prime power: dlog[n] for units, -1 otherwise.
std::vector<i64> dlog_table(const PrimePower& pp, i64 root);

}  // namespace smoothsum
