#pragma once

#include <vector>

#include "smoothsum/characters.hpp"

namespace smoothsum {

// Interval (M, M+N].
struct Interval {
  i64 M = 0;
  i64 N = 1;
};

// 1-bounded q-periodic function stored as a product of per-component value
// tables over pairwise coprime moduli. Multiplicative across any unitary
// split of q by construction.
class PeriodicFn {
 public:
  struct Component {
    i64 modulus;
    std::vector<Complex> table;
  };

  PeriodicFn() = default;  // constant 1 of period 1

  static PeriodicFn from_components(i64 q, std::vector<Component> comps);
  static PeriodicFn constant_one(i64 q);

  i64 period() const { return q_; }
  const std::vector<Component>& components() const { return components_; }

  Complex eval(i64 n) const {
    Complex v{1.0, 0.0};
    for (const auto& c : components_) {
      v *= c.table[static_cast<size_t>(floor_mod(n, c.modulus))];
      if (v == Complex{0.0, 0.0}) return v;
    }
    return v;
  }

  // Sub-product over components dividing the unitary divisor d of q.
  PeriodicFn restrict_to(i64 d) const;

 private:
  i64 q_ = 1;
  std::vector<Component> components_;
};

// a_q(n) = chi(f(n)) e(g(n)/q), assembled per prime-power factor of q with
// the CRT twist coefficients. A term is 0 whenever any component's character
// factor vanishes or the denominator of g vanishes mod that prime.
PeriodicFn make_char_exp_fn(const RationalFunction& f, const RationalFunction& g,
                            const DirichletCharacter& chi, i64 q);

// Random unimodular values per prime-power component (test adversary).
PeriodicFn make_noise_fn(i64 q, Rng& rng);

Complex interval_mean(const PeriodicFn& a, const Interval& I);

}  // namespace smoothsum
