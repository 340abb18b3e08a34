#pragma once

#include <optional>
#include <string>

#include "smoothsum/periodic.hpp"

namespace smoothsum {

// The unit of evaluation: sum over n in I of chi(f(n)) e(g(n)/q).
struct SumInstance {
  RationalFunction f;
  RationalFunction g;
  DirichletCharacter chi;
  i64 q = 1;
  Interval I;
};

// Complete sum over all residues mod q, evaluated per prime-power component
// and multiplied (CRT product form).
Complex brute_complete_sum(const SumInstance& inst);
// Single loop over n mod q; comparison oracle for the product form.
Complex brute_complete_sum_direct(const SumInstance& inst);
// Mean over the instance interval.
Complex brute_interval_mean(const SumInstance& inst);

struct DegeneracyReport {
  bool is_degenerate = false;
  i64 c1 = 0;  // representative constant with f = c1 * F^r mod p
  i64 c2 = 0;  // constant value of g mod p on its support
  i64 r = 1;
  std::string reason;
  bool verified = false;  // summand checked constant on its support
};

// Detects f = c1 F^{r_chi} and g = G^p - G + c2 mod p (the no-cancellation
// class for prime moduli).
DegeneracyReport degeneracy_mod_p(const RationalFunction& f,
                                  const RationalFunction& g,
                                  const DirichletCharacter& chi_mod_p);

struct WeilCheck {
  double abs_sum = 0;
  double bound = 0;
  bool exception = false;  // degenerate-type class, bound not asserted
  bool ok = false;
};

// |sum| <= (2 deg_p f + 2 deg_p g - 1) sqrt(p) outside the exception class.
WeilCheck weil_bound_check(const RationalFunction& f, const RationalFunction& g,
                           const DirichletCharacter& chi_mod_p);

// Is f congruent to a constant times an r-th power mod p?
bool rth_power_test_mod_p(const RationalFunction& f, i64 p, i64 r);

// g(n) constant mod p on its support (the exact predicate that makes the
// exponential factor constant).
std::optional<i64> constant_value_mod_p(const RationalFunction& g, i64 p);

}  // namespace smoothsum
