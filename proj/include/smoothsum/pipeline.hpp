#pragma once

#include "smoothsum/differencing.hpp"

namespace smoothsum {

// Membership in the relaxed smoothness class: at most one prime factor in
// (y, y^2] (to the first power), every other prime-power divisor <= y.
struct SmoothnessProfile {
  i64 q = 1;
  double y = 1;
  std::vector<PrimePower> factors_desc;
  bool in_N_y = false;
  std::optional<i64> exceptional_prime;
};
SmoothnessProfile smoothness_profile(i64 q, double y);

// Delta(f, g, ceil(2/delta)): the modulus whose prime support marks the
// excluded primes for the whole pipeline.
Int exceptional_modulus(const RationalFunction& f, const RationalFunction& g,
                        double delta);

struct ModulusSplit {
  i64 Q = 1;
  std::vector<i64> qs;
  std::string case_tag = "?";  // I, II, III
  double y = 1;
  int k = 0;
  i64 qprime = 1;
  bool k_window_ok = true;
};

// Splits q = Q * q_1 ... q_k per the smooth-modulus strategy; all structural
// invariants asserted, the k window additionally recorded.
ModulusSplit factor_modulus(i64 q, double delta, const RationalFunction& f,
                            const RationalFunction& g, const DirichletCharacter& chi);

// End-to-end certified bound on |sum_{n in I} chi(f(n)) e(g(n)/q)| / N.
CertifiedBound certified_incomplete_bound(const SumInstance& inst, double delta,
                                          double eps);

// Reference Weyl estimate for pure exponential sums; the implied constant is
// unknown, so this never feeds a certified trace.
struct WeylReference {
  double estimate_mean = 0;
  double observed_mean = 0;
  i64 block_length = 0;
  i64 Qprime = 0;
  double sigma = 0;
  bool certified = false;
};
WeylReference weyl_reference(const RationalFunction& g, i64 q, const Interval& I,
                             double eps);

// Bound for sum of chi(n) over an interval: divisor-unfolded pipeline bound
// against the explicit sqrt(Q) log Q inequality, whichever is smaller.
CertifiedBound nonprincipal_char_sum_bound(const DirichletCharacter& chi,
                                           const Interval& I, double delta = 1.0 / 3.0,
                                           double eps = 0.1);

// Partial sums of L(1 + it, chi) against the prime-power comparison line.
struct LValuePartial {
  std::vector<std::pair<i64, double>> partials;  // (cutoff X, |sum_{n<=X}|)
  double comparison;  // max(log P1 / 2, log P2) or log P1
  bool p1_is_prime;
  i64 P1, P2;
};
LValuePartial l_value_partial(const DirichletCharacter& chi, double t,
                              const std::vector<i64>& cutoffs);

// Primitive character inducing chi, defined mod conductor(chi).
DirichletCharacter primitive_inducing(const DirichletCharacter& chi);

double eta_nominal(int k, const RationalFunction& f, const RationalFunction& g,
                   double eps);

}  // namespace smoothsum
