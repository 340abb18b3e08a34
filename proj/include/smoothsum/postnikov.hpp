#pragma once

#include "smoothsum/complete_sums.hpp"

namespace smoothsum {

// Minimal truncation orders: p^{j l}/j = 0 mod p^m for all j > J, and
// p^{i l}/i! = 0 mod p^m for all i > I.
struct TruncationIndices {
  int I;
  int J;
};
TruncationIndices truncation_indices(i64 p, int l, int m);

// The character constant: chi(truncated e^{p^l}) = e(C / p^{m-l}), with
// C reduced to [1, p^{m-1}] and coprime to p for primitive chi.
struct PostnikovData {
  i64 C;
  int I_index;
  int J_index;
};
PostnikovData postnikov_constant(const DirichletCharacter& chi_primitive, int l);

// C for any character mod p^m (m >= 2): primitive by the direct
// construction, induced characters by scaling, principal gets p^{m-1}.
i64 postnikov_C(const DirichletCharacter& chi);

// Checks the term identity at n = a + b p^l:
// chi(f(n)) e(g(n)/p^m) = chi(f(a)) e(g(a)/p^m) e(sum_j (b p^l)^j/j! h^{(j-1)}(a) / p^m).
bool expansion_check(const RationalFunction& f, const RationalFunction& g,
                     const DirichletCharacter& chi, i64 a, i64 b, int l,
                     double tol = 1e-9);

// Exact root-of-unity identity chi(1 + r p^l) = e(-C L(1+r p^l)/p^m).
bool log_expansion_check(const DirichletCharacter& chi, i64 r, int l, double tol = 1e-9);

// h = g' + C f'/f = p^tau H with H nonzero mod p. degenerate marks the
// principal-with-constant-g case where tau is set to m.
struct TauH {
  RationalFunction h;
  i64 tau = 0;
  RationalFunction H;
  int D = 0;  // degree mod p of the numerator of H
  bool degenerate = false;
  i64 C = 0;
};
TauH tau_H(const RationalFunction& f, const RationalFunction& g,
           const DirichletCharacter& chi);

// Complete sum mod p^m rewritten as p^tau * sum over a mod p^l of
// chi(f(a)) e(g(a)/p^m) * (inner geometric sum in H(a)); requires
// m > l >= (m - tau)/2 and l <= m - tau.
Complex complete_sum_factorized(const RationalFunction& f, const RationalFunction& g,
                                const DirichletCharacter& chi, int l);

struct PrimePowerBound {
  double bound = 1.0;        // on |sum| / p^m
  bool vacuous = true;       // bound >= 1
  bool exact_zero = false;   // the sum is identically zero
  i64 tau = 0;
  int D = 0;
  // Simplified exponents when p > max(16, deg f, deg g), p coprime to
  // Delta(f)Delta(g): m/(4D') or l/(4D') with D' = 2(deg f + deg g).
  bool simplified_applicable = false;
  double simplified_bound = 1.0;
  bool simplified_excluded = false;  // l = 1 with r_chi | r_f
  std::string note;
};

// Certified bound on the normalized complete sum for one prime power; m = 1
// goes through the square-root bound, m >= 2 through the expansion.
PrimePowerBound bound_prime_power(const RationalFunction& f, const RationalFunction& g,
                                  const DirichletCharacter& chi);

// max over twists b mod p^e of the certified bound for (f, c g + b x).
double max_twist_bound(const RationalFunction& f, const RationalFunction& g,
                       const DirichletCharacter& chi, i64 c);

}  // namespace smoothsum
