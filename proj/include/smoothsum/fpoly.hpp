#pragma once

#include <vector>

#include "smoothsum/ratfun.hpp"

namespace smoothsum {

// Dense polynomials over the p-element field, coefficients in [0, p).
using FpPoly = std::vector<i64>;

FpPoly fp_reduce(const IPoly& a, i64 p);
FpPoly fp_add(const FpPoly& a, const FpPoly& b, i64 p);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b, i64 p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, i64 p);
FpPoly fp_scale(const FpPoly& a, i64 c, i64 p);
FpPoly fp_derivative(const FpPoly& a, i64 p);
std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& a, const FpPoly& b, i64 p);
FpPoly fp_gcd_monic(FpPoly a, FpPoly b, i64 p);
FpPoly fp_monic(FpPoly a, i64 p);
i64 fp_eval(const FpPoly& a, i64 x, i64 p);
bool fp_equal(const FpPoly& a, const FpPoly& b);

// Squarefree decomposition over F_p including p-th power parts:
// a = lc * prod factor^multiplicity, factors monic squarefree pairwise
// coprime nonconstant.
struct FpSquarefreePart {
  FpPoly factor;
  i64 multiplicity;
};
std::vector<FpSquarefreePart> fp_squarefree_decomposition(FpPoly a, i64 p);

// Reduction of a rational function mod p as a pair of coprime F_p
// polynomials. Requires Gauss valuation 0 (BadReduction otherwise).
struct FpRatFun {
  FpPoly num;
  FpPoly den;
};
FpRatFun reduce_ratfun_mod_p(const RationalFunction& h, i64 p);

// Degree of the reduction of h mod p, after cancellation.
int deg_p(const RationalFunction& h, i64 p);
// Degree of the reduced numerator after cancellation.
int deg_p_num(const RationalFunction& h, i64 p);
// Degree of the plain polynomial reduction mod p (no cancellation, content
// must be coprime to p).
int deg_p_poly(const IPoly& a, i64 p);

bool is_constant_mod_p(const RationalFunction& h, i64 p);

}  // namespace smoothsum
