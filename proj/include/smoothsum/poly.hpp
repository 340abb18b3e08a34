#pragma once

#include <vector>

#include "smoothsum/errors.hpp"
#include "smoothsum/numeric.hpp"

namespace smoothsum {

// Dense univariate polynomials, ascending degree, no trailing zeros.
using IPoly = std::vector<Int>;
using QPoly = std::vector<Rat>;

template <typename P>
void trim(P& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

template <typename P>
int degree(const P& a) {
  return static_cast<int>(a.size()) - 1;  // zero polynomial -> -1
}

template <typename P>
bool is_zero(const P& a) {
  return a.empty();
}

QPoly to_qpoly(const IPoly& a);

QPoly q_add(const QPoly& a, const QPoly& b);
QPoly q_sub(const QPoly& a, const QPoly& b);
QPoly q_mul(const QPoly& a, const QPoly& b);
QPoly q_scale(const QPoly& a, const Rat& c);
QPoly q_derivative(const QPoly& a);
Rat q_eval(const QPoly& a, const Rat& x);
// Quotient and remainder, b != 0.
std::pair<QPoly, QPoly> q_divrem(const QPoly& a, const QPoly& b);
QPoly q_gcd_monic(QPoly a, QPoly b);  // monic gcd; gcd(0,0) = 0
QPoly q_monic(QPoly a);
QPoly q_shift(const QPoly& a, const Rat& c);  // a(x + c)
QPoly q_pow(const QPoly& a, i64 e);

IPoly i_mul(const IPoly& a, const IPoly& b);
IPoly i_add(const IPoly& a, const IPoly& b);
IPoly i_scale(const IPoly& a, const Int& c);
Int i_eval(const IPoly& a, const Int& x);
i64 i_eval_mod(const IPoly& a, i64 x, i64 md);
Int i_content(const IPoly& a);  // >= 0; content of zero polynomial is 0

// Splits a into c * prim with prim primitive and lc(prim) > 0.
std::pair<Int, IPoly> i_primitive(const IPoly& a);

// Clears denominators: a = (num/den) * prim, prim primitive integer poly
// with positive leading coefficient, gcd(num, den) = 1, den > 0.
struct ScaledIPoly {
  Int num;
  Int den;
  IPoly poly;
};
ScaledIPoly q_clear_denominators(const QPoly& a);

// Yun squarefree decomposition over Q of a nonzero polynomial:
// a = lc * prod_i out[i].factor^(out[i].multiplicity), factors monic,
// squarefree, pairwise coprime, nonconstant, multiplicities increasing.
struct SquarefreePart {
  QPoly factor;
  i64 multiplicity;
};
std::vector<SquarefreePart> q_squarefree_decomposition(const QPoly& a);

// Resultant of a and b over Q (0 if either is zero and the other nonconstant;
// standard conventions for constants).
Rat q_resultant(QPoly a, QPoly b);

// disc(h) = (-1)^{d(d-1)/2} Res(h, h') / lc(h), d = deg h >= 1.
Rat q_discriminant(const QPoly& a);

}  // namespace smoothsum
