#pragma once

#include <string>
#include <utility>
#include <vector>

#include "smoothsum/modarith.hpp"
#include "smoothsum/poly.hpp"

namespace smoothsum {

// Ratio of coprime integer-coefficient polynomials in canonical form:
// gcd(num, den) = 1 over Q, lc(den) > 0, gcd(content(num), content(den)) = 1.
struct RationalFunction {
  IPoly num;
  IPoly den{Int(1)};

  bool is_zero() const { return num.empty(); }
  bool is_constant() const { return degree(num) <= 0 && degree(den) <= 0; }
  bool is_polynomial() const { return degree(den) == 0; }
  bool operator==(const RationalFunction&) const = default;
};

RationalFunction make_ratfun(const QPoly& num, const QPoly& den);
RationalFunction ratfun_from_int(const Int& c);

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_sub(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_div(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_neg(const RationalFunction& a);
RationalFunction rf_pow(const RationalFunction& a, i64 e);
RationalFunction rf_scale(const RationalFunction& a, const Rat& c);

// deg h = max(deg num, deg den).
int rf_deg(const RationalFunction& h);

RationalFunction rf_derivative(const RationalFunction& h);
RationalFunction rf_log_derivative(const RationalFunction& h);  // h'/h, h != 0

// h(x + a), exact.
RationalFunction rf_shift(const RationalFunction& h, const Rat& a);

// Value h(n) as an exact rational; UndefinedAt on a pole.
Rat rf_eval(const RationalFunction& h, const Rat& x);

// Expression parser over the grammar: integers, rationals a/b, variable x,
// operators + - * / ^ (integer exponents, possibly negative), parentheses,
// unary minus; '^' binds tighter than '*' and '/'.
RationalFunction parse_ratfun(const std::string& expr);
std::string to_string(const RationalFunction& h);

// Largest r with f = c * F(x)^r; all = true encodes the convention for
// constant f (every r works, chi^{r_f} is taken principal downstream).
struct Rf {
  bool all = false;
  i64 r = 1;
};
Rf r_f(const RationalFunction& f);

// Shift tuple for the difference operators: offset plus sign +1/-1.
struct SignedShift {
  Rat offset;
  int sign;
};

// prod_j f(x + s_j)^{sigma_j} and sum_j sigma_j * g(x + s_j).
RationalFunction rf_pow_product(const RationalFunction& f,
                                const std::vector<SignedShift>& shifts);
RationalFunction rf_signed_sum(const RationalFunction& g,
                               const std::vector<SignedShift>& shifts);

// Discriminant-support quantities. Delta of a constant is 1 by convention.
Int delta_f(const RationalFunction& f);
Int delta_fgk(const RationalFunction& f, const RationalFunction& g, i64 k);

// h = p^tau * H with H of Gauss valuation 0 at p (contents of num and den
// both coprime to p).
struct GaussVal {
  i64 tau;
  RationalFunction H;
};
GaussVal gauss_val(const RationalFunction& h, i64 p);

// Gauss valuation as a Valuation (infinite for the zero function).
Valuation vp_ratfun(const RationalFunction& h, i64 p);

}  // namespace smoothsum
