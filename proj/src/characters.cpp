#include "smoothsum/characters.hpp"

#include <algorithm>

namespace smoothsum {

CharacterValue CharacterValue::root(i64 num, i64 den) {
  num = floor_mod(num, den);
  i64 g = gcd_i64(num, den);
  if (g == 0) g = 1;
  return {false, num / g, den / g};
}

CharacterValue CharacterValue::times(const CharacterValue& o) const {
  if (zero || o.zero) return zero_value();
  i64 g = gcd_i64(den, o.den);
  i64 l = den / g * o.den;
  return root(num * (l / den) + o.num * (l / o.den), l);
}

CharacterValue CharacterValue::conj() const {
  if (zero) return zero_value();
  return root(-num, den);
}

DirichletCharacter DirichletCharacter::principal(i64 q) {
  DirichletCharacter chi;
  chi.q_ = q;
  for (const auto& pp : factorize(q))
    chi.factors_.push_back({pp, primitive_root(pp), 0});
  return chi;
}

DirichletCharacter DirichletCharacter::from_exponents(
    i64 q, const std::vector<std::pair<i64, i64>>& pp_exponents) {
  DirichletCharacter chi;
  chi.q_ = q;
  auto pps = factorize(q);
  if (pps.size() != pp_exponents.size())
    fail(Err::RangeError, "exponent list does not match the factorization");
  for (size_t i = 0; i < pps.size(); ++i) {
    if (pp_exponents[i].first != pps[i].value)
      fail(Err::RangeError, "prime powers out of order in exponent list");
    i64 e = floor_mod(pp_exponents[i].second, pps[i].phi());
    chi.factors_.push_back({pps[i], primitive_root(pps[i]), e});
  }
  return chi;
}

DirichletCharacter DirichletCharacter::random_primitive(i64 q, Rng& rng) {
  DirichletCharacter chi;
  chi.q_ = q;
  for (const auto& pp : factorize(q)) {
    i64 phi = pp.phi();
    i64 e;
    // Primitive at p^m: exponent not divisible by p (m >= 2), nonzero (m = 1).
    do {
      e = rng.range(1, phi - 1);
    } while (pp.m >= 2 && e % pp.p == 0);
    chi.factors_.push_back({pp, primitive_root(pp), e});
  }
  return chi;
}

DirichletCharacter DirichletCharacter::random_any(i64 q, Rng& rng) {
  DirichletCharacter chi;
  chi.q_ = q;
  for (const auto& pp : factorize(q)) {
    i64 e = rng.range(0, pp.phi() - 1);
    chi.factors_.push_back({pp, primitive_root(pp), e});
  }
  return chi;
}

i64 DirichletCharacter::order() const {
  i64 r = 1;
  for (const auto& f : factors_) {
    i64 phi = f.pp.phi();
    i64 o = phi / gcd_i64(f.exponent, phi);
    r = r / gcd_i64(r, o) * o;
  }
  return r;
}

namespace {

// Conductor exponent of one factor: least l with chi trivial on units
// congruent to 1 mod p^l, i.e. p^{m-l} | exponent.
int factor_conductor_exponent(const DirichletCharacter::Factor& f) {
  if (f.exponent == 0) return 0;
  int l = f.pp.m - static_cast<int>(std::min<i64>(vp_int(Int(f.exponent), f.pp.p),
                                                  f.pp.m - 1));
  return l;
}

}  // namespace

i64 DirichletCharacter::conductor() const {
  i64 c = 1;
  for (const auto& f : factors_) {
    int l = factor_conductor_exponent(f);
    for (int i = 0; i < l; ++i) c *= f.pp.p;
  }
  return c;
}

bool DirichletCharacter::is_principal() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.exponent == 0; });
}

DirichletCharacter DirichletCharacter::power(i64 r) const {
  DirichletCharacter chi(*this);
  for (auto& f : chi.factors_) {
    i64 phi = f.pp.phi();
    i64 rr = floor_mod(r, phi);
    f.exponent = mul_mod(f.exponent, rr, phi);
  }
  return chi;
}

DirichletCharacter DirichletCharacter::component(i64 d) const {
  if (d <= 0 || q_ % d != 0 || gcd_i64(d, q_ / d) != 1)
    fail(Err::NotCoprimeSplit, "component divisor is not unitary");
  DirichletCharacter chi;
  chi.q_ = d;
  for (const auto& f : factors_)
    if (d % f.pp.value == 0) chi.factors_.push_back(f);
  return chi;
}

CharacterValue DirichletCharacter::eval(i64 n) const {
  CharacterValue v = CharacterValue::one();
  for (const auto& f : factors_) {
    i64 r = floor_mod(n, f.pp.value);
    if (r % f.pp.p == 0) return CharacterValue::zero_value();
    if (f.exponent == 0) continue;
    i64 phi = f.pp.phi();
    i64 d = discrete_log(f.root, r, f.pp);
    v = v.times(CharacterValue::root(mul_mod(f.exponent, d, phi), phi));
  }
  return v;
}

CharacterValue DirichletCharacter::eval_at_ratfun(const RationalFunction& f,
                                                  i64 n) const {
  CharacterValue v = CharacterValue::one();
  for (const auto& fac : factors_) {
    i64 md = fac.pp.value;
    i64 np = i_eval_mod(f.num, n, md);
    i64 dp = i_eval_mod(f.den, n, md);
    if (np % fac.pp.p == 0 || dp % fac.pp.p == 0)
      return CharacterValue::zero_value();
    if (fac.exponent == 0) continue;
    i64 phi = fac.pp.phi();
    i64 d = discrete_log(fac.root, np, fac.pp) - discrete_log(fac.root, dp, fac.pp);
    v = v.times(CharacterValue::root(mul_mod(fac.exponent, floor_mod(d, phi), phi), phi));
  }
  return v;
}

TwistDecomposition twist_decompose(const DirichletCharacter& chi, i64 Q) {
  i64 q = chi.modulus();
  if (Q <= 0 || q % Q != 0 || gcd_i64(Q, q / Q) != 1)
    fail(Err::NotCoprimeSplit, "Q must be a unitary divisor of q");
  i64 r = q / Q;
  auto [a, b] = bezout_split(q, Q, r);
  TwistDecomposition out;
  out.a = a;
  out.b = b;
  // The factor characters are the stored components. (A single power of chi
  // cannot isolate a component when the component orders share a factor, so
  // the exponent form of this split only holds for coprime orders.)
  out.chi_Q = chi.component(Q);
  out.chi_r = chi.component(r);
  return out;
}

i64 conductor_of_power_for_f(const DirichletCharacter& chi,
                             const RationalFunction& f) {
  Rf rf = r_f(f);
  if (rf.all) return 1;
  return chi.power(rf.r).conductor();
}

std::vector<i64> dlog_table(const PrimePower& pp, i64 root) {
  std::vector<i64> table(static_cast<size_t>(pp.value), -1);
  i64 phi = pp.phi();
  i64 cur = 1;
  for (i64 e = 0; e < phi; ++e) {
    table[static_cast<size_t>(cur)] = e;
    cur = mul_mod(cur, root, pp.value);
  }
  return table;
}

}  // namespace smoothsum
