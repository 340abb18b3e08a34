#include "smoothsum/poly.hpp"

namespace smoothsum {

QPoly to_qpoly(const IPoly& a) {
  QPoly out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = Rat(a[i]);
  return out;
}

QPoly q_add(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

QPoly q_sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

QPoly q_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

QPoly q_scale(const QPoly& a, const Rat& c) {
  if (c == 0) return {};
  QPoly out(a);
  for (auto& x : out) x *= c;
  return out;
}

QPoly q_derivative(const QPoly& a) {
  if (a.size() <= 1) return {};
  QPoly out(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * Rat(Int(i));
  trim(out);
  return out;
}

Rat q_eval(const QPoly& a, const Rat& x) {
  Rat v = 0;
  for (size_t i = a.size(); i-- > 0;) v = v * x + a[i];
  return v;
}

std::pair<QPoly, QPoly> q_divrem(const QPoly& a, const QPoly& b) {
  if (b.empty()) fail(Err::ZeroDenominator, "polynomial division by zero");
  QPoly r(a);
  if (a.size() < b.size()) return {{}, r};
  QPoly q(a.size() - b.size() + 1, Rat(0));
  Rat inv_lc = Rat(1) / b.back();
  for (size_t k = q.size(); k-- > 0;) {
    size_t i = k + b.size() - 1;
    if (r[i] == 0) continue;
    Rat c = r[i] * inv_lc;
    q[k] = c;
    for (size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
  }
  trim(q);
  trim(r);
  return {q, r};
}

QPoly q_monic(QPoly a) {
  if (a.empty()) return a;
  Rat inv = Rat(1) / a.back();
  for (auto& c : a) c *= inv;
  return a;
}

QPoly q_gcd_monic(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly r = q_divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return q_monic(std::move(a));
}

QPoly q_shift(const QPoly& a, const Rat& c) {
  // Horner on a(x + c): iteratively fold coefficients.
  QPoly out;
  for (size_t i = a.size(); i-- > 0;) {
    // out = out * (x + c) + a[i]
    QPoly next(out.size() + 1, Rat(0));
    for (size_t j = 0; j < out.size(); ++j) {
      next[j + 1] += out[j];
      next[j] += out[j] * c;
    }
    if (next.empty()) next.assign(1, Rat(0));
    next[0] += a[i];
    trim(next);
    out = std::move(next);
  }
  return out;
}

QPoly q_pow(const QPoly& a, i64 e) {
  QPoly out{Rat(1)};
  QPoly base(a);
  while (e > 0) {
    if (e & 1) out = q_mul(out, base);
    base = q_mul(base, base);
    e >>= 1;
  }
  return out;
}

IPoly i_mul(const IPoly& a, const IPoly& b) {
  if (a.empty() || b.empty()) return {};
  IPoly out(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

IPoly i_add(const IPoly& a, const IPoly& b) {
  IPoly out(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

IPoly i_scale(const IPoly& a, const Int& c) {
  if (c == 0) return {};
  IPoly out(a);
  for (auto& x : out) x *= c;
  return out;
}

Int i_eval(const IPoly& a, const Int& x) {
  Int v = 0;
  for (size_t i = a.size(); i-- > 0;) v = v * x + a[i];
  return v;
}

i64 i_eval_mod(const IPoly& a, i64 x, i64 md) {
  i64 v = 0;
  x = floor_mod(x, md);
  for (size_t i = a.size(); i-- > 0;) {
    v = mul_mod(v, x, md);
    v = floor_mod(v + static_cast<i64>(a[i] % md), md);
  }
  return v;
}

Int i_content(const IPoly& a) {
  Int g = 0;
  for (const auto& c : a) g = gcd(g, c);
  return abs(g);
}

std::pair<Int, IPoly> i_primitive(const IPoly& a) {
  if (a.empty()) return {Int(0), {}};
  Int c = i_content(a);
  if (a.back() < 0) c = -c;
  IPoly prim(a.size());
  for (size_t i = 0; i < a.size(); ++i) prim[i] = a[i] / c;
  return {c, prim};
}

ScaledIPoly q_clear_denominators(const QPoly& a) {
  if (a.empty()) return {Int(0), Int(1), {}};
  Int lcm_den = 1;
  for (const auto& c : a) {
    Int d = rat_den(c);
    lcm_den = lcm_den / gcd(lcm_den, d) * d;
  }
  IPoly scaled(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    scaled[i] = rat_num(a[i]) * (lcm_den / rat_den(a[i]));
  auto [cont, prim] = i_primitive(scaled);
  Int g = gcd(abs(cont), lcm_den);
  Int num = cont / g, den = lcm_den / g;
  if (den < 0) {
    den = -den;
    num = -num;
  }
  return {num, den, prim};
}

std::vector<SquarefreePart> q_squarefree_decomposition(const QPoly& a) {
  if (a.empty()) fail(Err::ZeroFunction, "squarefree decomposition of zero");
  std::vector<SquarefreePart> out;
  QPoly f = q_monic(a);
  if (degree(f) < 1) return out;
  QPoly fp = q_derivative(f);
  QPoly g = q_gcd_monic(f, fp);
  QPoly w = q_divrem(f, g).first;
  QPoly y = q_divrem(fp, g).first;
  QPoly z = q_sub(y, q_derivative(w));
  i64 i = 1;
  while (degree(w) >= 1) {
    QPoly ai = q_gcd_monic(w, z);
    if (degree(ai) >= 1) out.push_back({ai, i});
    w = q_divrem(w, ai).first;
    y = q_divrem(z, ai).first;
    z = q_sub(y, q_derivative(w));
    ++i;
  }
  return out;
}

Rat q_resultant(QPoly a, QPoly b) {
  if (a.empty() || b.empty()) return Rat(0);
  if (degree(a) == 0) {
    Rat r = 1;
    for (int i = 0; i < degree(b); ++i) r *= a[0];
    return r;
  }
  if (degree(b) == 0) {
    Rat r = 1;
    for (int i = 0; i < degree(a); ++i) r *= b[0];
    return r;
  }
  // Res(a, b) = (-1)^{deg a * deg b} lc(b)^{deg a - deg r} Res(b, r).
  Rat acc = 1;
  while (true) {
    QPoly r = q_divrem(a, b).second;
    int da = degree(a), db = degree(b);
    if (r.empty()) return Rat(0);
    int dr = degree(r);
    Rat sign = (da % 2 == 1 && db % 2 == 1) ? Rat(-1) : Rat(1);
    Rat lc_pow = 1;
    for (int i = 0; i < da - dr; ++i) lc_pow *= b.back();
    acc *= sign * lc_pow;
    a = std::move(b);
    b = std::move(r);
    if (degree(b) == 0) {
      Rat r2 = 1;
      for (int i = 0; i < degree(a); ++i) r2 *= b[0];
      return acc * r2;
    }
  }
}

Rat q_discriminant(const QPoly& a) {
  int d = degree(a);
  if (d < 1) return Rat(1);
  Rat res = q_resultant(a, q_derivative(a));
  Rat sign = ((static_cast<i64>(d) * (d - 1) / 2) % 2 == 1) ? Rat(-1) : Rat(1);
  return sign * res / a.back();
}

}  // namespace smoothsum
