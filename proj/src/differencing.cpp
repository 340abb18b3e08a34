#include "smoothsum/differencing.hpp"

#include <fftw3.h>

#include <cmath>

#include "smoothsum/fpoly.hpp"

namespace smoothsum {

namespace {

i64 ipow(i64 b, int e) {
  i64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

i64 vp_i64(i64 n, i64 p) {
  if (n == 0) fail(Err::RangeError, "valuation of zero shift difference");
  if (n < 0) n = -n;
  i64 v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// Iterates over all shift tuples (h_{i,0} != h_{i,1} in [1, M_i]).
class TupleIter {
 public:
  explicit TupleIter(const std::vector<i64>& M) : M_(M), h_(M.size(), {1, 1}) {
    if (!advance_from(0, true)) done_ = true;
  }

  bool done() const { return done_; }
  const std::vector<std::array<i64, 2>>& current() const { return h_; }

  void next() {
    for (size_t i = 0; i < h_.size(); ++i) {
      if (step_coord(i)) return;
      h_[i] = {1, 2};  // first valid pair for this coordinate
      if (M_[i] < 2) {
        done_ = true;
        return;
      }
    }
    done_ = true;
  }

 private:
  bool step_coord(size_t i) {
    auto& [a, b] = h_[i];
    do {
      if (b < M_[i]) {
        ++b;
      } else if (a < M_[i]) {
        ++a;
        b = 1;
      } else {
        return false;
      }
    } while (a == b);
    return true;
  }

  bool advance_from(size_t i, bool init) {
    if (init) {
      for (size_t j = 0; j < h_.size(); ++j) {
        if (M_[j] < 2) return false;
        h_[j] = {1, 2};
      }
    }
    return true;
  }

  std::vector<i64> M_;
  std::vector<std::array<i64, 2>> h_;
  bool done_ = false;
};

double tuple_count(const std::vector<i64>& M) {
  double t = 1;
  for (i64 m : M) t *= static_cast<double>(m) * (m - 1);
  return t;
}

double tuple_slots(const std::vector<i64>& M) {
  double t = 1;
  for (i64 m : M) t *= static_cast<double>(m) * m;
  return t;
}

}  // namespace

i64 shift_range(i64 N, i64 qi) {
  // Largest M with M^3 qi^2 <= N^2.
  if (N <= 0 || qi <= 0) fail(Err::RangeError, "bad shift range input");
  double approx = std::pow(static_cast<double>(N) / qi, 2.0 / 3.0);
  i64 M = static_cast<i64>(approx) + 2;
  auto fits = [&](i64 m) {
    if (m < 0) return false;
    __int128 lhs = static_cast<__int128>(m) * m * m;
    lhs *= qi;
    lhs *= qi;
    return lhs <= static_cast<__int128>(N) * N;
  };
  while (!fits(M)) --M;
  while (fits(M + 1)) ++M;
  return M;
}

std::vector<SignedShift> diff_offsets(const ShiftSystem& sys) {
  std::vector<SignedShift> out;
  out.reserve(static_cast<size_t>(1) << sys.k);
  for (i64 mask = 0; mask < (i64{1} << sys.k); ++mask) {
    i64 off = 0;
    int bits = 0;
    for (int i = 0; i < sys.k; ++i) {
      int j = (mask >> i) & 1;
      bits += j;
      off += sys.h[static_cast<size_t>(i)][static_cast<size_t>(j)] *
             sys.q[static_cast<size_t>(i)];
    }
    out.push_back({Rat(off), bits % 2 == 0 ? 1 : -1});
  }
  return out;
}

std::vector<std::pair<i64, int>> integer_offsets(const ShiftSystem& sys) {
  std::vector<std::pair<i64, int>> out;
  for (const auto& s : diff_offsets(sys))
    out.emplace_back(static_cast<i64>(rat_num(s.offset)), s.sign);
  return out;
}

DiffPair difference_fn(const RationalFunction& f, const RationalFunction& g,
                       const ShiftSystem& sys) {
  auto offsets = diff_offsets(sys);
  return {rf_pow_product(f, offsets), rf_signed_sum(g, offsets)};
}

i64 vp_of_shifts(const ShiftSystem& sys, i64 p) {
  i64 v = 0;
  for (const auto& [h0, h1] : sys.h) v += vp_i64(h1 - h0, p);
  return v;
}

DiffValuation valuation_of_difference(const RationalFunction& H,
                                      const ShiftSystem& sys, i64 p,
                                      const std::optional<i64>& b) {
  DiffValuation out;
  int k = sys.k;
  int dH = rf_deg(H);
  bool hyp = !H.is_zero() && vp_ratfun(H, p) == Valuation::finite(0) &&
             p >= k + dH;
  for (i64 qi : sys.q) hyp = hyp && qi % p != 0;
  if (hyp && H.is_polynomial()) {
    int dp = deg_p(H, p);
    hyp = b ? dp > k : dp >= k;
  }
  out.hypotheses_hold = hyp;

  auto offsets = diff_offsets(sys);
  RationalFunction Hplus = rf_signed_sum(H, offsets);
  if (b) Hplus = rf_add(Hplus, ratfun_from_int(Int(*b)));
  out.actual = vp_ratfun(Hplus, p);

  i64 vh = vp_of_shifts(sys, p);
  if (b) {
    Valuation vb = *b == 0 ? Valuation::infinite() : Valuation::finite(vp_i64(*b, p));
    out.predicted = val_min(Valuation::finite(vh), vb);
  } else {
    out.predicted = Valuation::finite(vh);
  }
  out.match = out.actual == out.predicted;
  return out;
}

Complex diffed_eval(const PeriodicFn& a,
                    const std::vector<std::pair<i64, int>>& offsets, i64 n) {
  Complex v{1.0, 0.0};
  for (const auto& [off, sign] : offsets) {
    Complex t = a.eval(n + off);
    v *= sign >= 0 ? t : std::conj(t);
    if (v == Complex{0.0, 0.0}) return v;
  }
  return v;
}

Complex diffed_interval_mean(const PeriodicFn& a,
                             const std::vector<std::pair<i64, int>>& offsets,
                             const Interval& I) {
  Complex sum{0.0, 0.0};
  for (i64 n = I.M + 1; n <= I.M + I.N; ++n) sum += diffed_eval(a, offsets, n);
  return sum / static_cast<double>(I.N);
}

BasicIneqCheck basic_ineq_check(const PeriodicFn& a, i64 q, i64 r, i64 Q,
                                const Interval& I) {
  if (r * Q != q || gcd_i64(r, Q) != 1)
    fail(Err::NotCoprimeSplit, "q must split as r*Q with coprime parts");
  i64 M = shift_range(I.N, r);
  if (M < 5) fail(Err::RangeError, "shift range below 5");
  PeriodicFn aQ = a.restrict_to(Q);
  Complex mean = interval_mean(a, I);
  double lhs_sq = std::norm(mean);
  double sum = 0;
  for (i64 i = 1; i <= M; ++i) {
    for (i64 j = 1; j <= M; ++j) {
      if (i == j) continue;
      std::vector<std::pair<i64, int>> offs{{i * r, 1}, {j * r, -1}};
      sum += std::abs(diffed_interval_mean(aQ, offs, I));
    }
  }
  double rhs = 5.0 / M + 2.0 / (static_cast<double>(M) * M) * sum;
  return {lhs_sq, rhs, M, lhs_sq <= rhs + 1e-9};
}

BoldE bold_e(const PeriodicFn& a_Q, const ShiftSystem& sys, const Interval& I) {
  double e1 = 0, e2 = 0;
  ShiftSystem work = sys;
  for (TupleIter it(sys.M); !it.done(); it.next()) {
    work.h = it.current();
    double m = std::abs(diffed_interval_mean(a_Q, integer_offsets(work), I));
    e1 += m;
    e2 += m * m;
  }
  double slots = tuple_slots(sys.M);
  return {e1 / slots, e2 / slots};
}

PairCount pair_count_check(i64 M, i64 d) {
  if (M < 1 || d < 1) fail(Err::RangeError, "positive integers required");
  i64 count = 0;
  for (i64 h0 = 1; h0 <= M; ++h0)
    for (i64 h1 = 1; h1 <= M; ++h1)
      if (h0 != h1 && (h0 - h1) % d == 0) ++count;
  i64 u = M / d, v = M % d;
  i64 closed = v * u * (u + 1) + (d - v) * u * (u - 1);
  double bound = static_cast<double>(M) * M / d;
  return {count, closed, bound, count == closed && count < bound};
}

double fourier_kernel_abs(i64 q, i64 len, i64 b) {
  b = floor_mod(b, q);
  if (b == 0) return static_cast<double>(len);
  double s = std::sin(M_PI * static_cast<double>(b) / q);
  double t = std::sin(M_PI * static_cast<double>(mul_mod(b, len, q)) / q);
  return std::abs(t / s);
}

double fourier_kernel_sum(i64 q, i64 len) {
  double sum = 0;
  for (i64 b = 0; b < q; ++b) sum += fourier_kernel_abs(q, len, b);
  return sum;
}

FourierIntervalBound fourier_interval_bound(const PeriodicFn& a, const Interval& I) {
  i64 q = a.period();
  i64 N = I.N;
  std::vector<Complex> vals(static_cast<size_t>(q));
  Complex complete{0.0, 0.0};
  for (i64 r = 0; r < q; ++r) {
    vals[static_cast<size_t>(r)] = a.eval(r);
    complete += vals[static_cast<size_t>(r)];
  }
  double complete_mean = std::abs(complete) / static_cast<double>(q);
  double exact = std::abs(interval_mean(a, I));

  i64 Nq = N % q;
  double leftover = 0;
  if (Nq > 0) {
    std::vector<Complex> hat(static_cast<size_t>(q));
    fftw_plan plan = fftw_plan_dft_1d(
        static_cast<int>(q), reinterpret_cast<fftw_complex*>(vals.data()),
        reinterpret_cast<fftw_complex*>(hat.data()), FFTW_FORWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
    for (i64 b = 0; b < q; ++b)
      leftover += std::abs(hat[static_cast<size_t>(b)]) * fourier_kernel_abs(q, Nq, b);
    leftover /= static_cast<double>(q) * N;
  }
  double certified =
      static_cast<double>(N / q) * q / static_cast<double>(N) * complete_mean +
      leftover;
  return {exact, certified, complete_mean};
}

DiffedBound diffed_complete_bound(const RationalFunction& f,
                                  const RationalFunction& g,
                                  const DirichletCharacter& chi_pp,
                                  const ShiftSystem& sys) {
  if (chi_pp.factors().size() != 1)
    fail(Err::RangeError, "prime-power character expected");
  const auto& fac = chi_pp.factors()[0];
  i64 p = fac.pp.p;
  int m = fac.pp.m;
  int k = sys.k;
  Int delta = delta_fgk(f, g, k);
  for (i64 qi : sys.q)
    if (qi % p == 0) fail(Err::HypothesisViolation, "p divides a differencing modulus");
  if (delta % p == 0) fail(Err::HypothesisViolation, "p divides Delta(f,g,k)");

  DiffedBound out;
  out.vph = vp_of_shifts(sys, p);
  i64 D = 2 * (rf_deg(f) + rf_deg(g));
  if (D == 0) D = 2;  // f, g both constant: differenced sum is classical

  bool exception = false;
  i64 s = m;
  if (g.is_polynomial() && rf_deg(g) <= k + 1) {
    i64 cond = conductor_of_power_for_f(chi_pp, f);
    if (cond < fac.pp.value) {
      exception = true;
      s = 0;
      for (i64 c = cond; c > 1; c /= p) ++s;
    }
  }
  out.exception = exception;
  out.s = s;

  double c2 = std::ldexp(static_cast<double>(D), k);  // 2^k D
  double expo = static_cast<double>(s - out.vph) /
                (std::ldexp(1.0, k + 2) * static_cast<double>(D));
  double bound = c2 * std::pow(static_cast<double>(p), -expo);
  if (m == 1 && !exception) {
    double sharp = std::ldexp(static_cast<double>(D), k + 1) *
                   std::pow(static_cast<double>(p),
                            -std::max(0.0, (1.0 - static_cast<double>(out.vph))) / 2.0);
    bound = std::min(bound, sharp);
  }
  out.bound = bound;
  out.vacuous = bound >= 1.0;
  return out;
}

namespace {

struct ComponentBoundData {
  i64 pe;
  i64 p;
  int m;
  i64 s;       // conductor-adjusted exponent
  double cp;   // 2^k D
  double Ep;   // 2^{k+2} D
  bool sharp_prime;  // m == 1 and no exception: may use 2^{k+1} D p^{-(1-v)/2}
  double sharp_c;
};

// Per-tuple certified bound on |E-mean| of the differenced component with an
// arbitrary additive twist, as a function of v_p(bold h).
double component_bound(const ComponentBoundData& c, i64 v) {
  double b = c.cp * std::pow(static_cast<double>(c.p),
                             -static_cast<double>(c.s - v) / c.Ep);
  if (c.sharp_prime) {
    double sharp = c.sharp_c * std::pow(static_cast<double>(c.p),
                                        -std::max(0.0, 1.0 - static_cast<double>(v)) / 2.0);
    b = std::min(b, sharp);
  }
  return std::min(b, 1.0);
}

std::vector<i64> divisors_of(i64 n) {
  std::vector<i64> out{1};
  for (const auto& pp : factorize(n)) {
    size_t sz = out.size();
    i64 pk = 1;
    for (int e = 1; e <= pp.m; ++e) {
      pk *= pp.p;
      for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

double binomial(i64 n, i64 r) {
  double v = 1;
  for (i64 i = 0; i < r; ++i) v = v * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return v;
}

// tau_k(u): ordered factorizations of u into k parts.
double tau_k_of(i64 u, int k) {
  double v = 1;
  for (const auto& pp : factorize(u)) v *= binomial(pp.m + k - 1, k - 1);
  return v;
}

struct VdcCore {
  double B;
  double kappa;
  double core;
  const char* route;
};

}  // namespace

CertifiedBound vdc_certified(const SumInstance& inst, const std::vector<i64>& q_split,
                             i64 Q, const VdcOptions& opt) {
  int k = static_cast<int>(q_split.size());
  i64 q = Q;
  for (i64 qi : q_split) q *= qi;
  if (q != inst.q) fail(Err::NotCoprimeSplit, "split does not multiply to q");
  i64 N = inst.I.N;

  ShiftSystem sys;
  sys.k = k;
  sys.q = q_split;
  sys.Q = Q;
  sys.h.assign(static_cast<size_t>(k), {1, 2});
  for (i64 qi : q_split) {
    i64 M = shift_range(N, qi);
    if (M < 5) fail(Err::RangeError, "shift range below 5");
    sys.M.push_back(M);
  }

  double term1 = 0;
  for (int i = 1; i <= k; ++i)
    term1 += std::pow(static_cast<double>(sys.M[static_cast<size_t>(i - 1)]),
                      -std::ldexp(1.0, -i));
  term1 *= 4.0;

  // kappa: full periods plus the exact leftover kernel sum.
  i64 Nq = N % Q;
  double kappa = static_cast<double>(N / Q) * Q / static_cast<double>(N) +
                 (Nq > 0 ? fourier_kernel_sum(Q, Nq) / static_cast<double>(N) : 0.0);

  // Route selection.
  double slots = tuple_slots(sys.M);
  BoldERoute route;
  if (opt.force_route) {
    route = *opt.force_route;
  } else if (k > 0 && slots * static_cast<double>(N) * std::ldexp(1.0, k) <= opt.budget) {
    route = BoldERoute::ExactMeans;
  } else if (k > 0 && slots <= 1e6) {
    route = BoldERoute::TupleBounds;
  } else {
    route = BoldERoute::CountsAggregate;
  }

  // Per prime power of Q: bound data for the differenced components; only
  // the bound-based routes need the coprimality hypotheses.
  std::vector<ComponentBoundData> comps;
  i64 Qstar = 1;
  if (k >= 1 && route != BoldERoute::ExactMeans) {
    i64 D = 2 * (rf_deg(inst.f) + rf_deg(inst.g));
    if (D == 0) D = 2;
    Int delta = delta_fgk(inst.f, inst.g, k);
    for (const auto& pp : factorize(Q)) {
      ComponentBoundData c;
      c.pe = pp.value;
      c.p = pp.p;
      c.m = pp.m;
      for (i64 qi : q_split)
        if (qi % pp.p == 0) fail(Err::NotCoprimeSplit, "split shares a prime");
      if (delta % pp.p == 0)
        fail(Err::HypothesisViolation, "co-modulus shares a prime with Delta(f,g,k)");
      c.s = pp.m;
      bool exception = false;
      if (inst.g.is_polynomial() && rf_deg(inst.g) <= k + 1) {
        i64 cond = conductor_of_power_for_f(inst.chi.component(pp.value), inst.f);
        if (cond < pp.value) {
          exception = true;
          c.s = 0;
          for (i64 x = cond; x > 1; x /= pp.p) ++c.s;
        }
      }
      c.cp = std::ldexp(static_cast<double>(D), k);
      c.Ep = std::ldexp(1.0, k + 2) * static_cast<double>(D);
      c.sharp_prime = (pp.m == 1 && !exception);
      c.sharp_c = std::ldexp(static_cast<double>(D), k + 1);
      for (i64 x = 0; x < c.s; ++x) Qstar *= pp.p;
      comps.push_back(c);
    }
  }

  VdcCore core{1.0, kappa, 1.0, "counts-aggregate"};
  if (k == 0) {
    // No differencing: bound each component's twisted complete mean directly.
    double prod = 1.0;
    for (const auto& c : comps) {
      DirichletCharacter chi_pe = inst.chi.component(c.pe);
      i64 cp = inv_mod(floor_mod(inst.q / c.pe, c.pe), c.pe);
      prod *= std::min(max_twist_bound(inst.f, inst.g, chi_pe, cp), 1.0);
    }
    core = {kappa * prod, kappa, prod, "direct-complete"};
  } else if (route == BoldERoute::ExactMeans) {
    PeriodicFn a = make_char_exp_fn(inst.f, inst.g, inst.chi, inst.q);
    PeriodicFn aQ = a.restrict_to(Q);
    double sum = 0;
    ShiftSystem work = sys;
    for (TupleIter it(sys.M); !it.done(); it.next()) {
      work.h = it.current();
      sum += std::abs(diffed_interval_mean(aQ, integer_offsets(work), inst.I));
    }
    core = {sum / slots, 1.0, sum / slots, "exact-means"};
  } else if (route == BoldERoute::TupleBounds) {
    double sum = 0;
    ShiftSystem work = sys;
    for (TupleIter it(sys.M); !it.done(); it.next()) {
      work.h = it.current();
      double w = 1.0;
      for (const auto& c : comps) {
        i64 v = 0;
        for (const auto& [h0, h1] : work.h) v += vp_i64(h1 - h0, c.p);
        w *= component_bound(c, v);
      }
      sum += w;
    }
    core = {kappa * sum / slots, kappa, sum / slots, "tuple-bounds"};
  } else {
    // Counts-aggregate route: factor the per-component bound as
    // lead * (Q*, prod(h diffs))^{1/E} and bound the tuple average of the
    // gcd power with the pair-count inequality per ordered factorization.
    bool all_large = true;
    for (const auto& c : comps)
      for (i64 M : sys.M)
        if (c.p <= M) all_large = false;
    if (all_large) {
      // Every shift difference is below every prime: v = 0 exactly.
      double prod = 1.0;
      for (const auto& c : comps) prod *= component_bound(c, 0);
      core = {kappa * prod, kappa, prod, "counts-aggregate-v0"};
    } else {
      double lead = 1.0;
      double Emin = 0;
      for (const auto& c : comps) {
        lead *= c.cp * std::pow(static_cast<double>(c.p),
                                -static_cast<double>(c.s) / c.Ep);
        Emin = std::max(Emin, c.Ep);
      }
      double S = 0;
      for (i64 u : divisors_of(Qstar)) {
        double weight = std::min(1.0, tau_k_of(u, k) / static_cast<double>(u));
        S += std::pow(static_cast<double>(u), 1.0 / Emin) * weight;
      }
      core = {kappa * std::min(lead * S, 1.0), kappa, std::min(lead * S, 1.0),
              "counts-aggregate"};
    }
  }

  double B = std::min(core.B, 1.0);
  double iterated = term1 + 4.0 * std::pow(B, std::ldexp(1.0, -k));
  CertifiedBound out;
  out.trace.push_back({"vdc:k", core.route, static_cast<double>(k)});
  out.trace.push_back({"vdc:shift-term", "4 sum M_i^(-2^-i)", term1});
  out.trace.push_back({"boldE:kappa", "period split + kernel sum", core.kappa});
  out.trace.push_back({"boldE:core", core.route, core.core});
  out.trace.push_back({"boldE:value", "bound on tuple-averaged means", B});
  out.trace.push_back({"vdc:iterated", "iterated differencing form", iterated});
  double value = iterated;
  if (k == 1) {
    double pair_form = std::sqrt(5.0 / static_cast<double>(sys.M[0]) + 2.0 * B);
    out.trace.push_back({"vdc:pair-form", "single-difference form", pair_form});
    value = std::min(value, pair_form);
  }
  out.trace.push_back({"vdc:value", "certified bound on |mean|", value});
  out.value = value;
  out.vacuous = value >= 1.0;
  return out;
}

CertifiedBound vdc_certified_fn(const PeriodicFn& a, const std::vector<i64>& q_split,
                                i64 Q, const Interval& I, const VdcOptions& opt) {
  int k = static_cast<int>(q_split.size());
  i64 N = I.N;
  ShiftSystem sys;
  sys.k = k;
  sys.q = q_split;
  sys.Q = Q;
  sys.h.assign(static_cast<size_t>(k), {1, 2});
  for (i64 qi : q_split) {
    i64 M = shift_range(N, qi);
    if (M < 5) fail(Err::RangeError, "shift range below 5");
    sys.M.push_back(M);
  }
  double term1 = 0;
  for (int i = 1; i <= k; ++i)
    term1 += std::pow(static_cast<double>(sys.M[static_cast<size_t>(i - 1)]),
                      -std::ldexp(1.0, -i));
  term1 *= 4.0;

  double B;
  const char* route;
  if (k == 0) {
    FourierIntervalBound fb = fourier_interval_bound(a.restrict_to(Q), I);
    B = std::min(fb.certified, 1.0);
    route = "fourier-interval";
  } else {
    PeriodicFn aQ = a.restrict_to(Q);
    double sum = 0;
    ShiftSystem work = sys;
    for (TupleIter it(sys.M); !it.done(); it.next()) {
      work.h = it.current();
      sum += std::abs(diffed_interval_mean(aQ, integer_offsets(work), I));
    }
    B = std::min(sum / tuple_slots(sys.M), 1.0);
    route = "exact-means";
  }
  (void)opt;

  double iterated = term1 + 4.0 * std::pow(B, std::ldexp(1.0, -k));
  CertifiedBound out;
  out.trace.push_back({"vdc:k", route, static_cast<double>(k)});
  out.trace.push_back({"vdc:shift-term", "4 sum M_i^(-2^-i)", term1});
  out.trace.push_back({"boldE:kappa", "exact route", 1.0});
  out.trace.push_back({"boldE:value", "bound on tuple-averaged means", B});
  out.trace.push_back({"vdc:iterated", "iterated differencing form", iterated});
  double value = iterated;
  if (k == 1) {
    double pair_form = std::sqrt(5.0 / static_cast<double>(sys.M[0]) + 2.0 * B);
    out.trace.push_back({"vdc:pair-form", "single-difference form", pair_form});
    value = std::min(value, pair_form);
  }
  out.trace.push_back({"vdc:value", "certified bound on |mean|", value});
  out.value = value;
  out.vacuous = value >= 1.0;
  return out;
}

double recombine_trace(const CertifiedBound& cb) {
  double k = 0, shift_term = 0, B = 0;
  bool has_pair = false;
  for (const auto& t : cb.trace) {
    if (t.id == "vdc:k") k = t.value;
    if (t.id == "vdc:shift-term") shift_term = t.value;
    if (t.id == "boldE:value") B = t.value;
    if (t.id == "vdc:pair-form") has_pair = true;
  }
  double iterated = shift_term + 4.0 * std::pow(B, std::ldexp(1.0, -static_cast<int>(k)));
  double value = iterated;
  if (has_pair) {
    double M1 = 0;
    for (const auto& t : cb.trace)
      if (t.id == "vdc:pair-form") M1 = t.value;
    value = std::min(value, M1);
  }
  return value;
}

}  // namespace smoothsum
