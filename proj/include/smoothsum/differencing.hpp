#pragma once

#include <array>

#include "smoothsum/postnikov.hpp"

namespace smoothsum {

// Differencing data: moduli q_1..q_k, co-modulus Q, shift ranges
// M_j = floor((N/q_j)^{2/3}), shifts h_{i,0} != h_{i,1} in [1, M_i].
struct ShiftSystem {
  int k = 0;
  std::vector<i64> q;           // size k
  i64 Q = 1;
  std::vector<i64> M;           // size k
  std::vector<std::array<i64, 2>> h;  // size k

  i64 full_modulus() const {
    i64 m = Q;
    for (i64 qi : q) m *= qi;
    return m;
  }
};

i64 shift_range(i64 N, i64 qi);  // floor((N/qi)^{2/3})

// The 2^k signed shift offsets sum_i h_{i,j_i} q_i with sign (-1)^{sum j_i}.
std::vector<SignedShift> diff_offsets(const ShiftSystem& sys);

// f* and g^+ as exact rational functions.
struct DiffPair {
  RationalFunction fstar;
  RationalFunction gplus;
};
DiffPair difference_fn(const RationalFunction& f, const RationalFunction& g,
                       const ShiftSystem& sys);

// Gauss valuation of H^+ (and of H^+ + b) checked against the closed
// formulas sum_i v_p(h_{i,1} - h_{i,0}) and min with v_p(b).
struct DiffValuation {
  Valuation actual;
  Valuation predicted;
  bool hypotheses_hold = false;
  bool match = false;
};
DiffValuation valuation_of_difference(const RationalFunction& H,
                                      const ShiftSystem& sys, i64 p,
                                      const std::optional<i64>& b);

// v_p(bold h) = sum_i v_p(h_{i,1} - h_{i,0}).
i64 vp_of_shifts(const ShiftSystem& sys, i64 p);

// Differenced value prod a(n + off)^{sign} with conjugation for sign -1.
Complex diffed_eval(const PeriodicFn& a, const std::vector<std::pair<i64, int>>& offsets, i64 n);
std::vector<std::pair<i64, int>> integer_offsets(const ShiftSystem& sys);

Complex diffed_interval_mean(const PeriodicFn& a,
                             const std::vector<std::pair<i64, int>>& offsets,
                             const Interval& I);

// |E_q(a)|^2 <= 5/M + (2/M^2) sum_{i != j} |E_Q(A_{(ir,jr)})| for q = rQ.
struct BasicIneqCheck {
  double lhs_sq;
  double rhs;
  i64 M;
  bool ok;
};
BasicIneqCheck basic_ineq_check(const PeriodicFn& a, i64 q, i64 r, i64 Q,
                                const Interval& I);

// Averages of |E_Q| over all shift tuples (exhaustive enumeration).
struct BoldE {
  double e1;
  double e2;
};
BoldE bold_e(const PeriodicFn& a_Q, const ShiftSystem& sys, const Interval& I);

// #{1 <= h0 != h1 <= M : d | h0 - h1}, its closed form, and the open bound
// M^2/d.
struct PairCount {
  i64 count;
  i64 closed_form;
  double bound;
  bool ok;
};
PairCount pair_count_check(i64 M, i64 d);

// |K_b| = |sum_{n in J} e(b n / q)| for an interval J of length len.
double fourier_kernel_abs(i64 q, i64 len, i64 b);
// sum over b mod q of |K_b| for the leftover interval length len.
double fourier_kernel_sum(i64 q, i64 len);

// Interval mean against the triangle-inequality split into full periods plus
// a DFT-bounded leftover. exact <= certified always.
struct FourierIntervalBound {
  double exact;
  double certified;
  double complete_mean;
};
FourierIntervalBound fourier_interval_bound(const PeriodicFn& a, const Interval& I);

// Certified bound on the normalized differenced complete sum
// |(1/p^m) sum chi(f*(n)) e((g^+(n) + b n)/p^m)| from the shift valuations.
struct DiffedBound {
  double bound = 1.0;
  bool vacuous = true;
  bool exception = false;  // low-degree polynomial g with small conductor
  i64 vph = 0;
  i64 s = 0;  // exponent actually used (m or the conductor exponent)
};
DiffedBound diffed_complete_bound(const RationalFunction& f,
                                  const RationalFunction& g,
                                  const DirichletCharacter& chi_pp,
                                  const ShiftSystem& sys);

// Certified bound pieces shared with the pipeline.
struct TraceEntry {
  std::string id;
  std::string detail;
  double value;
};

struct CertifiedBound {
  double value = 1.0;
  bool vacuous = true;
  std::vector<TraceEntry> trace;
};

// Recomputes the headline value from the recorded trace entries.
double recombine_trace(const CertifiedBound& cb);

enum class BoldERoute { ExactMeans, TupleBounds, CountsAggregate };

struct VdcOptions {
  std::optional<BoldERoute> force_route;
  double budget = 2e8;  // enumeration work ceiling
};

// Iterated differencing bound: 4 sum_i M_i^{-2^-i} + 4 B^{1/2^k} with B a
// certified bound on the tuple-averaged co-modulus means; for k = 1 the
// direct square-root form sqrt(5/M + 2B) is also taken.
CertifiedBound vdc_certified(const SumInstance& inst, const std::vector<i64>& q_split,
                             i64 Q, const VdcOptions& opt = {});

// Same bound for a generic 1-bounded periodic function (exhaustive route
// only; there is no character structure to feed the complete-sum bounds).
CertifiedBound vdc_certified_fn(const PeriodicFn& a, const std::vector<i64>& q_split,
                                i64 Q, const Interval& I, const VdcOptions& opt = {});

}  // namespace smoothsum
