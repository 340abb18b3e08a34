#pragma once

#include "smoothsum/ratfun.hpp"

namespace smoothsum {

struct RootCount {
  i64 count = 0;
  i64 bound = 0;  // d * p^(m - ceil(m/d)), d = deg_p of the numerator
  const char* method = "";
};

// Exact cardinality of { a mod p^m : h(a) = 0 mod p^m } by enumeration.
RootCount count_roots_bruteforce(const IPoly& h, i64 p, int m);

// Same count via the lifting recursion on p-adic coefficient valuations.
RootCount count_roots_lifting(const IPoly& h, i64 p, int m);

// Roots of h_+ mod p^m with h_-(a) nonzero mod p.
RootCount count_roots_with_denominator(const RationalFunction& h, i64 p, int m);

i64 root_count_bound(int d, i64 p, int m);

}  // namespace smoothsum
