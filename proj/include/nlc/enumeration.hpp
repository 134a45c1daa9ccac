#pragma once

#include <vector>

#include "nlc/bigint.hpp"

namespace nlc {

// 1 for m = 1, (-1)^k for a squarefree product of k primes, 0 otherwise.
int mobius(long long m);

// Number of aperiodic binary words of length d.
BigInt aperiodic_count(long long d);

/// Count of aperiodic length-d words obeying the trailing-pattern boundary
/// constraints for period n and t added terms:
///   t = 0:  s_{(n-1) mod d} = s_{d-1}
///   t > 0:  !s_{(n-1) mod d} = s_{d-1};  s_{(n-i) mod d} = s_{(d-i) mod d}
///           for 2 <= i <= t;  s_{(n-t-1) mod d} = !s_{(d-t-1) mod d}
/// Evaluated by divisor recursion for small t and by the rank of the
/// constraint system past the largest proper divisor. Depends on n only
/// through n mod d. Requires 1 <= d <= n/2, t >= 0.
BigInt count_N(long long n, long long d, long long t);

struct CountTerm {
  long long d = 0;
  long long t = 0;  // only meaningful for boundary-constrained terms
  BigInt value;
};

/// Per-spacing breakdown of the number of shift-inequivalent n-periodic
/// sequences with complexity exactly omega, plus the probability that a
/// random n-periodic sequence attains it.
struct CountBreakdown {
  long long n = 0;
  long long omega = 0;
  std::vector<CountTerm> case_i_terms;   // d in [1, n-omega-1]: A(d) * 2^(n-omega-1-d)
  std::vector<CountTerm> case_ii_terms;  // d in [n-omega, n/2]: boundary-word counts
  BigInt case_i_subtotal;
  BigInt total;
  Fraction probability;  // n * total / A(n)
};

// Exact size of the set for floor(3n/4) <= omega <= n-1, n >= 3; outside
// that range the counting method breaks down and a "formula inapplicable"
// domain error is thrown.
CountBreakdown count_P(long long n, long long omega);

}  // namespace nlc
