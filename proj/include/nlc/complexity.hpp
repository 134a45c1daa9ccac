#pragma once

#include <vector>

#include "nlc/bitseq.hpp"

namespace nlc {

/// One membership fact: the word's first d-periodic run breaks exactly at
/// position c+d-1, its length-d prefix is aperiodic, c >= ceil(n/2) and
/// d <= n-c. `q`, `r` describe the prefix as (s_d)^q (s_0..s_{r-1}, !s_r);
/// `add` counts the trailing symbols that continue the d-periodic pattern.
struct ClassRecord {
  int n = 0;
  int c = 0;
  int d = 0;
  int q = 0;
  int r = 0;
  int add = 0;

  friend bool operator==(const ClassRecord& a, const ClassRecord& b) = default;
};

// Length of the shortest feedback shift register (arbitrary feedback
// function) generating the word: one plus the length of the longest window
// occurring at two positions with different successor symbols, or 0 for
// constant words.
int nlc_finite(const BitSeq& s);

// Number of position pairs carrying equal length-`len` windows with
// different successors (both successors inside the word).
int witness_pair_count(const BitSeq& s, int len);

// Ground-truth complexity of the infinite extension, computed on the 3n
// prefix. Any witnessing pair of the infinite sequence can be translated to
// start in [0,n) with offset below n and window length at most n-2, so the
// last symbol it touches has index at most 3n-4.
int nlc_periodic_oracle(const PeriodSeq& p);

// All (c,d) memberships of s with c >= ceil(n/2). Scans every spacing
// d <= n/2 rather than assuming uniqueness; an empty result means the word
// has no such membership.
std::vector<ClassRecord> classify(const BitSeq& s);

// Count of trailing symbols continuing the d-periodic prefix pattern.
// Requires s to be a member at spacing d (checked through classify).
int added_terms(const BitSeq& s, int d);

struct TightBound {
  int c0 = 0;
  bool tight = false;

  friend bool operator==(const TightBound& a, const TightBound& b) = default;
};

// Least complexity level at which every member word is guaranteed to
// maximize `add` within its rotation class. Proven tight for even n except
// n in {4, 12}; for those and for odd n the generic floor(3n/4) bound is
// returned with tight=false.
TightBound tight_bound_c0(int n);

// Complexity of the infinite extension through the additive shortcut:
// find a rotation whose membership level reaches tight_bound_c0, return
// c + add for it. Throws std::domain_error ("below fast-path bound") when
// no rotation qualifies.
int nlc_periodic_fast(const PeriodSeq& p);

}  // namespace nlc
