#pragma once

#include <functional>
#include <vector>

#include "nlc/bitseq.hpp"

namespace nlc {

/// Receives emitted words; return false to stop the stream early.
using SeqSink = std::function<bool(const BitSeq&)>;

/// Parameters of one (n, omega, d) stream. Spacings below n-omega leave
/// n-omega-d-1 free middle symbols (case i); the larger spacings determine
/// the whole word from its prefix and carry t = omega+d-n added terms
/// (case ii).
struct StructureSpec {
  enum class Case { i, ii };
  Case case_tag = Case::i;
  int n = 0, omega = 0, d = 0;
  int q = 0, r = 0;      // prefix shape: (s_d)^q (s_0..s_{r-1}, !s_r)
  int free_len = 0;      // case i only
  int t = 0;             // case ii only

  // Validates the ranges and derives the shape. Throws std::domain_error
  // for omega outside [floor(3n/4), n-1] or a spacing outside both ranges.
  static StructureSpec for_spacing(int n, int omega, int d);
};

// Words of length n at complexity level omega with spacing d below n-omega:
// d-periodic run of length omega+d ending in a flipped symbol, then free
// middle bits, then the forced final symbol !s_{d-1}. Emission order is
// ascending aperiodic prefix, then ascending free bits (both read as
// binary numbers, most-significant symbol first). Requires
// omega >= floor(3n/4) and 1 <= d <= n-omega-1. Returns false when the sink
// stopped the stream.
bool generate_case_i(int n, int omega, int d, const SeqSink& sink);

// Words at the complementary spacings d in [n-omega, n/2]: the whole word
// is the d-periodic run, and the trailing-pattern constraints on the prefix
// encode omega through t = omega+d-n added terms. Same ordering guarantees.
bool generate_case_ii(int n, int omega, int d, const SeqSink& sink);

// One period for each shift-inequivalent n-periodic sequence of complexity
// omega >= floor(3n/4): case-(i) spacings ascending, then case-(ii).
// Throws a domain error ("structure theorem inapplicable") outside
// [floor(3n/4), n-1].
bool generate_P(int n, int omega, const SeqSink& sink);

// Fully materialized stream; refuses n above the exhaustive limit.
std::vector<PeriodSeq> collect_P(int n, int omega);

}  // namespace nlc
