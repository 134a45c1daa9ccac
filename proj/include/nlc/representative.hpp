#pragma once

#include <optional>
#include <vector>

#include "nlc/bitseq.hpp"
#include "nlc/complexity.hpp"

namespace nlc {

struct ClassMember {
  int offset = 0;  // member word is R^offset(base)
  ClassRecord rec;

  friend bool operator==(const ClassMember& a, const ClassMember& b) = default;
};

/// Rotation class of `base` at complexity level c: every rotation that is a
/// member at that level, the sublist maximizing `add`, and whether that
/// maximizer is unique.
struct RepReport {
  BitSeq base;
  int c = 0;
  std::vector<ClassMember> members;          // ascending offset; 0 is base itself
  std::vector<ClassMember> representatives;  // members attaining the maximum add
  bool unique = false;
};

// Requires base membership at level c with c >= ceil(n/2).
RepReport shift_class(const BitSeq& s, int c);

// True iff s attains the strictly largest add in its rotation class.
// Requires s to be a member at some level (found through classify).
bool is_unique_representative(const BitSeq& s);

/// Ordered pair of shift-equivalent members at a common level c: v = R^h(s).
/// The derived offset b = h - (n - c - d1) always satisfies
/// add(s) <= b < d1 + d2 - add(v); the property suite asserts it.
struct ShiftPair {
  BitSeq s, v;
  int h = 0;
  int b = 0;
  ClassRecord s_rec, v_rec;

  bool within_offset_bound() const {
    return s_rec.add <= b && b < s_rec.d + v_rec.d - v_rec.add;
  }
};

// Builds the pair when both s and R^h(s) are members at level c.
std::optional<ShiftPair> make_shift_pair(const BitSeq& s, int c, int h);

struct TailDecomposition {
  int b = 0;  // aperiodic prefix length, a proper divisor of c with b > 1
  int l = 0;  // repetition count, so the tail s[d..n) equals (s_0..s_{b-1})^l
};

// For members at the maximum spacing d = n-c: the unique way (if any) to
// write the tail as a power of the word's own short prefix. Existence of the
// decomposition is exactly what stops the word from being a representative
// once c >= ceil((2n-1)/3).
std::optional<TailDecomposition> max_spacing_decomposition(const BitSeq& s, int c);

// Complexity of the infinite extension for maximum-spacing members with
// c >= ceil((2n-1)/3): c + n - d - b + add(s) when the tail decomposes at b,
// plain c + add(s) otherwise.
int periodic_nlc_max_spacing(const BitSeq& s, int c);

/// Explicit witness family showing the representative bound c0 cannot be
/// lowered: u and v are rotations of s, both members at level c0-1, with
/// add(v) > add(u).
struct CounterexampleFamily {
  BitSeq s, u, v;
};

// Supported lengths: n = 8k (k>=1), n = 8k+2 and 8k+6 (k>=1), n = 8k+4 (k>=2).
CounterexampleFamily family_counterexample(int n);

/// Certificate for one violation of the offset-equals-spacing conjecture.
struct ConjectureHit {
  int n = 0;
  BitSeq s;       // maximum-spacing member, level c = n - spacing
  int offset = 0; // rotation amount with strictly larger add
  int d2 = 0;     // spacing of the rotated word
  int add_base = 0;
  int add_shifted = 0;
};

// Scans every maximum-spacing member of every length up to n_max and every
// rotation with strictly larger add; records any case where the rotation
// amount differs from the new spacing. Empty means the conjecture held.
std::vector<ConjectureHit> conjecture_scan(int n_max);

}  // namespace nlc
