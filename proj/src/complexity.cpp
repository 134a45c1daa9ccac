#include "nlc/complexity.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nlc {

namespace {

// Bit-packed view with O(1) 64-bit window reads for fast common-prefix scans.
class PackedBits {
 public:
  explicit PackedBits(const BitSeq& s) : m_(s.size()), words_((s.size() + 63) / 64 + 1, 0) {
    for (int i = 0; i < m_; ++i) {
      if (s.bit(i)) words_[static_cast<std::size_t>(i) / 64] |= 1ull << (i % 64);
    }
  }

  // 64 bits starting at position i; positions past the end read as zero.
  std::uint64_t window(int i) const {
    const std::size_t k = static_cast<std::size_t>(i) / 64;
    const int r = i % 64;
    std::uint64_t w = words_[k] >> r;
    if (r != 0 && k + 1 < words_.size()) w |= words_[k + 1] << (64 - r);
    return w;
  }

  // Longest common prefix of the suffixes at i and j, capped at `cap`.
  int lcp(int i, int j, int cap) const {
    int len = 0;
    while (len < cap) {
      const std::uint64_t diff = window(i + len) ^ window(j + len);
      const int chunk = cap - len < 64 ? cap - len : 64;
      if (diff != 0) {
        const int z = std::countr_zero(diff);
        return len + (z < chunk ? z : chunk);
      }
      len += chunk;
    }
    return cap;
  }

 private:
  int m_;
  std::vector<std::uint64_t> words_;
};

// Trailing run of symbols matching the d-periodic pattern of the prefix.
// Membership at spacing d guarantees a mismatch strictly before n-c steps.
int added_terms_unchecked(const BitSeq& s, int d) {
  const int n = s.size();
  for (int i = 0; i < n; ++i) {
    const int want = s.bit(((d - 1 - i) % d + d) % d);
    if (s.bit(n - 1 - i) != want) return i;
  }
  throw std::logic_error("added_terms: no pattern break found");
}

}  // namespace

int nlc_finite(const BitSeq& s) {
  const int m = s.size();
  const PackedBits packed(s);
  int best = -1;
  for (int j = 1; j < m; ++j) {
    const int limit = m - 1 - j;  // window length cap so both successors exist
    if (limit <= best) break;     // caps only shrink from here on
    for (int i = 0; i < j; ++i) {
      const int l = packed.lcp(i, j, limit + 1);
      // l <= limit means the windows of length l match and the successors
      // s[i+l] != s[j+l]; l == limit+1 means no witness fits this pair.
      if (l <= limit && l > best) best = l;
    }
  }
  return best + 1;
}

int witness_pair_count(const BitSeq& s, int len) {
  if (len < 0) throw std::invalid_argument("witness_pair_count: negative length");
  const int m = s.size();
  const PackedBits packed(s);
  int count = 0;
  for (int j = 1; j + len <= m - 1; ++j) {
    for (int i = 0; i < j; ++i) {
      if (packed.lcp(i, j, len + 1) == len) ++count;
    }
  }
  return count;
}

int nlc_periodic_oracle(const PeriodSeq& p) { return nlc_finite(p.prefix(3 * p.period_length())); }

std::vector<ClassRecord> classify(const BitSeq& s) {
  const int n = s.size();
  const int half_up = (n + 1) / 2;
  std::vector<ClassRecord> out;
  for (int d = 1; d <= n / 2; ++d) {
    if (!is_aperiodic(s.slice(0, d))) continue;
    int p = -1;
    for (int i = d; i < n; ++i) {
      if (s.bit(i) != s.bit(i % d)) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;  // d-periodic throughout: no break, no membership
    const int c = p - d + 1;
    if (c < half_up || d > n - c) continue;
    const int q = (c + d - 1) / d;
    const int r = (c + d - 1) - q * d;
    out.push_back(ClassRecord{n, c, d, q, r, added_terms_unchecked(s, d)});
  }
  return out;
}

int added_terms(const BitSeq& s, int d) {
  for (const ClassRecord& rec : classify(s)) {
    if (rec.d == d) return rec.add;
  }
  throw std::domain_error("added_terms: word is not a member at spacing " + std::to_string(d));
}

TightBound tight_bound_c0(int n) {
  if (n < 3) throw std::domain_error("tight_bound_c0: need n >= 3");
  const int generic = 3 * n / 4;
  if (n % 2 != 0) return TightBound{generic, false};
  switch (n % 8) {
    case 0:
      return TightBound{generic - 1, true};
    case 2:
    case 6:
      return TightBound{generic, true};
    default:  // n % 8 == 4: proven tight only from n = 20 up
      if (n >= 20) return TightBound{generic - 2, true};
      return TightBound{generic, false};
  }
}

int nlc_periodic_fast(const PeriodSeq& p) {
  const BitSeq& w = p.period();
  const int n = w.size();
  if (n < 3) throw std::domain_error("nlc_periodic_fast: below fast-path bound (period too short)");
  const int c0 = tight_bound_c0(n).c0;
  bool found = false;
  int value = 0;
  for (int k = 0; k < n; ++k) {
    for (const ClassRecord& rec : classify(rotate_left(w, k))) {
      if (rec.c < c0) continue;
      const int candidate = rec.c + rec.add;
      if (found && candidate != value) {
        throw std::logic_error("nlc_periodic_fast: inconsistent rotations");
      }
      value = candidate;
      found = true;
    }
  }
  if (!found) {
    throw std::domain_error(
        "nlc_periodic_fast: below fast-path bound; no rotation reaches c0 — "
        "use the exhaustive path");
  }
  return value;
}

}  // namespace nlc
