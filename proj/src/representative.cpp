#include "nlc/representative.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "nlc/config.hpp"
#include "nlc/errors.hpp"

namespace nlc {

namespace {

std::optional<ClassRecord> record_at_level(const BitSeq& s, int c) {
  for (const ClassRecord& rec : classify(s)) {
    if (rec.c == c) return rec;
  }
  return std::nullopt;
}

ClassRecord require_max_spacing_member(const BitSeq& s, int c) {
  const int n = s.size();
  auto rec = record_at_level(s, c);
  if (!rec) {
    throw std::domain_error("word is not a member at level c=" + std::to_string(c));
  }
  if (rec->d != n - c) {
    throw std::domain_error("spacing is not the maximum n-c (d=" + std::to_string(rec->d) + ")");
  }
  return *rec;
}

void append_symbols(std::vector<std::uint8_t>& out, int symbol, int count) {
  out.insert(out.end(), static_cast<std::size_t>(count), static_cast<std::uint8_t>(symbol));
}

// All maximum-spacing members of length n: the whole word is determined by
// its aperiodic length-d prefix, d = n - c.
void for_each_max_spacing_member(int n, const std::function<void(const BitSeq&, int c, int d)>& fn) {
  for (int d = 1; d <= n / 2; ++d) {
    const int c = n - d;
    const int q = (n - 1) / d;
    const int r = (n - 1) - q * d;
    for (std::uint64_t v = 0; v < (1ull << d); ++v) {
      const BitSeq head = BitSeq::from_value(v, d);
      if (!is_aperiodic(head)) continue;
      std::vector<std::uint8_t> bits;
      bits.reserve(static_cast<std::size_t>(n));
      for (int t = 0; t < q; ++t) {
        bits.insert(bits.end(), head.bits().begin(), head.bits().end());
      }
      for (int i = 0; i < r; ++i) bits.push_back(static_cast<std::uint8_t>(head.bit(i)));
      bits.push_back(static_cast<std::uint8_t>(1 - head.bit(r)));
      fn(BitSeq(std::move(bits)), c, d);
    }
  }
}

}  // namespace

RepReport shift_class(const BitSeq& s, int c) {
  const int n = s.size();
  if (c < (n + 1) / 2) {
    throw std::domain_error("shift_class: level below ceil(n/2)");
  }
  if (!record_at_level(s, c)) {
    throw std::domain_error("shift_class: word is not a member at level c=" + std::to_string(c));
  }
  RepReport report{s, c, {}, {}, false};
  for (int k = 0; k < n; ++k) {
    const BitSeq rotated = rotate_right(s, k);
    if (auto rec = record_at_level(rotated, c)) {
      report.members.push_back(ClassMember{k, *rec});
    }
  }
  int max_add = -1;
  for (const ClassMember& m : report.members) max_add = std::max(max_add, m.rec.add);
  for (const ClassMember& m : report.members) {
    if (m.rec.add == max_add) report.representatives.push_back(m);
  }
  report.unique = report.representatives.size() == 1;
  return report;
}

std::optional<ShiftPair> make_shift_pair(const BitSeq& s, int c, int h) {
  const int n = s.size();
  if (h < 1 || h >= n) throw std::domain_error("make_shift_pair: need 1 <= h < n");
  const auto s_rec = record_at_level(s, c);
  if (!s_rec) return std::nullopt;
  BitSeq v = rotate_right(s, h);
  const auto v_rec = record_at_level(v, c);
  if (!v_rec) return std::nullopt;
  return ShiftPair{s, std::move(v), h, h - (n - c - s_rec->d), *s_rec, *v_rec};
}

bool is_unique_representative(const BitSeq& s) {
  const auto recs = classify(s);
  if (recs.empty()) {
    throw std::domain_error("is_unique_representative: word has no membership");
  }
  const RepReport report = shift_class(s, recs.front().c);
  return report.unique && report.representatives.front().offset == 0;
}

std::optional<TailDecomposition> max_spacing_decomposition(const BitSeq& s, int c) {
  const int n = s.size();
  require_max_spacing_member(s, c);
  const int d = n - c;
  std::optional<TailDecomposition> found;
  for (int b = 2; b < c; ++b) {
    if (c % b != 0) continue;
    if (!is_aperiodic(s.slice(0, b))) continue;
    bool match = true;
    for (int i = d; i < n && match; ++i) match = s.bit(i) == s.bit((i - d) % b);
    if (!match) continue;
    if (found) throw std::logic_error("max_spacing_decomposition: non-unique split");
    found = TailDecomposition{b, c / b};
  }
  return found;
}

int periodic_nlc_max_spacing(const BitSeq& s, int c) {
  const int n = s.size();
  if (3 * c < 2 * n - 1) {
    throw std::domain_error("periodic_nlc_max_spacing: level below ceil((2n-1)/3)");
  }
  const ClassRecord rec = require_max_spacing_member(s, c);
  const int d = n - c;
  if (const auto split = max_spacing_decomposition(s, c)) {
    return c + (n - d - split->b) + rec.add;
  }
  return c + rec.add;
}

CounterexampleFamily family_counterexample(int n) {
  constexpr int kAlpha = 0;
  constexpr int kBeta = 1;
  std::vector<std::uint8_t> bits;
  int u_shift = 0;
  int v_shift = 0;

  if (n % 4 == 2 && n >= 10) {
    // One block is alpha followed by m-1 betas; the word is three blocks,
    // a beta, then alpha and m betas.
    const int m = (n - 2) / 4;
    for (int t = 0; t < 3; ++t) {
      append_symbols(bits, kAlpha, 1);
      append_symbols(bits, kBeta, m - 1);
    }
    append_symbols(bits, kBeta, 1);
    append_symbols(bits, kAlpha, 1);
    append_symbols(bits, kBeta, m);
    u_shift = m - 1;
    v_shift = 3 * m;
  } else if (n % 8 == 0 && n >= 8) {
    const int k = n / 8;
    for (int t = 0; t < 3; ++t) {
      append_symbols(bits, kAlpha, 1);
      for (int i = 0; i < k - 1; ++i) {
        append_symbols(bits, kAlpha, 1);
        append_symbols(bits, kBeta, 1);
      }
    }
    append_symbols(bits, kAlpha, 1);
    append_symbols(bits, kBeta, 1);
    append_symbols(bits, kAlpha, 1);
    for (int i = 0; i < k; ++i) {
      append_symbols(bits, kAlpha, 1);
      append_symbols(bits, kBeta, 1);
    }
    u_shift = 2 * k - 2;
    v_shift = 6 * k - 2;
  } else if (n % 8 == 4 && n >= 20) {
    const int k = (n - 4) / 8;
    for (int t = 0; t < 3; ++t) {
      append_symbols(bits, kAlpha, 1);
      append_symbols(bits, kBeta, 1);
      append_symbols(bits, kAlpha, 2 * k - 2);
    }
    append_symbols(bits, kAlpha, 2);
    append_symbols(bits, kAlpha, 1);
    append_symbols(bits, kBeta, 1);
    append_symbols(bits, kAlpha, 2 * k);
    u_shift = 2 * k - 2;
    v_shift = 6 * k;
  } else {
    throw std::domain_error("family_counterexample: unsupported length " + std::to_string(n));
  }

  BitSeq s{std::move(bits)};
  return CounterexampleFamily{s, rotate_right(s, u_shift), rotate_right(s, v_shift)};
}

std::vector<ConjectureHit> conjecture_scan(int n_max) {
  if (n_max > exhaustive_limit()) {
    throw ResourceLimitError("conjecture_scan: n_max " + std::to_string(n_max) +
                             " above exhaustive limit " + std::to_string(exhaustive_limit()));
  }
  std::vector<ConjectureHit> hits;
  for (int n = 2; n <= n_max; ++n) {
    for_each_max_spacing_member(n, [&](const BitSeq& s, int c, int /*d*/) {
      const int base_add = added_terms(s, n - c);
      for (int b = 1; b < n; ++b) {
        const BitSeq rotated = rotate_right(s, b);
        for (const ClassRecord& rec : classify(rotated)) {
          if (rec.c != c || rec.add <= base_add) continue;
          if (b != rec.d) {
            hits.push_back(ConjectureHit{n, s, b, rec.d, base_add, rec.add});
          }
        }
      }
    });
  }
  return hits;
}

}  // namespace nlc
