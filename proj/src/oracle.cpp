#include "nlc/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nlc/complexity.hpp"
#include "nlc/config.hpp"
#include "nlc/enumeration.hpp"
#include "nlc/errors.hpp"
#include "nlc/representative.hpp"
#include "nlc/structgen.hpp"

namespace nlc {

namespace {

void guard_exhaustive(int n, const char* what) {
  if (n < 1) throw std::domain_error(std::string(what) + ": need n >= 1");
  if (n > exhaustive_limit()) {
    throw ResourceLimitError(std::string(what) + ": n " + std::to_string(n) +
                             " above exhaustive limit " + std::to_string(exhaustive_limit()));
  }
}

struct ClassSummary {
  std::uint64_t rep = 0;  // least value over rotations, bit i = symbol i
  int nlc = 0;            // complexity of the infinite extension
};

// True iff x (an n-bit word, bit i = symbol i) is aperiodic and the least
// among its rotations, i.e. the unique class representative we keep.
bool is_class_rep(std::uint64_t x, int n) {
  std::uint64_t y = x;
  for (int k = 1; k < n; ++k) {
    y = (y >> 1) | ((y & 1) << (n - 1));
    if (y <= x) return false;  // equal: periodic; smaller: not the least
  }
  return true;
}

BitSeq word_bits(std::uint64_t x, int n, int copies) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n) * copies);
  for (int i = 0; i < n * copies; ++i) {
    bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((x >> (i % n)) & 1u);
  }
  return BitSeq(std::move(bits));
}

int periodic_nlc_of_rep(std::uint64_t x, int n) { return nlc_finite(word_bits(x, n, 3)); }

std::vector<ClassSummary> enumerate_classes(int n) {
  guard_exhaustive(n, "enumerate_classes");
  const std::uint64_t total = 1ull << n;
  unsigned threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (n < 14) threads = 1;

  std::vector<std::vector<ClassSummary>> chunks(threads);
  auto run = [&](unsigned t) {
    const std::uint64_t lo = total / threads * t + std::min<std::uint64_t>(t, total % threads);
    const std::uint64_t hi = lo + total / threads + (t < total % threads ? 1 : 0);
    for (std::uint64_t x = lo; x < hi; ++x) {
      if (is_class_rep(x, n)) {
        chunks[t].push_back(ClassSummary{x, periodic_nlc_of_rep(x, n)});
      }
    }
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t);
    for (auto& th : pool) th.join();
  }

  std::vector<ClassSummary> out;
  for (auto& chunk : chunks) out.insert(out.end(), chunk.begin(), chunk.end());
  return out;
}

// Accumulates one law's verdict; failure strings are built lazily by callers.
struct Check {
  PropertyResult result;

  explicit Check(std::string name) {
    result.name = std::move(name);
    result.pass = true;
  }
  void expect(bool ok, const std::function<std::string()>& cex) {
    ++result.cases;
    if (!ok && result.pass) {
      result.pass = false;
      result.counterexample = cex();
    }
  }
};

std::string describe(const BitSeq& s, const ClassRecord& rec) {
  std::ostringstream os;
  os << s.to_string() << " (c=" << rec.c << " d=" << rec.d << " add=" << rec.add << ")";
  return os.str();
}

struct FamilyExpectation {
  ClassRecord s, u, v;
};

// Stated memberships of the witness family per residue of n.
FamilyExpectation family_expectation(int n) {
  if (n % 4 == 2) {
    const int m = (n - 2) / 4;
    return FamilyExpectation{{n, 2 * m + 1, m, 0, 0, m - 1},
                             {n, 3 * m, m, 0, 0, 0},
                             {n, 3 * m, m + 1, 0, 0, 1}};
  }
  if (n % 8 == 0) {
    const int k = n / 8;
    return FamilyExpectation{{n, 4 * k, 2 * k - 1, 0, 0, 2 * k - 2},
                             {n, 6 * k - 2, 2 * k - 1, 0, 0, 0},
                             {n, 6 * k - 2, 2 * k + 1, 0, 0, 2}};
  }
  const int k = (n - 4) / 8;
  return FamilyExpectation{{n, 4 * k + 2, 2 * k, 0, 0, 2 * k - 2},
                           {n, 6 * k, 2 * k, 0, 0, 0},
                           {n, 6 * k, 2 * k + 2, 0, 0, 2}};
}

bool family_supported(int n) {
  return (n % 4 == 2 && n >= 10) || (n % 8 == 0 && n >= 8) || (n % 8 == 4 && n >= 20);
}

// Membership comparison ignoring q and r (derived fields).
bool matches(const ClassRecord& got, const ClassRecord& want) {
  return got.n == want.n && got.c == want.c && got.d == want.d && got.add == want.add;
}

}  // namespace

DistributionTable brute_distribution(int n) {
  DistributionTable table;
  table.n = n;
  for (const ClassSummary& cls : enumerate_classes(n)) ++table.rows[cls.nlc];
  return table;
}

std::uint64_t brute_count_N(long long n, int d, int t) {
  if (d < 1 || t < 0 || n < 1) throw std::domain_error("brute_count_N: bad parameters");
  if (d > exhaustive_limit()) {
    throw ResourceLimitError("brute_count_N: d " + std::to_string(d) +
                             " above exhaustive limit " + std::to_string(exhaustive_limit()));
  }
  const long long l = n % d;
  auto sym = [&](std::uint64_t word, long long i) -> int {
    const long long idx = ((i % d) + d) % d;
    return static_cast<int>((word >> idx) & 1u);
  };
  std::uint64_t count = 0;
  for (std::uint64_t w = 0; w < (1ull << d); ++w) {
    bool ok;
    if (t == 0) {
      ok = sym(w, l - 1) == sym(w, d - 1);
    } else {
      ok = sym(w, l - 1) != sym(w, d - 1);
      for (int i = 2; ok && i <= t; ++i) ok = sym(w, l - i) == sym(w, d - i);
      if (ok) ok = sym(w, l - t - 1) != sym(w, d - t - 1);
    }
    if (!ok) continue;
    // aperiodicity of the d-bit word
    bool aperiodic = true;
    for (int e = 1; e < d && aperiodic; ++e) {
      if (d % e != 0) continue;
      bool rep = true;
      for (int i = e; i < d && rep; ++i) rep = sym(w, i) == sym(w, i % e);
      if (rep) aperiodic = false;
    }
    if (aperiodic) ++count;
  }
  return count;
}

CountsReport verify_counts(int n) {
  if (n < 3) throw std::domain_error("verify_counts: need n >= 3");
  guard_exhaustive(n, "verify_counts");
  const DistributionTable table = brute_distribution(n);
  auto oracle_row = [&](int omega) -> std::uint64_t {
    auto it = table.rows.find(omega);
    return it == table.rows.end() ? 0 : it->second;
  };

  CountsReport report;
  report.n = n;
  report.pass = true;
  for (int omega = 3 * n / 4; omega <= n - 1; ++omega) {
    CountCheckRow row;
    row.omega = omega;
    row.formula = count_P(n, omega).total;
    row.oracle = oracle_row(omega);
    row.pass = row.formula == BigInt(static_cast<long long>(row.oracle));
    report.pass = report.pass && row.pass;
    report.checked.push_back(std::move(row));
  }
  for (int omega = (n + 1) / 2; omega < 3 * n / 4; ++omega) {
    report.unverified.emplace_back(omega, oracle_row(omega));
  }
  return report;
}

StructureReport verify_structure(int n, int omega) {
  guard_exhaustive(n, "verify_structure");
  StructureReport report;
  report.n = n;
  report.omega = omega;

  std::set<std::string> generated;
  std::uint64_t emitted = 0;
  generate_P(n, omega, [&](const BitSeq& s) {
    ++emitted;
    generated.insert(canonical_rotation(s).to_string());
    return true;
  });
  report.generated = emitted;

  std::set<std::string> expected;
  for (const ClassSummary& cls : enumerate_classes(n)) {
    if (cls.nlc == omega) {
      expected.insert(canonical_rotation(word_bits(cls.rep, n, 1)).to_string());
    }
  }
  report.expected = expected.size();

  constexpr std::size_t kMaxListed = 8;
  for (const auto& key : expected) {
    if (!generated.count(key) && report.missing.size() < kMaxListed) report.missing.push_back(key);
  }
  for (const auto& key : generated) {
    if (!expected.count(key) && report.extra.size() < kMaxListed) report.extra.push_back(key);
  }
  report.pass = report.missing.empty() && report.extra.empty() &&
                generated.size() == emitted && generated.size() == expected.size();
  return report;
}

PropertiesReport verify_properties(int n) {
  guard_exhaustive(n, "verify_properties");
  const int half_up = (n + 1) / 2;
  const bool has_bound = n >= 3;
  const TightBound bound = has_bound ? tight_bound_c0(n) : TightBound{0, false};

  Check single_record("classify-single-record");
  Check membership_nlc("membership-complexity");
  Check witness_unique("witness-pair-uniqueness");
  Check complement_sym("complement-symmetry");
  Check shift_laws("shift-laws");
  Check rep_periodic("representative-periodic-nlc");
  Check offset_range("offset-range-bound");
  Check offset_spacing("offset-equals-spacing");
  Check divisibility("shift-add-divisibility");
  Check unique_threshold("unique-representative-threshold");
  Check tight_all_rep("tight-bound-representatives");
  Check max_spacing_crit("max-spacing-criterion");
  Check max_spacing_nlc("max-spacing-periodic-nlc");
  Check fast_path("fast-path-agreement");
  Check necklace("necklace-identities");
  Check gap_symmetry("count-gap-symmetry");
  Check family_check("counterexample-family");

  // ---- word-level laws over all 2^n words ----
  for (std::uint64_t x = 0; x < (1ull << n); ++x) {
    const BitSeq w = word_bits(x, n, 1);
    const auto recs = classify(w);
    single_record.expect(recs.size() <= 1,
                         [&] { return w.to_string() + " has " + std::to_string(recs.size()) +
                                      " memberships"; });

    const int cf = nlc_finite(w);
    for (const ClassRecord& rec : recs) {
      membership_nlc.expect(cf == rec.c, [&] { return describe(w, rec) + " but nlc=" +
                                                      std::to_string(cf); });
    }
    if (cf >= 1 && 2 * cf >= n) {
      const int pairs = witness_pair_count(w, cf - 1);
      witness_unique.expect(pairs == 1, [&] {
        return w.to_string() + " nlc=" + std::to_string(cf) + " witness pairs=" +
               std::to_string(pairs);
      });
    }

    const BitSeq wc = w.complement();
    complement_sym.expect(nlc_finite(wc) == cf && classify(wc) == recs,
                          [&] { return w.to_string() + " vs complement " + wc.to_string(); });

    for (const ClassRecord& rec : recs) {
      for (int k = 1; rec.c - k >= half_up; ++k) {
        const BitSeq left = rotate_left(w, k);
        bool found = false;
        for (const ClassRecord& lr : classify(left)) {
          found = found || (lr.c == rec.c - k && lr.d == rec.d);
        }
        shift_laws.expect(found && nlc_finite(left) == rec.c - k, [&] {
          return "L^" + std::to_string(k) + "(" + w.to_string() + ") misses (c=" +
                 std::to_string(rec.c - k) + ", d=" + std::to_string(rec.d) + ")";
        });
      }
      const int up = std::min(rec.add, n - rec.c - rec.d);
      for (int k = 1; k <= up; ++k) {
        const BitSeq right = rotate_right(w, k);
        bool found = false;
        for (const ClassRecord& rr : classify(right)) {
          found = found || (rr.c == rec.c + k && rr.d == rec.d && rr.add == rec.add - k);
        }
        shift_laws.expect(found && nlc_finite(right) == rec.c + k, [&] {
          return "R^" + std::to_string(k) + "(" + w.to_string() + ") misses (c=" +
                 std::to_string(rec.c + k) + ", d=" + std::to_string(rec.d) + ", add=" +
                 std::to_string(rec.add - k) + ")";
        });
      }
    }
  }

  // ---- class-level laws over rotation classes of aperiodic words ----
  std::uint64_t class_count = 0;
  std::uint64_t spacing_triggers = 0;
  std::uint64_t spacing_candidates = 0;
  bool nonrep_below_bound = false;

  for (const ClassSummary& cls : enumerate_classes(n)) {
    ++class_count;
    const BitSeq base = word_bits(cls.rep, n, 1);
    const int class_nlc = cls.nlc;

    complement_sym.expect(periodic_nlc_of_rep((~cls.rep) & ((1ull << n) - 1), n) == class_nlc,
                          [&] { return "periodic complement of " + base.to_string(); });

    struct Member {
      int offset;
      BitSeq word;
      ClassRecord rec;
    };
    std::map<int, std::vector<Member>> levels;
    for (int k = 0; k < n; ++k) {
      BitSeq rotated = rotate_right(base, k);
      for (const ClassRecord& rec : classify(rotated)) {
        levels[rec.c].push_back(Member{k, rotated, rec});
      }
    }

    bool any_fast_level = false;
    for (const auto& [c, members] : levels) {
      int max_add = 0;
      int at_max = 0;
      for (const Member& m : members) max_add = std::max(max_add, m.rec.add);
      for (const Member& m : members) at_max += m.rec.add == max_add;

      rep_periodic.expect(c + max_add == class_nlc, [&] {
        return base.to_string() + " level c=" + std::to_string(c) + ": c+max(add)=" +
               std::to_string(c + max_add) + " but periodic nlc=" + std::to_string(class_nlc);
      });

      if (has_bound && c >= bound.c0) {
        any_fast_level = true;
        for (const Member& m : members) {
          tight_all_rep.expect(m.rec.add == max_add,
                               [&] { return describe(m.word, m.rec) + " not representative"; });
        }
      }
      if (has_bound && bound.tight && c == bound.c0 - 1 && at_max < static_cast<int>(members.size())) {
        nonrep_below_bound = true;
      }

      if (n >= 3 && c == half_up) {
        const int threshold = 3 * n / 4 - half_up;
        for (const Member& m : members) {
          if (m.rec.add < threshold) continue;
          unique_threshold.expect(m.rec.add == max_add && at_max == 1, [&] {
            return describe(m.word, m.rec) + " not the unique representative";
          });
        }
      }

      for (const Member& a : members) {
        if (a.rec.d == n - c && 3 * c >= 2 * n - 1) {
          ++spacing_candidates;
          const auto split = max_spacing_decomposition(a.word, c);
          if (split) ++spacing_triggers;
          const bool is_rep = a.rec.add == max_add;
          max_spacing_crit.expect(split.has_value() != is_rep, [&] {
            return describe(a.word, a.rec) +
                   (split ? " decomposes but is representative" : " has no split yet is beaten");
          });
          max_spacing_nlc.expect(periodic_nlc_max_spacing(a.word, c) == class_nlc, [&] {
            return describe(a.word, a.rec) + " shortcut disagrees with oracle";
          });
        }
        for (const Member& b : members) {
          if (a.offset == b.offset) continue;
          const int h = ((b.offset - a.offset) % n + n) % n;
          const auto pair = make_shift_pair(a.word, c, h);
          offset_range.expect(
              pair.has_value() && pair->v_rec == b.rec && pair->within_offset_bound(), [&] {
                return describe(a.word, a.rec) + " -> R^" + std::to_string(h) +
                       (pair ? " offset=" + std::to_string(pair->b) : " missing membership");
              });
          if (a.rec.d == n - c && b.rec.add >= a.rec.add &&
              a.rec.d + b.rec.d <= c + a.rec.add + b.rec.add + 1) {
            offset_spacing.expect(h == b.rec.d, [&] {
              return describe(a.word, a.rec) + " -> R^" + std::to_string(h) + " lands at d2=" +
                     std::to_string(b.rec.d);
            });
          }
          if (a.rec.d == n - c && b.rec.d == h && b.rec.add > a.rec.add) {
            const int d = a.rec.d;
            const bool div_ok = 1 <= h && h < d && (n - d) % h == 0 &&
                                (2 * d == n || d % h != 0);
            divisibility.expect(div_ok, [&] {
              return describe(a.word, a.rec) + " -> R^" + std::to_string(h) + " spacing=" +
                     std::to_string(h);
            });
          }
        }
      }
    }

    if (any_fast_level) {
      fast_path.expect(nlc_periodic_fast(PeriodSeq(base)) == class_nlc,
                       [&] { return "fast path disagrees on " + base.to_string(); });
    }
  }

  if (has_bound && bound.tight && bound.c0 - 1 >= half_up) {
    tight_all_rep.expect(nonrep_below_bound, [&] {
      return "no non-representative member found at c0-1=" + std::to_string(bound.c0 - 1);
    });
  }
  max_spacing_crit.result.note = "decomposition triggered on " + std::to_string(spacing_triggers) +
                                 " of " + std::to_string(spacing_candidates) +
                                 " maximum-spacing members";

  // ---- arithmetic identities ----
  {
    BigInt sum = 0;
    for (long long d = 1; d <= n; ++d) {
      if (n % d == 0) sum += aperiodic_count(d);
    }
    necklace.expect(sum == BigInt::pow2(n), [&] { return "divisor sum of necklace counts"; });
    necklace.expect(aperiodic_count(n) == BigInt(static_cast<long long>(class_count)) * n,
                    [&] { return "class count disagrees with the aperiodic-word count"; });
  }
  for (int d = 2; d <= std::min(n, 12); ++d) {
    for (int t = 0; t <= d; ++t) {
      for (int l = 1; l < d; ++l) {
        const long long n1 = 2ll * d + l;
        const long long n2 = 2ll * d + (d - l);
        gap_symmetry.expect(count_N(n1, d, t) == count_N(n2, d, t), [&] {
          return "d=" + std::to_string(d) + " t=" + std::to_string(t) + " l=" + std::to_string(l);
        });
      }
    }
  }

  if (family_supported(n)) {
    const CounterexampleFamily fam = family_counterexample(n);
    const FamilyExpectation want = family_expectation(n);
    auto check_member = [&](const BitSeq& word, const ClassRecord& expected, const char* tag) {
      const auto recs = classify(word);
      family_check.expect(recs.size() == 1 && matches(recs.front(), expected), [&] {
        return std::string(tag) + "=" + word.to_string() + " does not match the stated class";
      });
    };
    check_member(fam.s, want.s, "s");
    check_member(fam.u, want.u, "u");
    check_member(fam.v, want.v, "v");
    family_check.expect(want.u.c == bound.c0 - 1,
                        [&] { return "family level is not c0-1"; });
    const RepReport rep = shift_class(fam.u, want.u.c);
    bool base_is_rep = false;
    for (const ClassMember& m : rep.representatives) base_is_rep = base_is_rep || m.offset == 0;
    family_check.expect(!base_is_rep, [&] { return "u=" + fam.u.to_string() + " is representative"; });
  } else {
    family_check.result.note = "no family defined at this length";
  }

  PropertiesReport report;
  report.n = n;
  for (Check* chk : {&single_record, &membership_nlc, &witness_unique, &complement_sym,
                     &shift_laws, &rep_periodic, &offset_range, &offset_spacing, &divisibility,
                     &unique_threshold, &tight_all_rep, &max_spacing_crit, &max_spacing_nlc,
                     &fast_path, &necklace, &gap_symmetry, &family_check}) {
    report.results.push_back(chk->result);
  }
  report.pass = std::all_of(report.results.begin(), report.results.end(),
                            [](const PropertyResult& r) { return r.pass; });
  return report;
}

}  // namespace nlc
