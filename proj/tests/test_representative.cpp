#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "nlc/bitseq.hpp"
#include "nlc/complexity.hpp"
#include "nlc/errors.hpp"
#include "nlc/representative.hpp"

using nlc::BitSeq;
using nlc::ClassRecord;

namespace {

const BitSeq kWorkedWord = nlc::parse_bits("10001101000110100010");

bool offset_is_representative(const nlc::RepReport& report, int offset) {
  for (const auto& m : report.representatives) {
    if (m.offset == offset) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("shift class of the 20-symbol example") {
  const auto report = nlc::shift_class(kWorkedWord, 13);
  CHECK(report.c == 13);
  CHECK_FALSE(report.members.empty());
  CHECK(report.members.front().offset == 0);
  CHECK(offset_is_representative(report, 0));
}

TEST_CASE("shift class of the length-10 witness family") {
  const BitSeq u = nlc::parse_bits("1010101101");
  const auto report = nlc::shift_class(u, 6);
  REQUIRE(report.members.size() == 2);
  CHECK(report.members[0].offset == 0);
  CHECK(report.members[0].rec.add == 0);
  CHECK(report.members[1].offset == 5);
  CHECK(report.members[1].rec.add == 1);
  CHECK(report.members[1].rec.d == 3);
  REQUIRE(report.representatives.size() == 1);
  CHECK(report.representatives.front().offset == 5);
  CHECK(report.unique);
  CHECK_FALSE(nlc::is_unique_representative(u));
}

TEST_CASE("shift pairs carry the derived offset") {
  const BitSeq u = nlc::parse_bits("1010101101");
  const auto pair = nlc::make_shift_pair(u, 6, 5);
  REQUIRE(pair.has_value());
  CHECK(pair->v == nlc::rotate_right(u, 5));
  CHECK(pair->b == 5 - (10 - 6 - 2));
  CHECK(pair->b == pair->v_rec.d);
  CHECK(pair->within_offset_bound());
  CHECK_FALSE(nlc::make_shift_pair(u, 6, 1).has_value());
  CHECK_THROWS_AS(nlc::make_shift_pair(u, 6, 0), std::domain_error);
}

TEST_CASE("shift class guards") {
  CHECK_THROWS_AS(nlc::shift_class(kWorkedWord, 12), std::domain_error);
  CHECK_THROWS_AS(nlc::shift_class(nlc::parse_bits("0101"), 2), std::domain_error);
  CHECK_THROWS_AS(nlc::is_unique_representative(nlc::parse_bits("0101")), std::domain_error);
}

TEST_CASE("maximum complexity classes are singletons (n <= 10)") {
  for (int n = 4; n <= 10; ++n) {
    for (std::uint64_t v = 0; v < (1ull << n); ++v) {
      const BitSeq s = BitSeq::from_value(v, n);
      for (const ClassRecord& rec : nlc::classify(s)) {
        if (rec.c != n - 1) continue;
        const auto report = nlc::shift_class(s, rec.c);
        CHECK(report.members.size() == 1);
        CHECK(report.unique);
      }
    }
  }
}

TEST_CASE("high complexity words are unique representatives (n <= 10)") {
  for (int n = 4; n <= 10; ++n) {
    for (std::uint64_t v = 0; v < (1ull << n); ++v) {
      const BitSeq s = BitSeq::from_value(v, n);
      for (const ClassRecord& rec : nlc::classify(s)) {
        if (rec.c >= 3 * n / 4) CHECK(nlc::is_unique_representative(s));
      }
    }
  }
}

TEST_CASE("maximum-spacing tail decomposition") {
  // c = 13 is prime, so no proper divisor b > 1 exists.
  CHECK_FALSE(nlc::max_spacing_decomposition(kWorkedWord, 13).has_value());

  const auto split = nlc::max_spacing_decomposition(nlc::parse_bits("01000101"), 4);
  REQUIRE(split.has_value());
  CHECK(split->b == 2);
  CHECK(split->l == 2);

  // Member with spacing 2 < n - c: the precondition fails.
  CHECK_THROWS_AS(nlc::max_spacing_decomposition(nlc::parse_bits("0101011011"), 5),
                  std::domain_error);
  CHECK_THROWS_AS(nlc::max_spacing_decomposition(nlc::parse_bits("0101"), 2), std::domain_error);
}

TEST_CASE("no decomposition exists when the level is prime (n <= 12)") {
  for (int n = 4; n <= 12; ++n) {
    for (std::uint64_t v = 0; v < (1ull << n); ++v) {
      const BitSeq s = BitSeq::from_value(v, n);
      for (const ClassRecord& rec : nlc::classify(s)) {
        if (rec.d != n - rec.c) continue;
        bool prime = rec.c >= 2;
        for (int f = 2; f * f <= rec.c; ++f) prime = prime && (rec.c % f != 0);
        if (prime) CHECK_FALSE(nlc::max_spacing_decomposition(s, rec.c).has_value());
      }
    }
  }
}

TEST_CASE("periodic complexity through the maximum-spacing shortcut") {
  CHECK(nlc::periodic_nlc_max_spacing(kWorkedWord, 13) == 15);
  CHECK(nlc::periodic_nlc_max_spacing(kWorkedWord, 13) ==
        nlc::nlc_periodic_oracle(nlc::PeriodSeq(kWorkedWord)));
  // Level 5 on the length-10 family word has spacing 2 != n - c.
  CHECK_THROWS_AS(nlc::periodic_nlc_max_spacing(nlc::parse_bits("0101011011"), 5),
                  std::domain_error);
}

TEST_CASE("maximum-spacing shortcut agrees with the oracle (n <= 12)") {
  for (int n = 4; n <= 12; ++n) {
    for (std::uint64_t v = 0; v < (1ull << n); ++v) {
      const BitSeq s = BitSeq::from_value(v, n);
      for (const ClassRecord& rec : nlc::classify(s)) {
        if (rec.d != n - rec.c || 3 * rec.c < 2 * n - 1) continue;
        CHECK(nlc::periodic_nlc_max_spacing(s, rec.c) ==
              nlc::nlc_periodic_oracle(nlc::PeriodSeq(s)));
      }
    }
  }
}

TEST_CASE("witness family at n = 10") {
  const auto fam = nlc::family_counterexample(10);
  CHECK(fam.s == nlc::parse_bits("0101011011"));
  CHECK(fam.u == nlc::parse_bits("1010101101"));
  CHECK(fam.u == nlc::rotate_right(fam.s, 1));
  CHECK(fam.v == nlc::rotate_right(fam.s, 6));

  const auto s_recs = nlc::classify(fam.s);
  REQUIRE(s_recs.size() == 1);
  CHECK(s_recs.front() == ClassRecord{10, 5, 2, 3, 0, 1});
  const auto u_recs = nlc::classify(fam.u);
  REQUIRE(u_recs.size() == 1);
  CHECK(u_recs.front().c == 6);
  CHECK(u_recs.front().d == 2);
  CHECK(u_recs.front().add == 0);
  const auto v_recs = nlc::classify(fam.v);
  REQUIRE(v_recs.size() == 1);
  CHECK(v_recs.front().c == 6);
  CHECK(v_recs.front().d == 3);
  CHECK(v_recs.front().add == 1);
}

TEST_CASE("witness family memberships for all supported n <= 40") {
  for (int n = 8; n <= 40; ++n) {
    const bool supported =
        (n % 4 == 2 && n >= 10) || (n % 8 == 0) || (n % 8 == 4 && n >= 20);
    if (!supported) {
      CHECK_THROWS_AS(nlc::family_counterexample(n), std::domain_error);
      continue;
    }
    const auto fam = nlc::family_counterexample(n);
    const int c0 = nlc::tight_bound_c0(n).c0;

    const auto u_recs = nlc::classify(fam.u);
    REQUIRE(u_recs.size() == 1);
    const auto v_recs = nlc::classify(fam.v);
    REQUIRE(v_recs.size() == 1);
    CHECK(u_recs.front().c == c0 - 1);
    CHECK(v_recs.front().c == c0 - 1);
    CHECK(u_recs.front().add == 0);
    CHECK(v_recs.front().add > u_recs.front().add);

    // u is shift-equivalent to v and therefore not a representative.
    const auto report = nlc::shift_class(fam.u, c0 - 1);
    CHECK_FALSE(offset_is_representative(report, 0));

    const auto s_recs = nlc::classify(fam.s);
    REQUIRE(s_recs.size() == 1);
    if (n % 4 == 2) {
      const int m = (n - 2) / 4;
      CHECK(s_recs.front().c == 2 * m + 1);
      CHECK(s_recs.front().d == m);
      CHECK(s_recs.front().add == m - 1);
      CHECK(u_recs.front().d == m);
      CHECK(v_recs.front().d == m + 1);
      CHECK(v_recs.front().add == 1);
      CHECK(fam.v == nlc::rotate_right(fam.u, 2 * m + 1));
    } else if (n % 8 == 0) {
      const int k = n / 8;
      CHECK(s_recs.front().c == 4 * k);
      CHECK(s_recs.front().d == 2 * k - 1);
      CHECK(s_recs.front().add == 2 * k - 2);
      CHECK(u_recs.front().d == 2 * k - 1);
      CHECK(v_recs.front().d == 2 * k + 1);
      CHECK(v_recs.front().add == 2);
      CHECK(fam.v == nlc::rotate_right(fam.u, 4 * k));
    } else {
      const int k = (n - 4) / 8;
      CHECK(s_recs.front().c == 4 * k + 2);
      CHECK(s_recs.front().d == 2 * k);
      CHECK(s_recs.front().add == 2 * k - 2);
      CHECK(u_recs.front().d == 2 * k);
      CHECK(v_recs.front().d == 2 * k + 2);
      CHECK(v_recs.front().add == 2);
      CHECK(fam.v == nlc::rotate_right(fam.u, 4 * k + 2));
    }
  }
  CHECK_THROWS_AS(nlc::family_counterexample(4), std::domain_error);
  CHECK_THROWS_AS(nlc::family_counterexample(6), std::domain_error);
  CHECK_THROWS_AS(nlc::family_counterexample(12), std::domain_error);
  CHECK_THROWS_AS(nlc::family_counterexample(9), std::domain_error);
}

TEST_CASE("conjecture scan") {
  CHECK(nlc::conjecture_scan(12).empty());
  CHECK(nlc::conjecture_scan(2).empty());
  CHECK_THROWS_AS(nlc::conjecture_scan(63), nlc::ResourceLimitError);
}
