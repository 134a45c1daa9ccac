#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "nlc/bitseq.hpp"
#include "nlc/complexity.hpp"

using nlc::BitSeq;
using nlc::ClassRecord;
using nlc::PeriodSeq;

namespace {

// Reference complexity straight from the definition: one plus the longest
// window occurring at two positions with different successor symbols.
int nlc_reference(const BitSeq& s) {
  const int m = s.size();
  int best = -1;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int len = 0; j + len <= m - 1; ++len) {
        bool equal = true;
        for (int x = 0; x < len && equal; ++x) equal = s.bit(i + x) == s.bit(j + x);
        if (equal && s.bit(i + len) != s.bit(j + len) && len > best) best = len;
      }
    }
  }
  return best + 1;
}

const BitSeq kWorkedWord = nlc::parse_bits("10001101000110100010");

}  // namespace

TEST_CASE("finite complexity examples") {
  CHECK(nlc::nlc_finite(BitSeq({0, 0, 0, 0})) == 0);
  CHECK(nlc::nlc_finite(kWorkedWord) == 13);
  // "000" has the pair of equal windows "00" at 0 and 1 with successors 0, 1.
  CHECK(nlc::nlc_finite(BitSeq({0, 0, 0, 1})) == 3);
  CHECK(nlc::nlc_finite(BitSeq({0, 0, 0, 1})) == nlc_reference(BitSeq({0, 0, 0, 1})));
  CHECK(nlc::nlc_finite(kWorkedWord) == nlc_reference(kWorkedWord));
}

TEST_CASE("finite complexity matches the reference exhaustively (n <= 12)") {
  for (int n = 1; n <= 12; ++n) {
    for (std::uint64_t v = 0; v < (1ull << n); ++v) {
      const BitSeq s = BitSeq::from_value(v, n);
      CHECK(nlc::nlc_finite(s) == nlc_reference(s));
    }
  }
}

TEST_CASE("finite complexity matches the reference on sampled words up to n = 20") {
  std::uint64_t state = 0x243f6a8885a308d3ull;
  auto next = [&] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int n = 13; n <= 20; ++n) {
    for (int trial = 0; trial < 1500; ++trial) {
      const BitSeq s = BitSeq::from_value(next() & ((1ull << n) - 1), n);
      CHECK(nlc::nlc_finite(s) == nlc_reference(s));
    }
  }
}

TEST_CASE("periodic complexity via the tripled prefix") {
  CHECK(nlc::nlc_periodic_oracle(PeriodSeq(nlc::parse_bits("01"))) == 1);
  CHECK(nlc::nlc_periodic_oracle(PeriodSeq(kWorkedWord)) == 15);
  CHECK(nlc::nlc_periodic_oracle(PeriodSeq(nlc::parse_bits("0001"))) == 3);
  CHECK(nlc::nlc_periodic_oracle(PeriodSeq(nlc::parse_bits("0001"))) ==
        nlc_reference(nlc::parse_bits("000100010001")));
  CHECK(nlc::nlc_periodic_oracle(PeriodSeq(nlc::parse_bits("0"))) == 0);
}

TEST_CASE("periodic complexity never needs more than the tripled prefix (n <= 10)") {
  // Doubling the window beyond 3n must not change the answer.
  for (int n = 1; n <= 10; ++n) {
    for (std::uint64_t v = 0; v < (1ull << n); ++v) {
      const BitSeq s = BitSeq::from_value(v, n);
      if (!nlc::is_aperiodic(s)) continue;
      const PeriodSeq p(s);
      const int on_3n = nlc::nlc_periodic_oracle(p);
      CHECK(on_3n == nlc::nlc_finite(p.prefix(6 * n)));
      CHECK(on_3n <= n - 1);
    }
  }
}

TEST_CASE("classify examples") {
  const auto worked = nlc::classify(kWorkedWord);
  REQUIRE(worked.size() == 1);
  CHECK(worked.front() == ClassRecord{20, 13, 7, 2, 5, 2});

  const auto small = nlc::classify(BitSeq({0, 0, 0, 1}));
  REQUIRE(small.size() == 1);
  CHECK(small.front() == ClassRecord{4, 3, 1, 3, 0, 0});

  const auto family = nlc::classify(nlc::parse_bits("0101011011"));
  REQUIRE(family.size() == 1);
  CHECK(family.front() == ClassRecord{10, 5, 2, 3, 0, 1});

  CHECK(nlc::classify(nlc::parse_bits("0101")).empty());
  CHECK(nlc::classify(nlc::parse_bits("01010")).empty());
}

TEST_CASE("membership reconstruction round trip (n <= 12)") {
  // Every classify record must rebuild the word prefix and satisfy the
  // record invariants.
  for (int n = 2; n <= 12; ++n) {
    for (std::uint64_t v = 0; v < (1ull << n); ++v) {
      const BitSeq s = BitSeq::from_value(v, n);
      for (const ClassRecord& rec : nlc::classify(s)) {
        CHECK(rec.c >= (n + 1) / 2);
        CHECK(rec.c <= n - 1);
        CHECK(rec.d >= 1);
        CHECK(rec.d <= std::min(n - rec.c, n / 2));
        CHECK(rec.q * rec.d + rec.r == rec.c + rec.d - 1);
        CHECK(rec.r >= 0);
        CHECK(rec.r < rec.d);
        CHECK(rec.add >= 0);
        CHECK(rec.add < n - rec.c);
        CHECK(nlc::is_aperiodic(s.slice(0, rec.d)));
        for (int i = 0; i < rec.c + rec.d - 1; ++i) CHECK(s.bit(i) == s.bit(i % rec.d));
        CHECK(s.bit(rec.c + rec.d - 1) != s.bit((rec.c + rec.d - 1) % rec.d));
      }
    }
  }
}

TEST_CASE("added terms") {
  CHECK(nlc::added_terms(kWorkedWord, 7) == 2);
  CHECK(nlc::added_terms(BitSeq({0, 0, 0, 1}), 1) == 0);
  CHECK(nlc::added_terms(nlc::parse_bits("0101011011"), 2) == 1);
  CHECK_THROWS_AS(nlc::added_terms(kWorkedWord, 3), std::domain_error);
  CHECK_THROWS_AS(nlc::added_terms(nlc::parse_bits("0101"), 2), std::domain_error);
}

TEST_CASE("tight bound") {
  CHECK(nlc::tight_bound_c0(16).c0 == 11);
  CHECK(nlc::tight_bound_c0(16).tight);
  CHECK(nlc::tight_bound_c0(20).c0 == 13);
  CHECK(nlc::tight_bound_c0(20).tight);
  CHECK(nlc::tight_bound_c0(10).c0 == 7);
  CHECK(nlc::tight_bound_c0(10).tight);
  CHECK(nlc::tight_bound_c0(14).c0 == 10);
  CHECK(nlc::tight_bound_c0(14).tight);
  CHECK(nlc::tight_bound_c0(8).c0 == 5);
  CHECK(nlc::tight_bound_c0(8).tight);

  CHECK(nlc::tight_bound_c0(4) == nlc::TightBound{3, false});
  CHECK(nlc::tight_bound_c0(12) == nlc::TightBound{9, false});
  CHECK(nlc::tight_bound_c0(9) == nlc::TightBound{6, false});
  CHECK(nlc::tight_bound_c0(3) == nlc::TightBound{2, false});
  CHECK_THROWS_AS(nlc::tight_bound_c0(2), std::domain_error);
}

TEST_CASE("fast periodic path") {
  CHECK(nlc::nlc_periodic_fast(PeriodSeq(kWorkedWord)) == 15);
  CHECK(nlc::nlc_periodic_fast(PeriodSeq(nlc::parse_bits("0001"))) == 3);
  CHECK_THROWS_WITH_AS(nlc::nlc_periodic_fast(PeriodSeq(nlc::parse_bits("01"))),
                       "nlc_periodic_fast: below fast-path bound (period too short)",
                       std::domain_error);
  // 010011: the complexity level of every rotation stays below c0(6) = 4.
  CHECK_THROWS_AS(nlc::nlc_periodic_fast(PeriodSeq(nlc::parse_bits("010011"))),
                  std::domain_error);
}

TEST_CASE("fast path agrees with the oracle on its whole domain (n <= 10)") {
  for (int n = 3; n <= 10; ++n) {
    const int c0 = nlc::tight_bound_c0(n).c0;
    for (std::uint64_t v = 0; v < (1ull << n); ++v) {
      const BitSeq s = BitSeq::from_value(v, n);
      if (!nlc::is_aperiodic(s)) continue;
      bool in_domain = false;
      for (int k = 0; k < n && !in_domain; ++k) {
        for (const ClassRecord& rec : nlc::classify(nlc::rotate_left(s, k))) {
          in_domain = in_domain || rec.c >= c0;
        }
      }
      const PeriodSeq p(s);
      if (in_domain) {
        CHECK(nlc::nlc_periodic_fast(p) == nlc::nlc_periodic_oracle(p));
      } else {
        CHECK_THROWS_AS(nlc::nlc_periodic_fast(p), std::domain_error);
      }
    }
  }
}

TEST_CASE("witness pair is unique at high complexity (n <= 12)") {
  for (int n = 2; n <= 12; ++n) {
    for (std::uint64_t v = 0; v < (1ull << n); ++v) {
      const BitSeq s = BitSeq::from_value(v, n);
      const int c = nlc::nlc_finite(s);
      if (c >= 1 && 2 * c >= n) CHECK(nlc::witness_pair_count(s, c - 1) == 1);
    }
  }
}
