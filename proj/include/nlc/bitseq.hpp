#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nlc {

/// Finite word over {0,1} with value semantics. Always non-empty.
class BitSeq {
 public:
  explicit BitSeq(std::vector<std::uint8_t> bits);

  // Text form: one ASCII '0'/'1' per symbol.
  static BitSeq parse(std::string_view text);
  // Bits of `value` read most-significant-first, so ascending values
  // enumerate words in lexicographic order. Requires 1 <= n <= 64.
  static BitSeq from_value(std::uint64_t value, int n);

  int size() const { return static_cast<int>(bits_.size()); }
  int bit(int i) const { return bits_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  std::string to_string() const;
  BitSeq complement() const;
  BitSeq repeat(int times) const;
  // Symbols [first, last).
  BitSeq slice(int first, int last) const;

  friend bool operator==(const BitSeq& a, const BitSeq& b) = default;
  friend auto operator<=>(const BitSeq& a, const BitSeq& b) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

BitSeq parse_bits(std::string_view text);
BitSeq rotate_left(const BitSeq& s, long long k);
BitSeq rotate_right(const BitSeq& s, long long k);

// True iff s is not a whole-number power of a strictly shorter word.
bool is_aperiodic(const BitSeq& s);
// Smallest e dividing n with s equal to its length-e prefix repeated.
int minimal_period(const BitSeq& s);
// Lexicographically least rotation (Booth's algorithm).
BitSeq canonical_rotation(const BitSeq& s);

int hamming_weight(const BitSeq& s);

/// An infinite periodic sequence, carried by its minimal (aperiodic) period.
class PeriodSeq {
 public:
  explicit PeriodSeq(BitSeq period);
  // Accepts any word; drops it to its minimal period first.
  static PeriodSeq from_word(const BitSeq& word);

  const BitSeq& period() const { return period_; }
  int period_length() const { return period_.size(); }
  // Prefix of the infinite extension.
  BitSeq prefix(int len) const;

 private:
  BitSeq period_;
};

}  // namespace nlc
