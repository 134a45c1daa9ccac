#include "nlc/bitseq.hpp"

#include <stdexcept>

namespace nlc {

BitSeq::BitSeq(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("BitSeq: empty word");
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("BitSeq: symbol out of {0,1}");
  }
}

BitSeq BitSeq::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("parse_bits: empty input");
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("parse_bits: invalid character '" + std::string(1, ch) +
                                  "' at index " + std::to_string(i));
    }
    bits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return BitSeq(std::move(bits));
}

BitSeq BitSeq::from_value(std::uint64_t value, int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("from_value: length out of [1,64]");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    bits[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>((value >> (n - 1 - i)) & 1u);
  }
  return BitSeq(std::move(bits));
}

std::string BitSeq::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = static_cast<char>('0' + bits_[i]);
  return out;
}

BitSeq BitSeq::complement() const {
  std::vector<std::uint8_t> out(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = static_cast<std::uint8_t>(1 - bits_[i]);
  return BitSeq(std::move(out));
}

BitSeq BitSeq::repeat(int times) const {
  if (times < 1) throw std::invalid_argument("repeat: need at least one copy");
  std::vector<std::uint8_t> out;
  out.reserve(bits_.size() * static_cast<std::size_t>(times));
  for (int t = 0; t < times; ++t) out.insert(out.end(), bits_.begin(), bits_.end());
  return BitSeq(std::move(out));
}

BitSeq BitSeq::slice(int first, int last) const {
  if (first < 0 || last > size() || first >= last) {
    throw std::invalid_argument("slice: bad range");
  }
  return BitSeq(std::vector<std::uint8_t>(bits_.begin() + first, bits_.begin() + last));
}

BitSeq parse_bits(std::string_view text) { return BitSeq::parse(text); }

BitSeq rotate_left(const BitSeq& s, long long k) {
  if (k < 0) throw std::invalid_argument("rotate_left: negative shift");
  const int n = s.size();
  const int r = static_cast<int>(k % n);
  if (r == 0) return s;
  std::vector<std::uint8_t> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(s.bit((i + r) % n));
  }
  return BitSeq(std::move(out));
}

BitSeq rotate_right(const BitSeq& s, long long k) {
  if (k < 0) throw std::invalid_argument("rotate_right: negative shift");
  const int n = s.size();
  return rotate_left(s, n - static_cast<int>(k % n));
}

int minimal_period(const BitSeq& s) {
  const int n = s.size();
  for (int e = 1; e < n; ++e) {
    if (n % e != 0) continue;
    bool ok = true;
    for (int i = e; i < n && ok; ++i) ok = s.bit(i) == s.bit(i % e);
    if (ok) return e;
  }
  return n;
}

bool is_aperiodic(const BitSeq& s) { return minimal_period(s) == s.size(); }

BitSeq canonical_rotation(const BitSeq& s) {
  // Booth's least-rotation algorithm over the doubled word.
  const int n = s.size();
  auto at = [&](int i) { return s.bit(i % n); };
  std::vector<int> f(static_cast<std::size_t>(2 * n), -1);
  int k = 0;
  for (int j = 1; j < 2 * n; ++j) {
    const int sj = at(j);
    int i = f[static_cast<std::size_t>(j - k - 1)];
    while (i != -1 && sj != at(k + i + 1)) {
      if (sj < at(k + i + 1)) k = j - i - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (sj != at(k + i + 1)) {
      if (sj < at(k)) k = j;
      f[static_cast<std::size_t>(j - k)] = -1;
    } else {
      f[static_cast<std::size_t>(j - k)] = i + 1;
    }
  }
  return rotate_left(s, k % n);
}

int hamming_weight(const BitSeq& s) {
  int w = 0;
  for (int i = 0; i < s.size(); ++i) w += s.bit(i);
  return w;
}

PeriodSeq::PeriodSeq(BitSeq period) : period_(std::move(period)) {
  if (!is_aperiodic(period_)) {
    throw std::invalid_argument("PeriodSeq: period must be aperiodic (minimal)");
  }
}

PeriodSeq PeriodSeq::from_word(const BitSeq& word) {
  const int e = minimal_period(word);
  return e == word.size() ? PeriodSeq(word) : PeriodSeq(word.slice(0, e));
}

BitSeq PeriodSeq::prefix(int len) const {
  if (len < 1) throw std::invalid_argument("prefix: length must be positive");
  std::vector<std::uint8_t> out(static_cast<std::size_t>(len));
  const int n = period_.size();
  for (int i = 0; i < len; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(period_.bit(i % n));
  }
  return BitSeq(std::move(out));
}

}  // namespace nlc
