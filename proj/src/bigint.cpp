#include "nlc/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace nlc {

namespace {

constexpr std::uint64_t kBase = 1ull << 32;

int bit_length(const std::vector<std::uint32_t>& mag) {
  if (mag.empty()) return 0;
  int bits = 32 * static_cast<int>(mag.size() - 1);
  std::uint32_t top = mag.back();
  while (top != 0) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool get_bit(const std::vector<std::uint32_t>& mag, int i) {
  return (mag[static_cast<std::size_t>(i) / 32] >> (i % 32)) & 1u;
}

// r = r*2 + bit, in place.
void shift_in_bit(std::vector<std::uint32_t>& r, bool bit) {
  std::uint32_t carry = bit ? 1u : 0u;
  for (auto& limb : r) {
    std::uint32_t next = limb >> 31;
    limb = (limb << 1) | carry;
    carry = next;
  }
  if (carry) r.push_back(carry);
}

void trim_mag(std::vector<std::uint32_t>& mag) {
  while (!mag.empty() && mag.back() == 0) mag.pop_back();
}

// mag /= divisor, returns remainder. divisor > 0.
std::uint32_t divmod_small(std::vector<std::uint32_t>& mag, std::uint32_t divisor) {
  std::uint64_t rem = 0;
  for (std::size_t i = mag.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | mag[i];
    mag[i] = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  trim_mag(mag);
  return static_cast<std::uint32_t>(rem);
}

}  // namespace

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v > 0 ? 1 : -1;
  unsigned long long u = v > 0 ? static_cast<unsigned long long>(v)
                               : 0ull - static_cast<unsigned long long>(v);
  while (u != 0) {
    mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffull));
    u >>= 32;
  }
}

BigInt BigInt::pow2(long long k) {
  if (k < 0) throw std::domain_error("pow2: negative exponent");
  BigInt r;
  r.sign_ = 1;
  r.mag_.assign(static_cast<std::size_t>(k / 32) + 1, 0);
  r.mag_.back() = 1u << (k % 32);
  return r;
}

BigInt BigInt::pow10(long long k) {
  if (k < 0) throw std::domain_error("pow10: negative exponent");
  BigInt r = 1;
  for (long long i = 0; i < k; ++i) r *= 10;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

void BigInt::trim() {
  trim_mag(mag_);
  if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  const auto& big = a.size() >= b.size() ? a : b;
  const auto& small = a.size() >= b.size() ? b : a;
  std::vector<std::uint32_t> out(big.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < big.size(); ++i) {
    std::uint64_t sum = carry + big[i] + (i < small.size() ? small[i] : 0u);
    out[i] = static_cast<std::uint32_t>(sum & 0xffffffffull);
    carry = sum >> 32;
  }
  out[big.size()] = static_cast<std::uint32_t>(carry);
  trim_mag(out);
  return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                        (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (diff < 0) {
      diff += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<std::uint32_t>(diff);
  }
  trim_mag(out);
  return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (rhs.sign_ == 0) return *this;
  if (sign_ == 0) return *this = rhs;
  if (sign_ == rhs.sign_) {
    mag_ = add_mag(mag_, rhs.mag_);
    return *this;
  }
  int c = cmp_mag(mag_, rhs.mag_);
  if (c == 0) {
    sign_ = 0;
    mag_.clear();
  } else if (c > 0) {
    mag_ = sub_mag(mag_, rhs.mag_);
  } else {
    mag_ = sub_mag(rhs.mag_, mag_);
    sign_ = rhs.sign_;
  }
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
  if (sign_ == 0 || rhs.sign_ == 0) {
    sign_ = 0;
    mag_.clear();
    return *this;
  }
  std::vector<std::uint32_t> out(mag_.size() + rhs.mag_.size(), 0);
  for (std::size_t i = 0; i < mag_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.mag_.size(); ++j) {
      std::uint64_t cur = out[i + j] + carry +
                          static_cast<std::uint64_t>(mag_[i]) * rhs.mag_[j];
      out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
    }
    std::size_t k = i + rhs.mag_.size();
    while (carry != 0) {
      std::uint64_t cur = out[k] + carry;
      out[k] = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
      ++k;
    }
  }
  trim_mag(out);
  mag_ = std::move(out);
  sign_ *= rhs.sign_;
  return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem) {
  if (b.sign_ == 0) throw std::domain_error("divmod: division by zero");
  if (a.sign_ == 0 || cmp_mag(a.mag_, b.mag_) < 0) {
    quot = BigInt{};
    rem = a;
    return;
  }
  // Binary long division on magnitudes.
  std::vector<std::uint32_t> q(a.mag_.size(), 0);
  std::vector<std::uint32_t> r;
  for (int i = bit_length(a.mag_) - 1; i >= 0; --i) {
    shift_in_bit(r, get_bit(a.mag_, i));
    if (cmp_mag(r, b.mag_) >= 0) {
      r = sub_mag(r, b.mag_);
      q[static_cast<std::size_t>(i) / 32] |= 1u << (i % 32);
    }
  }
  BigInt qq, rr;
  trim_mag(q);
  qq.mag_ = std::move(q);
  qq.sign_ = qq.mag_.empty() ? 0 : a.sign_ * b.sign_;
  rr.mag_ = std::move(r);
  trim_mag(rr.mag_);
  rr.sign_ = rr.mag_.empty() ? 0 : a.sign_;
  quot = std::move(qq);
  rem = std::move(rr);
}

BigInt BigInt::operator/(const BigInt& rhs) const {
  BigInt q, r;
  divmod(*this, rhs, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& rhs) const {
  BigInt q, r;
  divmod(*this, rhs, q, r);
  return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.sign_ = a.mag_.empty() ? 0 : 1;
  b.sign_ = b.mag_.empty() ? 0 : 1;
  while (!b.is_zero()) {
    BigInt q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
  int c = BigInt::cmp_mag(a.mag_, b.mag_) * a.sign_;
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<std::uint32_t> mag = mag_;
  std::string digits;
  while (!mag.empty()) {
    std::uint32_t chunk = divmod_small(mag, 1000000000u);
    if (mag.empty()) {
      std::string head = std::to_string(chunk);
      digits.insert(0, head);
    } else {
      char buf[10];
      for (int i = 8; i >= 0; --i) {
        buf[i] = static_cast<char>('0' + chunk % 10);
        chunk /= 10;
      }
      digits.insert(0, buf, 9);
    }
  }
  return sign_ < 0 ? "-" + digits : digits;
}

unsigned long long BigInt::to_ull() const {
  if (sign_ < 0) throw std::overflow_error("to_ull: negative value");
  if (mag_.size() > 2) throw std::overflow_error("to_ull: value too large");
  unsigned long long v = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
  return v;
}

Fraction Fraction::make(BigInt num, BigInt den) {
  if (den.is_zero()) throw std::domain_error("fraction: zero denominator");
  if (den.signum() < 0) {
    num = -num;
    den = -den;
  }
  if (num.is_zero()) return Fraction{0, 1};
  BigInt g = BigInt::gcd(num, den);
  return Fraction{num / g, den / g};
}

std::string Fraction::to_string() const { return num.to_string() + "/" + den.to_string(); }

std::string Fraction::decimal(int significant_digits) const {
  if (significant_digits < 1) throw std::domain_error("decimal: need at least one digit");
  if (num.is_zero()) return "0";
  const bool negative = num.signum() < 0;
  BigInt p = num.abs();
  const BigInt& q = den;

  // Decimal exponent e with 10^e <= p/q < 10^(e+1).
  long long e = static_cast<long long>(p.to_string().size()) -
                static_cast<long long>(q.to_string().size());
  auto at_least_pow10 = [&](long long k) {
    // p/q >= 10^k ?
    if (k >= 0) return p >= q * BigInt::pow10(k);
    return p * BigInt::pow10(-k) >= q;
  };
  if (!at_least_pow10(e)) --e;

  // Round-half-up mantissa with `significant_digits` digits.
  long long shift = significant_digits - 1 - e;
  BigInt scaled = shift >= 0 ? p * BigInt::pow10(shift) : p / BigInt::pow10(-shift);
  BigInt m, r;
  BigInt::divmod(scaled, q, m, r);
  if (r + r >= q) m += 1;
  std::string digits = m.to_string();
  if (static_cast<int>(digits.size()) > significant_digits) {
    // Rounding carried into a new leading digit (e.g. 0.999.. -> 1.00..).
    digits.pop_back();
    ++e;
  }

  std::string out;
  if (e >= -4 && e < significant_digits) {
    if (e >= 0) {
      out = digits.substr(0, static_cast<std::size_t>(e) + 1);
      if (e + 1 < significant_digits) out += "." + digits.substr(static_cast<std::size_t>(e) + 1);
    } else {
      out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
    }
  } else {
    out = digits.substr(0, 1);
    if (significant_digits > 1) out += "." + digits.substr(1);
    out += "e" + std::string(e < 0 ? "-" : "+") + std::to_string(e < 0 ? -e : e);
  }
  return negative ? "-" + out : out;
}

}  // namespace nlc
