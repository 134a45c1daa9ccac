#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace nlc {

/// Signed arbitrary-precision integer (sign + 32-bit little-endian limbs).
/// Supports exactly what the counting formulas need: ring arithmetic,
/// truncated division, gcd, powers of two and decimal rendering.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT(google-explicit-constructor): numeric literal ergonomics
  static BigInt pow2(long long k);
  static BigInt pow10(long long k);

  bool is_zero() const { return sign_ == 0; }
  int signum() const { return sign_; }
  BigInt abs() const;

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);
  friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
  friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
  friend BigInt operator*(BigInt lhs, const BigInt& rhs) { return lhs *= rhs; }

  // Truncated toward zero; remainder carries the dividend's sign.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem);
  BigInt operator/(const BigInt& rhs) const;
  BigInt operator%(const BigInt& rhs) const;

  static BigInt gcd(BigInt a, BigInt b);

  friend bool operator==(const BigInt& a, const BigInt& b) = default;
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

  std::string to_string() const;
  // Throws std::overflow_error when the value does not fit (or is negative).
  unsigned long long to_ull() const;

 private:
  int sign_ = 0;                    // -1, 0, +1
  std::vector<std::uint32_t> mag_;  // normalized: empty iff sign_ == 0

  void trim();
  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // Requires a >= b.
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
};

/// Exact rational number, always reduced, denominator positive.
struct Fraction {
  BigInt num = 0;
  BigInt den = 1;

  static Fraction make(BigInt num, BigInt den);
  std::string to_string() const;  // "p/q"
  // Decimal rendering with the given number of significant digits
  // (fixed notation near 1, scientific for very small/large values).
  std::string decimal(int significant_digits) const;

  friend bool operator==(const Fraction& a, const Fraction& b) = default;
};

}  // namespace nlc
