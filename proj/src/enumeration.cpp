#include "nlc/enumeration.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "nlc/gf2.hpp"

namespace nlc {

namespace {

std::vector<long long> divisors_of(long long m) {
  std::vector<long long> small, large;
  for (long long i = 1; i * i <= m; ++i) {
    if (m % i != 0) continue;
    small.push_back(i);
    if (i != m / i) large.push_back(m / i);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_prime(long long m) {
  if (m < 2) return false;
  for (long long i = 2; i * i <= m; ++i) {
    if (m % i == 0) return false;
  }
  return true;
}

long long largest_proper_divisor(long long m) {
  for (long long i = 2; i * i <= m; ++i) {
    if (m % i == 0) return m / i;
  }
  return 1;  // prime or 1
}

BigInt count_N_impl(long long n, long long d, long long t);

// Memoized on (n mod d, d, t): the constraint indices only see n mod d.
BigInt count_N_memo(long long n, long long d, long long t) {
  static std::map<std::tuple<long long, long long, long long>, BigInt> cache;
  static std::mutex mutex;
  const auto key = std::make_tuple(n % d, d, t);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  BigInt value = count_N_impl(n, d, t);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(value)).first->second;
}

BigInt count_N_impl(long long n, long long d, long long t) {
  if (t == 0) {
    if (n % d == 0) return aperiodic_count(d);  // constraint is vacuous
    if (is_prime(d)) return BigInt::pow2(d - 1) - 2;
    BigInt v = BigInt::pow2(d - 1) - 2;
    for (long long e : divisors_of(d)) {
      if (e > 1 && e < d) v -= count_N_memo(n, e, 0);
    }
    return v;
  }
  if (d == 1) return 0;  // first constraint forces !s_0 = s_0
  if (n % d == 0) return 0;
  if (is_prime(d)) {
    if (t >= d) return 0;
    if (t <= d - 2) return BigInt::pow2(d - t - 1);
    return 2;  // t == d-1
  }
  const long long e_max = largest_proper_divisor(d);
  if (t < e_max) {
    BigInt v = BigInt::pow2(d - t - 1);
    for (long long e : divisors_of(d)) {
      if (e > 1 && e < d) v -= count_N_memo(n, e, t);
    }
    return v;
  }
  // Past the largest proper divisor every solution is automatically
  // aperiodic, so the count is purely linear-algebraic.
  const ConstraintSystem sys =
      build_constraint_system(n, static_cast<int>(d), static_cast<int>(t));
  const int rank_a = gf2_rank(sys.matrix);
  const int rank_b = gf2_rank(sys.matrix.with_column(sys.rhs));
  if (rank_a != rank_b) return 0;
  return BigInt::pow2(d - rank_a);
}

}  // namespace

int mobius(long long m) {
  if (m < 1) throw std::domain_error("mobius: need m >= 1");
  int primes = 0;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;
    ++primes;
  }
  if (m > 1) ++primes;
  return primes % 2 == 0 ? 1 : -1;
}

BigInt aperiodic_count(long long d) {
  if (d < 1) throw std::domain_error("aperiodic_count: need d >= 1");
  BigInt total = 0;
  for (long long e : divisors_of(d)) {
    const int mu = mobius(e);
    if (mu == 1) {
      total += BigInt::pow2(d / e);
    } else if (mu == -1) {
      total -= BigInt::pow2(d / e);
    }
  }
  return total;
}

BigInt count_N(long long n, long long d, long long t) {
  if (d < 1 || t < 0 || d > n / 2) {
    throw std::domain_error("count_N: need 1 <= d <= n/2 and t >= 0");
  }
  return count_N_memo(n, d, t);
}

CountBreakdown count_P(long long n, long long omega) {
  if (n < 3) throw std::domain_error("count_P: need n >= 3");
  const long long lower = 3 * n / 4;
  if (omega < lower || omega > n - 1) {
    throw std::domain_error("count_P: formula inapplicable for omega=" + std::to_string(omega) +
                            " outside [" + std::to_string(lower) + ", " + std::to_string(n - 1) +
                            "]");
  }
  CountBreakdown out;
  out.n = n;
  out.omega = omega;
  out.case_i_subtotal = 0;
  out.total = 0;
  for (long long d = 1; d <= n - omega - 1; ++d) {
    BigInt term = aperiodic_count(d) * BigInt::pow2(n - omega - 1 - d);
    out.case_i_subtotal += term;
    out.total += term;
    out.case_i_terms.push_back(CountTerm{d, 0, std::move(term)});
  }
  for (long long d = n - omega; d <= n / 2; ++d) {
    const long long t = omega + d - n;
    BigInt term = count_N(n, d, t);
    out.total += term;
    out.case_ii_terms.push_back(CountTerm{d, t, std::move(term)});
  }
  out.probability = Fraction::make(BigInt(n) * out.total, aperiodic_count(n));
  return out;
}

}  // namespace nlc
