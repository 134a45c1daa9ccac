#include "nlc/structgen.hpp"

#include <stdexcept>
#include <string>

#include "nlc/config.hpp"
#include "nlc/errors.hpp"

namespace nlc {

namespace {

void check_omega(int n, int omega) {
  if (n < 3) throw std::domain_error("generate: need n >= 3");
  if (omega < 3 * n / 4 || omega > n - 1) {
    throw std::domain_error("generate: structure theorem inapplicable for omega=" +
                            std::to_string(omega) + " outside [" + std::to_string(3 * n / 4) +
                            ", " + std::to_string(n - 1) + "]");
  }
}

}  // namespace

StructureSpec StructureSpec::for_spacing(int n, int omega, int d) {
  check_omega(n, omega);
  StructureSpec spec;
  spec.n = n;
  spec.omega = omega;
  spec.d = d;
  if (d >= 1 && d <= n - omega - 1) {
    spec.case_tag = Case::i;
    spec.q = (omega + d - 1) / d;
    spec.r = (omega + d - 1) - spec.q * d;
    spec.free_len = n - omega - d - 1;
  } else if (d >= n - omega && d <= n / 2) {
    spec.case_tag = Case::ii;
    spec.q = (n - 1) / d;
    spec.r = (n - 1) - spec.q * d;
    spec.t = omega + d - n;
  } else {
    throw std::domain_error("structure: spacing outside [1, n-omega-1] and [n-omega, n/2]");
  }
  return spec;
}

bool generate_case_i(int n, int omega, int d, const SeqSink& sink) {
  const StructureSpec spec = StructureSpec::for_spacing(n, omega, d);
  if (spec.case_tag != StructureSpec::Case::i) {
    throw std::domain_error("generate_case_i: spacing outside [1, n-omega-1]");
  }
  const int q = spec.q;
  const int r = spec.r;
  const int free_len = spec.free_len;
  if (d > 62 || free_len > 62) {
    throw ResourceLimitError("generate_case_i: enumeration width exceeds 62 bits");
  }
  for (std::uint64_t hv = 0; hv < (1ull << d); ++hv) {
    const BitSeq head = BitSeq::from_value(hv, d);
    if (!is_aperiodic(head)) continue;
    std::vector<std::uint8_t> stem;
    stem.reserve(static_cast<std::size_t>(omega + d));
    for (int t = 0; t < q; ++t) stem.insert(stem.end(), head.bits().begin(), head.bits().end());
    for (int i = 0; i < r; ++i) stem.push_back(static_cast<std::uint8_t>(head.bit(i)));
    stem.push_back(static_cast<std::uint8_t>(1 - head.bit(r)));
    for (std::uint64_t fv = 0; fv < (1ull << free_len); ++fv) {
      std::vector<std::uint8_t> bits = stem;
      for (int i = 0; i < free_len; ++i) {
        bits.push_back(static_cast<std::uint8_t>((fv >> (free_len - 1 - i)) & 1u));
      }
      bits.push_back(static_cast<std::uint8_t>(1 - head.bit(d - 1)));
      if (!sink(BitSeq(std::move(bits)))) return false;
    }
  }
  return true;
}

bool generate_case_ii(int n, int omega, int d, const SeqSink& sink) {
  const StructureSpec spec = StructureSpec::for_spacing(n, omega, d);
  if (spec.case_tag != StructureSpec::Case::ii) {
    throw std::domain_error("generate_case_ii: spacing outside [n-omega, n/2]");
  }
  const int t = spec.t;
  const int q = spec.q;
  const int r = spec.r;
  if (d > 62) throw ResourceLimitError("generate_case_ii: enumeration width exceeds 62 bits");
  auto admissible = [&](const BitSeq& head) {
    auto at = [&](int i) { return head.bit(((i % d) + d) % d); };
    if (t == 0) return at(n % d - 1 + d) == head.bit(d - 1);
    if (at(n % d - 1 + d) == head.bit(d - 1)) return false;
    for (int i = 2; i <= t; ++i) {
      if (at(n % d - i + d) != at(d - i)) return false;
    }
    return at(n % d - t - 1 + d) != at(d - t - 1);
  };
  for (std::uint64_t hv = 0; hv < (1ull << d); ++hv) {
    const BitSeq head = BitSeq::from_value(hv, d);
    if (!is_aperiodic(head) || !admissible(head)) continue;
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(n));
    for (int rep = 0; rep < q; ++rep) bits.insert(bits.end(), head.bits().begin(), head.bits().end());
    for (int i = 0; i < r; ++i) bits.push_back(static_cast<std::uint8_t>(head.bit(i)));
    bits.push_back(static_cast<std::uint8_t>(1 - head.bit(r)));
    if (!sink(BitSeq(std::move(bits)))) return false;
  }
  return true;
}

bool generate_P(int n, int omega, const SeqSink& sink) {
  check_omega(n, omega);
  for (int d = 1; d <= n - omega - 1; ++d) {
    if (!generate_case_i(n, omega, d, sink)) return false;
  }
  for (int d = n - omega; d <= n / 2; ++d) {
    if (!generate_case_ii(n, omega, d, sink)) return false;
  }
  return true;
}

std::vector<PeriodSeq> collect_P(int n, int omega) {
  if (n > exhaustive_limit()) {
    throw ResourceLimitError("collect_P: n " + std::to_string(n) + " above exhaustive limit " +
                             std::to_string(exhaustive_limit()));
  }
  std::vector<PeriodSeq> out;
  generate_P(n, omega, [&](const BitSeq& s) {
    out.push_back(PeriodSeq(s));
    return true;
  });
  return out;
}

}  // namespace nlc
