#include "nlc/gf2.hpp"

#include <stdexcept>

namespace nlc {

Gf2Matrix::Gf2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64) {
  if (rows < 0 || cols < 1) throw std::invalid_argument("Gf2Matrix: bad shape");
  data_.assign(static_cast<std::size_t>(rows) * words_per_row_, 0);
}

void Gf2Matrix::set(int r, int c, bool v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("Gf2Matrix::set");
  auto& word = data_[static_cast<std::size_t>(r) * words_per_row_ + c / 64];
  const std::uint64_t mask = 1ull << (c % 64);
  if (v) {
    word |= mask;
  } else {
    word &= ~mask;
  }
}

bool Gf2Matrix::get(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("Gf2Matrix::get");
  return (data_[static_cast<std::size_t>(r) * words_per_row_ + c / 64] >> (c % 64)) & 1u;
}

Gf2Matrix Gf2Matrix::with_column(const std::vector<std::uint8_t>& column) const {
  if (static_cast<int>(column.size()) != rows_) {
    throw std::invalid_argument("with_column: size mismatch");
  }
  Gf2Matrix out(rows_, cols_ + 1);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.set(r, c, get(r, c));
    out.set(r, cols_, column[static_cast<std::size_t>(r)] != 0);
  }
  return out;
}

int gf2_rank(Gf2Matrix m) {
  const int words = m.words_per_row_;
  auto row = [&](int r) { return m.data_.data() + static_cast<std::size_t>(r) * words; };
  int rank = 0;
  for (int c = 0; c < m.cols_ && rank < m.rows_; ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows_; ++r) {
      if (m.get(r, c)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int w = 0; w < words; ++w) std::swap(row(pivot)[w], row(rank)[w]);
    }
    for (int r = rank + 1; r < m.rows_; ++r) {
      if (m.get(r, c)) {
        for (int w = 0; w < words; ++w) row(r)[w] ^= row(rank)[w];
      }
    }
    ++rank;
  }
  return rank;
}

ConstraintSystem build_constraint_system(long long n, int d, int t) {
  if (d < 1 || t < 1 || n < 1) {
    throw std::domain_error("build_constraint_system: need n >= 1, d >= 1, t >= 1");
  }
  Gf2Matrix matrix(t + 1, d);
  std::vector<std::uint8_t> rhs(static_cast<std::size_t>(t) + 1, 0);
  rhs.front() = 1;
  rhs.back() = 1;
  for (int i = 1; i <= t + 1; ++i) {
    const int c1 = static_cast<int>(((n - i) % d + d) % d);
    const int c2 = ((d - i) % d + d) % d;
    matrix.set(i - 1, c1, true);
    matrix.set(i - 1, c2, true);
  }
  return ConstraintSystem{std::move(matrix), std::move(rhs)};
}

}  // namespace nlc
