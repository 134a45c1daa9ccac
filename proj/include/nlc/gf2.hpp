#pragma once

#include <cstdint>
#include <vector>

namespace nlc {

/// Dense binary matrix, rows packed into 64-bit blocks.
class Gf2Matrix {
 public:
  Gf2Matrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  void set(int r, int c, bool v);
  bool get(int r, int c) const;

  // Appends one column (used to augment with a right-hand side).
  Gf2Matrix with_column(const std::vector<std::uint8_t>& column) const;

  friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) = default;

 private:
  friend int gf2_rank(Gf2Matrix m);
  int rows_ = 0;
  int cols_ = 0;
  int words_per_row_ = 0;
  std::vector<std::uint64_t> data_;
};

// Rank over the two-element field (Gaussian elimination on a copy).
int gf2_rank(Gf2Matrix m);

/// Linear system A x = b for the trailing-pattern constraints: row i
/// (1-indexed) has ones at columns (n-i) mod d and (d-i) mod d — a single
/// one when those coincide — and b = (1, 0, ..., 0, 1).
struct ConstraintSystem {
  Gf2Matrix matrix;
  std::vector<std::uint8_t> rhs;
};

ConstraintSystem build_constraint_system(long long n, int d, int t);

}  // namespace nlc
