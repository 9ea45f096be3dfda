#pragma once

#include <optional>
#include <vector>

#include "artin/bigint.hpp"

namespace artin {

using IntMatrix = std::vector<std::vector<BigInt>>;
using RatMatrix = std::vector<std::vector<BigRational>>;

// Rank by fraction-free (Bareiss) elimination.
std::size_t bareiss_rank(IntMatrix a);

struct RationalSolution {
  std::vector<BigRational> x;      // length = columns of A
  std::vector<std::size_t> pivots; // chosen columns, in preference order
};

// Solve A x = b over Q. Columns are tried as pivots in `order` (a permutation
// of 0..n-1); non-pivot variables are zero. Empty optional if inconsistent.
std::optional<RationalSolution> solve_preferring(const IntMatrix& a, const std::vector<BigInt>& b,
                                                 const std::vector<std::size_t>& order);

// Pivot columns greedily selected in `order` (columns raising the rank).
std::vector<std::size_t> independent_columns(const IntMatrix& a, const std::vector<std::size_t>& order);

std::optional<RatMatrix> inverse(const RatMatrix& a);

// Incremental row Hermite reduction of an integer lattice.
class RowLattice {
 public:
  explicit RowLattice(std::size_t cols) : cols_(cols), pivot_row_(cols, -1) {}
  void add(std::vector<BigInt> v);
  IntMatrix rows() const;
  std::size_t cols() const { return cols_; }

 private:
  std::size_t cols_;
  std::vector<std::vector<BigInt>> rows_;
  std::vector<int> pivot_row_;  // column -> row index with that pivot
  std::vector<std::size_t> pivot_col_;
};

struct SmithColumns {
  std::vector<BigInt> diag;  // nonnegative, d_i | d_{i+1}; length = cols
  IntMatrix q;               // unimodular cols x cols with P A Q = diag for some unimodular P
};
SmithColumns smith_columns(const IntMatrix& a, std::size_t cols);

struct IntegerSolution {
  std::vector<BigInt> x;
  IntMatrix kernel;  // basis of integer kernel (columns as vectors)
};
// Solve A x = b over Z via column Hermite form with unimodular transform.
std::optional<IntegerSolution> solve_integer(const IntMatrix& a, const std::vector<BigInt>& b);

}  // namespace artin
