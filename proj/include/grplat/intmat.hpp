#ifndef GRPLAT_INTMAT_HPP
#define GRPLAT_INTMAT_HPP

#include <cstddef>
#include <vector>

#include "grplat/integer.hpp"

namespace grplat {

/// Dense integer matrix, row major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Integer(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& other) const;
  bool is_zero() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

/// Exact rank over the rationals via Bareiss fraction-free elimination
/// (integer-preserving; every division is exact). Consumes its copy.
std::size_t rank_fraction_free(IntMatrix m);

}  // namespace grplat

#endif
