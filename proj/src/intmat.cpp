#include "grplat/intmat.hpp"

#include <utility>

namespace grplat {

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out.at(i, j) += v * other.at(k, j);
    }
  return out;
}

bool IntMatrix::is_zero() const {
  for (const Integer& v : a_)
    if (v != 0) return false;
  return true;
}

std::size_t rank_fraction_free(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // pivot: first nonzero entry in the remaining block, scanning by column
    std::size_t pr = rows, pc = cols;
    for (std::size_t j = c; j < cols && pr == rows; ++j)
      for (std::size_t i = r; i < rows; ++i)
        if (m.at(i, j) != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == rows) break;  // all remaining entries are zero
    if (pc != c)
      for (std::size_t i = 0; i < rows; ++i) std::swap(m.at(i, c), m.at(i, pc));
    if (pr != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(pr, j));

    const Integer pivot = m.at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer head = m.at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j)
        m.at(i, j) = (pivot * m.at(i, j) - head * m.at(r, j)) / prev;
      m.at(i, c) = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

}  // namespace grplat
