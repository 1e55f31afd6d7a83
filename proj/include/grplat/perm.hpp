#ifndef GRPLAT_PERM_HPP
#define GRPLAT_PERM_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "grplat/errors.hpp"

namespace grplat {

using Point = std::uint16_t;

/// A permutation of {0,...,n-1} stored as its image array: images()[i] is the
/// image of point i. Composition is left-to-right, (a * b)(x) = b(a(x)), so
/// points are acted on the right as in GAP.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that the image array is a bijection (throws invalid_permutation).
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  Point apply(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Multiplicative order (lcm of cycle lengths).
  std::uint64_t order() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);

  auto operator<=>(const Permutation&) const = default;

  /// Cycle notation on moved points, e.g. "(0 1 2)(4 5)"; "()" for identity.
  std::string to_cycle_string() const;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace grplat

#endif
