#ifndef GRPLAT_COMPLEX_HPP
#define GRPLAT_COMPLEX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "grplat/integer.hpp"
#include "grplat/intmat.hpp"
#include "grplat/poset.hpp"

namespace grplat {

inline constexpr std::uint64_t kDefaultFaceCap = 5'000'000;

/// Order complex of a poset: faces are the chains, the empty face included.
/// faces(k) lists the k-dimensional faces as sorted vertex-index vectors;
/// dimensions run from -1 (the empty face) to dim().
class OrderComplex {
 public:
  /// Enumerates all chains; throws face_cap_exceeded when any single
  /// dimension holds more than face_cap faces.
  static OrderComplex of_poset(const FinitePoset& p,
                               std::uint64_t face_cap = kDefaultFaceCap);

  int dim() const { return static_cast<int>(faces_.size()) - 2; }
  const std::vector<std::vector<std::int32_t>>& faces(int k) const {
    return faces_[static_cast<std::size_t>(k + 1)];
  }
  std::uint64_t face_count(int k) const {
    return faces_[static_cast<std::size_t>(k + 1)].size();
  }
  /// f-vector starting at dimension -1: (f_-1, f_0, ..., f_dim).
  std::vector<std::uint64_t> f_vector() const;
  Integer reduced_euler_characteristic() const;

  /// Boundary map del_k : C_k -> C_{k-1} of the augmented chain complex, with
  /// the alternating-sign convention on sorted vertex lists.
  IntMatrix boundary(int k) const;

 private:
  std::vector<std::vector<std::vector<std::int32_t>>> faces_;  // [k+1][face]
};

struct HomologyReport {
  std::vector<std::uint64_t> f_vector;      // from dimension -1
  Integer reduced_euler_char = 0;
  std::vector<std::uint64_t> betti;         // reduced Betti numbers, from dim -1
  Integer betti_alternating_sum() const;

  std::uint64_t betti_at(int k) const {
    std::size_t i = static_cast<std::size_t>(k + 1);
    return i < betti.size() ? betti[i] : 0;
  }
};

/// Reduced rational homology via exact integer ranks:
/// beta_k = f_k - rank del_k - rank del_{k+1}.
HomologyReport homology(const OrderComplex& complex);

HomologyReport homology_of_poset(const FinitePoset& p,
                                 std::uint64_t face_cap = kDefaultFaceCap);

struct CohenMacaulayReport {
  bool cohen_macaulay = false;
  /// First open interval (x,y) with homology below top dimension, if any.
  std::optional<std::pair<int, int>> witness;
};

/// Direct Cohen-Macaulay verification of a graded poset: every open interval
/// (x,y), including (0^,1^), has vanishing reduced homology below the top
/// dimension. Throws not_graded when the poset is not bounded + pure.
CohenMacaulayReport is_cohen_macaulay(const FinitePoset& bounded,
                                      std::uint64_t face_cap = kDefaultFaceCap);

}  // namespace grplat

#endif
