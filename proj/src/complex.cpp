#include "grplat/complex.hpp"

#include <algorithm>
#include <map>

namespace grplat {

OrderComplex OrderComplex::of_poset(const FinitePoset& p, std::uint64_t face_cap) {
  OrderComplex k;
  k.faces_.resize(2);
  k.faces_[0].push_back({});  // the empty face

  // chains by depth-first extension: each chain extends by elements above its
  // last vertex
  const int n = p.size();
  std::vector<std::int32_t> chain;
  std::function<void(int)> extend = [&](int last) {
    chain.push_back(last);
    const std::size_t d = chain.size();  // dimension d-1
    if (k.faces_.size() < d + 1) k.faces_.resize(d + 1);
    auto& bucket = k.faces_[d];
    bucket.push_back(chain);
    if (bucket.size() > face_cap)
      throw Error(Errc::face_cap_exceeded,
                  "chain group at dimension " + std::to_string(d - 1) + " exceeds cap");
    for (int y = last + 1; y < n; ++y)
      if (p.less(last, y) || p.less(y, last)) {
        // vertices are kept sorted by index; only extend when the new vertex
        // is comparable to all current ones and index-larger than the last
        bool comparable = true;
        for (std::int32_t v : chain)
          if (!p.less(v, y) && !p.less(y, v)) {
            comparable = false;
            break;
          }
        if (comparable) extend(y);
      }
    chain.pop_back();
  };
  for (int x = 0; x < n; ++x) extend(x);

  while (k.faces_.size() > 1 && k.faces_.back().empty()) k.faces_.pop_back();
  for (auto& bucket : k.faces_) std::sort(bucket.begin(), bucket.end());
  return k;
}

std::vector<std::uint64_t> OrderComplex::f_vector() const {
  std::vector<std::uint64_t> f;
  f.reserve(faces_.size());
  for (const auto& bucket : faces_) f.push_back(bucket.size());
  return f;
}

Integer OrderComplex::reduced_euler_characteristic() const {
  Integer chi = 0;
  int sign = -1;  // dimension -1
  for (const auto& bucket : faces_) {
    chi += sign * Integer(bucket.size());
    sign = -sign;
  }
  return chi;
}

IntMatrix OrderComplex::boundary(int k) const {
  if (k < 0 || k > dim()) return IntMatrix(0, 0);
  const auto& rows_faces = faces(k - 1);
  const auto& cols_faces = faces(k);

  std::map<std::vector<std::int32_t>, std::size_t> row_index;
  for (std::size_t i = 0; i < rows_faces.size(); ++i) row_index.emplace(rows_faces[i], i);

  IntMatrix m(rows_faces.size(), cols_faces.size());
  std::vector<std::int32_t> sub;
  for (std::size_t j = 0; j < cols_faces.size(); ++j) {
    const auto& face = cols_faces[j];
    int sign = 1;
    for (std::size_t drop = 0; drop < face.size(); ++drop) {
      sub.clear();
      for (std::size_t t = 0; t < face.size(); ++t)
        if (t != drop) sub.push_back(face[t]);
      m.at(row_index.at(sub), j) += sign;
      sign = -sign;
    }
  }
  return m;
}

Integer HomologyReport::betti_alternating_sum() const {
  Integer s = 0;
  int sign = -1;
  for (std::uint64_t b : betti) {
    s += sign * Integer(b);
    sign = -sign;
  }
  return s;
}

HomologyReport homology(const OrderComplex& complex) {
  HomologyReport rep;
  rep.f_vector = complex.f_vector();
  rep.reduced_euler_char = complex.reduced_euler_characteristic();

  const int d = complex.dim();
  std::vector<std::size_t> rank(static_cast<std::size_t>(d + 3), 0);
  // rank[k+1] = rank del_k; del_0 is the augmentation onto the empty face
  for (int k = 0; k <= d; ++k) rank[static_cast<std::size_t>(k + 1)] = rank_fraction_free(complex.boundary(k));

  rep.betti.resize(static_cast<std::size_t>(d + 2));
  for (int k = -1; k <= d; ++k) {
    const std::uint64_t fk = complex.face_count(k);
    const std::size_t rk = rank[static_cast<std::size_t>(k + 1)];
    const std::size_t rk1 = k + 2 < static_cast<int>(rank.size()) ? rank[static_cast<std::size_t>(k + 2)] : 0;
    internal_check(fk >= rk + rk1, "betti would be negative");
    rep.betti[static_cast<std::size_t>(k + 1)] = fk - rk - rk1;
  }
  internal_check(rep.betti_alternating_sum() == rep.reduced_euler_char,
                 "Euler-Poincare mismatch");
  return rep;
}

HomologyReport homology_of_poset(const FinitePoset& p, std::uint64_t face_cap) {
  return homology(OrderComplex::of_poset(p, face_cap));
}

CohenMacaulayReport is_cohen_macaulay(const FinitePoset& bounded, std::uint64_t face_cap) {
  if (!bounded.is_bounded() || !bounded.is_pure())
    throw Error(Errc::not_graded, "Cohen-Macaulay check requires a graded poset");

  CohenMacaulayReport rep;
  rep.cohen_macaulay = true;
  const int n = bounded.size();
  for (int x = 0; x < n && rep.cohen_macaulay; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!bounded.less(x, y)) continue;
      FinitePoset open = bounded.induced(bounded.open_interval(x, y));
      HomologyReport h = homology_of_poset(open, face_cap);
      const int top = static_cast<int>(h.betti.size()) - 2;  // dim of the complex
      bool ok = true;
      for (int k = -1; k < top; ++k)
        if (h.betti_at(k) != 0) {
          ok = false;
          break;
        }
      if (!ok) {
        rep.cohen_macaulay = false;
        rep.witness = std::make_pair(x, y);
        break;
      }
    }
  }
  return rep;
}

}  // namespace grplat
