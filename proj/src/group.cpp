#include "grplat/group.hpp"

#include <algorithm>
#include <deque>

#include "grplat/subgrp.hpp"

namespace grplat {

namespace {
// Full multiplication tables are kept for groups up to this order (~9 MB).
constexpr std::uint64_t kMulTableLimit = 1536;
}  // namespace

struct PermGroup::Impl {
  int degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // sorted by image array
  std::unordered_map<Permutation, ElementId, PermHash> index;
  std::vector<ElementId> inverse;
  std::vector<ElementId> mul_table;  // empty unless order <= kMulTableLimit
  ElementId identity = 0;

  void finish() {
    index.reserve(elements.size() * 2);
    for (std::size_t i = 0; i < elements.size(); ++i)
      index.emplace(elements[i], static_cast<ElementId>(i));
    identity = index.at(Permutation::identity(degree));
    inverse.resize(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i)
      inverse[i] = index.at(elements[i].inverse());
    if (elements.size() <= kMulTableLimit) {
      const std::size_t n = elements.size();
      mul_table.resize(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          mul_table[a * n + b] = index.at(elements[a] * elements[b]);
    }
  }
};

PermGroup PermGroup::from_generators(int degree, std::vector<Permutation> gens,
                                     std::uint64_t limit) {
  if (limit < 1) throw Error(Errc::enumeration_limit_exceeded, "limit must be >= 1");
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw Error(Errc::invalid_permutation, "generator degree mismatch");

  std::vector<Permutation> elems;
  std::unordered_map<Permutation, ElementId, PermHash> seen;
  auto push = [&](Permutation p) -> bool {
    if (seen.contains(p)) return false;
    seen.emplace(p, static_cast<ElementId>(elems.size()));
    elems.push_back(std::move(p));
    return true;
  };
  push(Permutation::identity(degree));
  std::size_t head = 0;
  while (head < elems.size()) {
    const Permutation x = elems[head++];
    for (const auto& g : gens) {
      if (push(x * g) && elems.size() > limit)
        throw Error(Errc::enumeration_limit_exceeded,
                    "group closure exceeds " + std::to_string(limit) + " elements");
    }
  }
  std::sort(elems.begin(), elems.end());
  return from_sorted_elements(degree, std::move(gens), std::move(elems));
}

PermGroup PermGroup::from_sorted_elements(int degree, std::vector<Permutation> gens,
                                          std::vector<Permutation> sorted_elements) {
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->generators = std::move(gens);
  impl->elements = std::move(sorted_elements);
  impl->finish();
  return PermGroup(std::move(impl));
}

PermGroup PermGroup::trivial(int degree) {
  return from_generators(degree, {});
}

int PermGroup::degree() const { return impl_->degree; }
std::uint64_t PermGroup::order() const { return impl_->elements.size(); }
const std::vector<Permutation>& PermGroup::elements() const { return impl_->elements; }
const std::vector<Permutation>& PermGroup::generators() const { return impl_->generators; }
const Permutation& PermGroup::element(ElementId id) const { return impl_->elements[id]; }
ElementId PermGroup::identity_id() const { return impl_->identity; }

std::optional<ElementId> PermGroup::find(const Permutation& p) const {
  if (p.degree() != impl_->degree) return std::nullopt;
  auto it = impl_->index.find(p);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

ElementId PermGroup::id_of(const Permutation& p) const {
  auto id = find(p);
  if (!id) throw Error(Errc::not_an_element, "permutation is not in the group");
  return *id;
}

ElementId PermGroup::mul(ElementId a, ElementId b) const {
  if (!impl_->mul_table.empty())
    return impl_->mul_table[static_cast<std::size_t>(a) * impl_->elements.size() + b];
  return impl_->index.at(impl_->elements[a] * impl_->elements[b]);
}

ElementId PermGroup::inv(ElementId a) const { return impl_->inverse[a]; }

ElementId PermGroup::conj(ElementId x, ElementId g) const {
  return mul(mul(g, x), inv(g));
}

std::uint64_t PermGroup::element_order(ElementId a) const {
  return impl_->elements[a].order();
}

bool PermGroup::is_subgroup_of(const PermGroup& G) const {
  if (same_table_as(G)) return true;
  if (degree() != G.degree() || order() > G.order()) return false;
  for (const auto& p : elements())
    if (!G.contains(p)) return false;
  return true;
}

bool PermGroup::is_transitive() const {
  const int n = degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<Point> queue{0};
  seen[0] = true;
  int count = 1;
  while (!queue.empty()) {
    Point x = queue.front();
    queue.pop_front();
    for (const auto& g : generators()) {
      Point y = g.apply(x);
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        queue.push_back(y);
      }
    }
  }
  return count == n;
}

PermGroup materialize_subgroup(const PermGroup& G, const std::vector<ElementId>& ids,
                               std::vector<Permutation> gens) {
  std::vector<Permutation> elems;
  elems.reserve(ids.size());
  for (ElementId id : ids) elems.push_back(G.element(id));
  std::sort(elems.begin(), elems.end());
  if (gens.empty() && ids.size() > 1) {
    for (ElementId id : mask::find_generators(G, ids)) gens.push_back(G.element(id));
  }
  return PermGroup::from_sorted_elements(G.degree(), std::move(gens), std::move(elems));
}

// ---------------------------------------------------------------- perm-core

PermGroup subgroup_generated(const PermGroup& G, const std::vector<Permutation>& seeds) {
  std::vector<ElementId> gen_ids;
  gen_ids.reserve(seeds.size());
  for (const auto& s : seeds) gen_ids.push_back(G.id_of(s));
  SubgroupMask sub = mask::closure(G, gen_ids);
  std::vector<Permutation> gens;
  for (const auto& s : seeds)
    if (!s.is_identity()) gens.push_back(s);
  return materialize_subgroup(G, mask::ids_of(sub.elems), std::move(gens));
}

std::vector<Coset> right_cosets(const PermGroup& H, const PermGroup& G) {
  SubgroupMask h = mask::from_group(G, H);
  std::vector<Coset> out;
  out.reserve(static_cast<std::size_t>(G.order() / H.order()));
  for (ElementId rep : mask::coset_reps(G, h.elems))
    out.push_back(Coset{H, G.element(rep)});
  std::sort(out.begin(), out.end(), [](const Coset& a, const Coset& b) {
    return a.representative < b.representative;
  });
  return out;
}

bool coset_generates(const PermGroup& H, const Permutation& g, const PermGroup& G) {
  SubgroupMask h = mask::from_group(G, H);
  return mask::extend_generates(G, h, G.id_of(g));
}

PermGroup normal_core(const PermGroup& H, const PermGroup& G) {
  SubgroupMask core = mask::normal_core(G, mask::from_group(G, H));
  return materialize_subgroup(G, mask::ids_of(core.elems), {});
}

PermGroup normalizer(const PermGroup& H, const PermGroup& G) {
  SubgroupMask n = mask::normalizer(G, mask::from_group(G, H));
  return materialize_subgroup(G, mask::ids_of(n.elems), {});
}

PermGroup stabilizer(const PermGroup& G, Point point) {
  if (point >= G.degree())
    throw Error(Errc::precondition_failed, "stabilizer point out of range");
  std::vector<ElementId> ids;
  for (ElementId i = 0; i < G.order(); ++i)
    if (G.element(i).apply(point) == point) ids.push_back(i);
  return materialize_subgroup(G, ids, {});
}

PermGroup action_on_cosets(const PermGroup& G, const PermGroup& H) {
  SubgroupMask h = mask::from_group(G, H);
  const std::vector<ElementId> reps = mask::coset_reps(G, h.elems);
  const int deg = static_cast<int>(reps.size());

  // coset id of H*x for every x, via the canonical representative
  std::vector<int> coset_of(static_cast<std::size_t>(G.order()), -1);
  for (std::size_t c = 0; c < reps.size(); ++c) {
    for (auto hid = h.elems.find_first(); hid != ElemMask::npos; hid = h.elems.find_next(hid))
      coset_of[G.mul(static_cast<ElementId>(hid), reps[c])] = static_cast<int>(c);
  }

  std::vector<Permutation> images;
  for (const auto& g : G.generators()) {
    ElementId gid = G.id_of(g);
    std::vector<Point> img(static_cast<std::size_t>(deg));
    for (int c = 0; c < deg; ++c)
      img[static_cast<std::size_t>(c)] =
          static_cast<Point>(coset_of[G.mul(reps[static_cast<std::size_t>(c)], gid)]);
    images.emplace_back(std::move(img));
  }
  return PermGroup::from_generators(deg, std::move(images));
}

PermGroup direct_product(const PermGroup& A, const PermGroup& B, std::uint64_t limit) {
  const int da = A.degree(), db = B.degree();
  std::vector<Permutation> gens;
  for (const auto& g : A.generators()) {
    std::vector<Point> img(static_cast<std::size_t>(da + db));
    for (int i = 0; i < da; ++i) img[i] = g.apply(static_cast<Point>(i));
    for (int i = 0; i < db; ++i) img[da + i] = static_cast<Point>(da + i);
    gens.emplace_back(std::move(img));
  }
  for (const auto& g : B.generators()) {
    std::vector<Point> img(static_cast<std::size_t>(da + db));
    for (int i = 0; i < da; ++i) img[i] = static_cast<Point>(i);
    for (int i = 0; i < db; ++i) img[da + i] = static_cast<Point>(da + g.apply(static_cast<Point>(i)));
    gens.emplace_back(std::move(img));
  }
  return PermGroup::from_generators(da + db, std::move(gens), limit);
}

}  // namespace grplat
