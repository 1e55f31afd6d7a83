#ifndef GRPLAT_TESTS_HELPERS_HPP
#define GRPLAT_TESTS_HELPERS_HPP

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "grplat/catalog.hpp"
#include "grplat/group.hpp"

namespace grplat::test {

inline std::string temp_path(const std::string& suffix) {
  static std::atomic<int> counter{0};
  auto dir = std::filesystem::temp_directory_path();
  return (dir / ("grplat_test_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter.fetch_add(1)) + suffix))
      .string();
}

inline std::string fixtures_dir() { return GRPLAT_FIXTURES_DIR; }

inline const std::vector<CatalogEntry>& core_catalog() {
  static const std::vector<CatalogEntry> entries =
      load_catalog(fixtures_dir() + "/core.catalog");
  return entries;
}

inline const CatalogEntry& fixture(int degree, int id) {
  for (const auto& e : core_catalog())
    if (e.degree == degree && e.id == id) return e;
  throw std::runtime_error("fixture not found");
}

inline PermGroup fixture_group(int degree, int id) {
  const CatalogEntry& e = fixture(degree, id);
  return PermGroup::from_generators(e.degree, e.generators);
}

/// Independent closure oracle: repeated pairwise multiplication to a fixpoint,
/// no id tables, no early exits.
inline std::set<Permutation> naive_closure(int degree, std::vector<Permutation> gens) {
  std::set<Permutation> elems{Permutation::identity(degree)};
  for (const auto& g : gens) elems.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Permutation> snapshot(elems.begin(), elems.end());
    for (const auto& a : snapshot)
      for (const auto& b : snapshot)
        if (elems.insert(a * b).second) grew = true;
  }
  return elems;
}

inline Permutation perm(std::vector<int> images) {
  std::vector<Point> img(images.begin(), images.end());
  return Permutation(std::move(img));
}

}  // namespace grplat::test

#endif
