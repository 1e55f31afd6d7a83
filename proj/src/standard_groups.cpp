#include "grplat/standard_groups.hpp"

#include <numeric>

namespace grplat {

namespace {

Permutation cycle(int n) {
  std::vector<Point> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = static_cast<Point>((i + 1) % n);
  return Permutation(std::move(img));
}

Permutation transposition(int n, int a, int b) {
  std::vector<Point> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), Point{0});
  std::swap(img[static_cast<std::size_t>(a)], img[static_cast<std::size_t>(b)]);
  return Permutation(std::move(img));
}

// action of an invertible 2x2 matrix over F_3 on the 8 nonzero vectors
Permutation f3_matrix_perm(int a, int b, int c, int d) {
  auto norm = [](int v) { return ((v % 3) + 3) % 3; };
  auto index = [](int x, int y) { return 3 * x + y - 1; };
  std::vector<Point> img(8);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      if (x == 0 && y == 0) continue;
      int nx = norm(a * x + b * y), ny = norm(c * x + d * y);
      img[static_cast<std::size_t>(index(x, y))] = static_cast<Point>(index(nx, ny));
    }
  return Permutation(std::move(img));
}

Permutation affine_perm(int p, int mult, int add) {
  std::vector<Point> img(static_cast<std::size_t>(p));
  for (int x = 0; x < p; ++x)
    img[static_cast<std::size_t>(x)] = static_cast<Point>((mult * x + add) % p);
  return Permutation(std::move(img));
}

}  // namespace

PermGroup cyclic_group(int n) {
  if (n == 1) return PermGroup::trivial(1);
  return PermGroup::from_generators(n, {cycle(n)});
}

PermGroup symmetric_group(int n) {
  if (n < 2) return PermGroup::trivial(1);
  return PermGroup::from_generators(n, {cycle(n), transposition(n, 0, 1)});
}

PermGroup alternating_group(int n) {
  std::vector<Point> three(static_cast<std::size_t>(n));
  std::iota(three.begin(), three.end(), Point{0});
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  std::vector<Permutation> gens{Permutation(std::move(three))};
  if (n % 2 == 1) {
    gens.push_back(cycle(n));
  } else {
    std::vector<Point> big(static_cast<std::size_t>(n));
    big[0] = 0;
    for (int i = 1; i < n; ++i)
      big[static_cast<std::size_t>(i)] = static_cast<Point>(1 + (i % (n - 1)));
    gens.emplace_back(std::move(big));
  }
  return PermGroup::from_generators(n, std::move(gens));
}

PermGroup dihedral_group(int n) {
  std::vector<Point> flip(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) flip[static_cast<std::size_t>(i)] = static_cast<Point>((n - i) % n);
  return PermGroup::from_generators(n, {cycle(n), Permutation(std::move(flip))});
}

PermGroup dicyclic_group(int n) {
  // elements a^i b^j (i mod 2n, j mod 2) at point i + 2n*j; right-regular
  const int m = 2 * n;
  std::vector<Point> ra(static_cast<std::size_t>(2 * m)), rb(static_cast<std::size_t>(2 * m));
  for (int i = 0; i < m; ++i) {
    ra[static_cast<std::size_t>(i)] = static_cast<Point>((i + 1) % m);           // a^i * a
    ra[static_cast<std::size_t>(i + m)] = static_cast<Point>((i - 1 + m) % m + m);  // a^i b * a = a^(i-1) b
    rb[static_cast<std::size_t>(i)] = static_cast<Point>(i + m);                 // a^i * b
    rb[static_cast<std::size_t>(i + m)] = static_cast<Point>((i + n) % m);       // a^i b * b = a^(i+n)
  }
  return PermGroup::from_generators(2 * m, {Permutation(std::move(ra)), Permutation(std::move(rb))});
}

PermGroup sl23_group() {
  return PermGroup::from_generators(8, {f3_matrix_perm(1, 1, 0, 1), f3_matrix_perm(0, -1, 1, 0)});
}

PermGroup gl23_group() {
  return PermGroup::from_generators(
      8, {f3_matrix_perm(1, 1, 0, 1), f3_matrix_perm(0, -1, 1, 0), f3_matrix_perm(1, 0, 0, -1)});
}

PermGroup f20_group() {
  return PermGroup::from_generators(5, {affine_perm(5, 1, 1), affine_perm(5, 2, 0)});
}

PermGroup f21_group() {
  return PermGroup::from_generators(7, {affine_perm(7, 1, 1), affine_perm(7, 2, 0)});
}

std::vector<NamedGroup> small_group_corpus() {
  std::vector<NamedGroup> out;
  auto add = [&](std::string name, PermGroup g) { out.push_back({std::move(name), std::move(g)}); };

  for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 18, 24, 30})
    add("C" + std::to_string(n), cyclic_group(n));

  add("C2xC2", direct_product(cyclic_group(2), cyclic_group(2)));
  add("C2xC2xC2", direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(2))));
  add("C4xC2", direct_product(cyclic_group(4), cyclic_group(2)));
  add("C3xC3", direct_product(cyclic_group(3), cyclic_group(3)));
  add("C2xC6", direct_product(cyclic_group(2), cyclic_group(6)));

  add("S3", symmetric_group(3));
  add("S4", symmetric_group(4));
  add("A4", alternating_group(4));
  add("D8", dihedral_group(4));
  add("D10", dihedral_group(5));
  add("D12", dihedral_group(6));
  add("D16", dihedral_group(8));
  add("Q8", dicyclic_group(2));
  add("Q16", dicyclic_group(4));
  add("SL23", sl23_group());
  add("GL23", gl23_group());
  add("F20", f20_group());
  add("F21", f21_group());
  add("C2xA4", direct_product(cyclic_group(2), alternating_group(4)));
  add("S3xS3", direct_product(symmetric_group(3), symmetric_group(3)));

  return out;
}

}  // namespace grplat
