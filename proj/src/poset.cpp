#include "grplat/poset.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace grplat {

FinitePoset FinitePoset::from_relation(int n, const std::function<bool(int, int)>& leq) {
  FinitePoset p;
  p.up_.assign(static_cast<std::size_t>(n), NodeMask(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x == y || leq(x, y)) p.up_[x].set(y);
  return p;
}

FinitePoset FinitePoset::chain(int length) {
  return from_relation(length + 1, [](int x, int y) { return x <= y; });
}

FinitePoset FinitePoset::antichain(int n) {
  return from_relation(n, [](int x, int y) { return x == y; });
}

FinitePoset FinitePoset::boolean_lattice(int rank) {
  return from_relation(1 << rank, [](int x, int y) { return (x & y) == x; });
}

FinitePoset FinitePoset::product(const FinitePoset& a, const FinitePoset& b) {
  const int nb = b.size();
  return from_relation(a.size() * nb, [&](int x, int y) {
    return a.leq(x / nb, y / nb) && b.leq(x % nb, y % nb);
  });
}

FinitePoset FinitePoset::dual() const {
  const int n = size();
  FinitePoset p;
  p.up_.assign(static_cast<std::size_t>(n), NodeMask(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (leq(y, x)) p.up_[x].set(y);
  return p;
}

FinitePoset FinitePoset::induced(const std::vector<int>& nodes) const {
  const int m = static_cast<int>(nodes.size());
  FinitePoset p;
  p.up_.assign(static_cast<std::size_t>(m), NodeMask(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (leq(nodes[i], nodes[j])) p.up_[i].set(j);
  return p;
}

std::vector<int> FinitePoset::closed_interval(int x, int y) const {
  std::vector<int> out;
  for (int z = 0; z < size(); ++z)
    if (leq(x, z) && leq(z, y)) out.push_back(z);
  return out;
}

std::vector<int> FinitePoset::open_interval(int x, int y) const {
  std::vector<int> out;
  for (int z = 0; z < size(); ++z)
    if (z != x && z != y && leq(x, z) && leq(z, y)) out.push_back(z);
  return out;
}

std::optional<int> FinitePoset::minimum() const {
  for (int x = 0; x < size(); ++x)
    if (up_[x].count() == static_cast<std::size_t>(size())) return x;
  return std::nullopt;
}

std::optional<int> FinitePoset::maximum() const {
  for (int y = 0; y < size(); ++y) {
    bool top = true;
    for (int x = 0; x < size(); ++x)
      if (!leq(x, y)) {
        top = false;
        break;
      }
    if (top) return y;
  }
  return std::nullopt;
}

FinitePoset FinitePoset::bounded_extension() const {
  const int n = size();
  FinitePoset p;
  p.up_.assign(static_cast<std::size_t>(n + 2), NodeMask(static_cast<std::size_t>(n + 2)));
  p.up_[0].set();
  for (int x = 0; x < n; ++x) {
    p.up_[x + 1].set(x + 1);
    p.up_[x + 1].set(n + 1);
    for (int y = 0; y < n; ++y)
      if (leq(x, y)) p.up_[x + 1].set(y + 1);
  }
  p.up_[n + 1].set(n + 1);
  return p;
}

FinitePoset FinitePoset::proper_part() const {
  auto lo = minimum();
  auto hi = maximum();
  if (!lo || !hi) throw Error(Errc::not_bounded, "poset has no 0^ or 1^");
  std::vector<int> nodes;
  for (int x = 0; x < size(); ++x)
    if (x != *lo && x != *hi) nodes.push_back(x);
  return induced(nodes);
}

void FinitePoset::ensure_covers() const {
  if (covers_valid_) return;
  covers_.clear();
  const int n = size();
  cover_up_.assign(static_cast<std::size_t>(n), {});
  cover_down_.assign(static_cast<std::size_t>(n), {});
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!less(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < n; ++z) {
        if (z != x && z != y && less(x, z) && less(z, y)) {
          cover = false;
          break;
        }
      }
      if (cover) {
        covers_.emplace_back(x, y);
        cover_up_[x].push_back(y);
        cover_down_[y].push_back(x);
      }
    }
  }
  covers_valid_ = true;
}

const std::vector<std::pair<int, int>>& FinitePoset::covers() const {
  ensure_covers();
  return covers_;
}

const std::vector<int>& FinitePoset::covers_above(int x) const {
  ensure_covers();
  return cover_up_[x];
}

const std::vector<int>& FinitePoset::covers_below(int y) const {
  ensure_covers();
  return cover_down_[y];
}

std::vector<int> FinitePoset::linear_extension() const {
  // x < y implies up(x) strictly contains up(y), so decreasing up-set size is
  // a linear extension (and a valid strict weak ordering for sorting)
  const int n = size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const std::size_t ua = up_[static_cast<std::size_t>(a)].count();
    const std::size_t ub = up_[static_cast<std::size_t>(b)].count();
    if (ua != ub) return ua > ub;
    return a < b;
  });
  return order;
}

namespace {

// longest chain (edge count) ending at each node, in a topological sweep
std::vector<int> heights(const FinitePoset& p) {
  std::vector<int> h(static_cast<std::size_t>(p.size()), 0);
  for (int x : p.linear_extension())
    for (int y : p.covers_above(x)) h[y] = std::max(h[y], h[x] + 1);
  return h;
}

}  // namespace

bool FinitePoset::is_pure() const {
  // pure iff below[x] + above[x] is constant: along any cover the lower height
  // then increments by exactly one, so every maximal chain has that length
  const int n = size();
  if (n == 0) return true;
  std::vector<int> below = heights(*this);
  std::vector<int> above = heights(dual());
  const int total = below[0] + above[0];
  for (int x = 1; x < n; ++x)
    if (below[x] + above[x] != total) return false;
  return true;
}

int FinitePoset::length() const {
  std::vector<int> h = heights(*this);
  int best = 0;
  for (int v : h) best = std::max(best, v);
  return best;
}

void FinitePoset::visit_maximal_chains(
    const std::function<void(const std::vector<int>&)>& fn) const {
  std::vector<int> chain;
  std::function<void(int)> dfs = [&](int x) {
    chain.push_back(x);
    auto ups = covers_above(x);
    if (ups.empty()) {
      fn(chain);
    } else {
      for (int y : ups) dfs(y);
    }
    chain.pop_back();
  };
  for (int x = 0; x < size(); ++x)
    if (covers_below(x).empty()) dfs(x);
}

void FinitePoset::visit_maximal_chains_between(
    int x, int y, const std::function<void(const std::vector<int>&)>& fn) const {
  if (!leq(x, y)) return;
  std::vector<int> chain;
  std::function<void(int)> dfs = [&](int z) {
    chain.push_back(z);
    if (z == y) {
      fn(chain);
    } else {
      for (int w : covers_above(z))
        if (leq(w, y)) dfs(w);
    }
    chain.pop_back();
  };
  dfs(x);
}

bool FinitePoset::comparability_connected() const {
  const int n = size();
  if (n == 0) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<int> queue{0};
  seen[0] = true;
  int count = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y = 0; y < n; ++y) {
      if (!seen[y] && (less(x, y) || less(y, x))) {
        seen[y] = true;
        ++count;
        queue.push_back(y);
      }
    }
  }
  return count == n;
}

MoebiusTable::MoebiusTable(const FinitePoset& poset) : poset_(poset) {
  auto lo = poset_.minimum();
  auto hi = poset_.maximum();
  if (!lo || !hi) throw Error(Errc::not_bounded, "moebius_table requires 0^ and 1^");
  bottom_ = *lo;
  top_ = *hi;

  const int n = poset_.size();
  n_ = static_cast<std::size_t>(n);
  table_.assign(n_ * n_, Integer(0));

  const std::vector<int> order = poset_.linear_extension();

  // mu(x,x) = 1 and sum_{x <= z <= y} mu(x,z) = 0 for x < y
  for (int x = 0; x < n; ++x) {
    table_[static_cast<std::size_t>(x) * n_ + x] = 1;
    for (int y : order) {
      if (!poset_.less(x, y)) continue;
      Integer s = 0;
      for (int z = 0; z < n; ++z)
        if (poset_.leq(x, z) && poset_.less(z, y))
          s += table_[static_cast<std::size_t>(x) * n_ + z];
      table_[static_cast<std::size_t>(x) * n_ + y] = -s;
    }
  }
}

const Integer& MoebiusTable::invariant() const {
  return table_[static_cast<std::size_t>(bottom_) * n_ + top_];
}

}  // namespace grplat
