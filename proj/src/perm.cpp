#include "grplat/perm.hpp"

#include <numeric>
#include <sstream>

namespace grplat {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_permutation: return "INVALID_PERMUTATION";
    case Errc::not_an_element: return "NOT_AN_ELEMENT";
    case Errc::not_a_subgroup: return "NOT_A_SUBGROUP";
    case Errc::enumeration_limit_exceeded: return "ENUMERATION_LIMIT_EXCEEDED";
    case Errc::not_boolean: return "NOT_BOOLEAN";
    case Errc::not_group_complemented: return "NOT_GROUP_COMPLEMENTED";
    case Errc::not_bounded: return "NOT_BOUNDED";
    case Errc::not_graded: return "NOT_GRADED";
    case Errc::precondition_failed: return "PRECONDITION_FAILED";
    case Errc::face_cap_exceeded: return "FACE_CAP_EXCEEDED";
    case Errc::parse_error: return "PARSE_ERROR";
    case Errc::intransitive: return "INTRANSITIVE";
    case Errc::duplicate_id: return "DUPLICATE_ID";
    case Errc::io_error: return "IO_ERROR";
    case Errc::internal_check: return "INTERNAL_CHECK";
  }
  return "UNKNOWN";
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  const std::size_t n = images_.size();
  if (n == 0 || n > 65535)
    throw Error(Errc::invalid_permutation, "degree must be in [1, 65535]");
  std::vector<bool> seen(n, false);
  for (Point v : images_) {
    if (v >= n || seen[v])
      throw Error(Errc::invalid_permutation, "image array is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<Point> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), Point{0});
  return Permutation(std::move(img), Unchecked{});
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

std::uint64_t Permutation::order() const {
  const std::size_t n = images_.size();
  std::vector<bool> seen(n, false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = images_[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<Point> img(a.images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = b.images_[a.images_[i]];
  return Permutation(std::move(img), Permutation::Unchecked{});
}

std::string Permutation::to_cycle_string() const {
  const std::size_t n = images_.size();
  std::vector<bool> seen(n, false);
  std::ostringstream out;
  bool moved = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i] || images_[i] == i) continue;
    moved = true;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << j;
      first = false;
      j = images_[j];
    }
    out << ')';
  }
  if (!moved) return "()";
  return out.str();
}

std::size_t PermHash::operator()(const Permutation& p) const {
  // FNV-1a over the image bytes
  std::size_t h = 1469598103934665603ull;
  for (Point v : p.images()) {
    h ^= static_cast<std::size_t>(v & 0xff);
    h *= 1099511628211ull;
    h ^= static_cast<std::size_t>(v >> 8);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace grplat
