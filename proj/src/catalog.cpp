#include "grplat/catalog.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace grplat {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": " + what);
}

int to_int(const std::string& s, int line_no, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0)
    parse_fail(line_no, std::string("bad ") + what + " '" + s + "'");
  return value;
}

std::vector<Point> parse_images(const std::string& s, int line_no) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    parse_fail(line_no, "image array must look like [0,1,2]");
  std::vector<Point> img;
  std::string body = s.substr(1, s.size() - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = to_int(item, line_no, "image");
    if (v > 65535) parse_fail(line_no, "point out of range");
    img.push_back(static_cast<Point>(v));
  }
  return img;
}

// orbit of 0 under the generators; the witness for intransitivity
std::vector<Point> orbit_of_zero(int degree, const std::vector<Permutation>& gens) {
  std::vector<bool> seen(static_cast<std::size_t>(degree), false);
  std::vector<Point> orbit{0};
  seen[0] = true;
  for (std::size_t head = 0; head < orbit.size(); ++head)
    for (const auto& g : gens) {
      Point y = g.apply(orbit[head]);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  return orbit;
}

}  // namespace

CatalogEntry parse_catalog_line(const std::string& line, int line_no) {
  CatalogEntry entry;
  bool have_degree = false, have_id = false, have_gens = false;

  std::stringstream ss(line);
  std::string field;
  while (ss >> field) {
    auto eq = field.find('=');
    if (eq == std::string::npos) parse_fail(line_no, "expected key=value, got '" + field + "'");
    std::string key = field.substr(0, eq);
    std::string value = field.substr(eq + 1);
    if (key == "degree") {
      entry.degree = to_int(value, line_no, "degree");
      have_degree = true;
    } else if (key == "id") {
      entry.id = to_int(value, line_no, "id");
      have_id = true;
    } else if (key == "name") {
      entry.name = value;
    } else if (key == "gens") {
      std::stringstream gs(value);
      std::string one;
      while (std::getline(gs, one, ';')) {
        try {
          entry.generators.emplace_back(parse_images(one, line_no));
        } catch (const Error& e) {
          if (e.code() == Errc::invalid_permutation)
            parse_fail(line_no, "image array is not a bijection");
          throw;
        }
      }
      have_gens = true;
    } else {
      parse_fail(line_no, "unknown key '" + key + "'");
    }
  }
  if (!have_degree || !have_id || !have_gens)
    parse_fail(line_no, "record needs degree=, id= and gens=");
  if (entry.degree < 1) parse_fail(line_no, "degree must be positive");
  if (entry.generators.empty() && entry.degree != 1)
    parse_fail(line_no, "at least one generator required");
  for (const auto& g : entry.generators)
    if (g.degree() != entry.degree)
      parse_fail(line_no, "generator degree does not match the record degree");
  return entry;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open catalog '" + path + "'");

  std::vector<CatalogEntry> out;
  std::set<std::pair<int, int>> keys;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = line;
    auto pos = trimmed.find_first_not_of(" \t\r");
    if (pos == std::string::npos || trimmed[pos] == '#') continue;
    CatalogEntry entry = parse_catalog_line(line, line_no);

    if (!keys.emplace(entry.degree, entry.id).second)
      throw Error(Errc::duplicate_id,
                  "duplicate (degree,id) = (" + std::to_string(entry.degree) + "," +
                      std::to_string(entry.id) + ") at line " + std::to_string(line_no));

    std::vector<Point> orbit = orbit_of_zero(entry.degree, entry.generators);
    if (static_cast<int>(orbit.size()) != entry.degree) {
      std::string witness;
      for (Point p : orbit) witness += (witness.empty() ? "" : ",") + std::to_string(p);
      throw Error(Errc::intransitive, "entry (" + std::to_string(entry.degree) + "," +
                                          std::to_string(entry.id) + ") orbit of 0 is {" +
                                          witness + "}");
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace grplat
