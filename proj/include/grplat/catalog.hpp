#ifndef GRPLAT_CATALOG_HPP
#define GRPLAT_CATALOG_HPP

#include <string>
#include <vector>

#include "grplat/group.hpp"

namespace grplat {

/// One transitive permutation group from a catalog file.
struct CatalogEntry {
  int degree = 0;
  int id = 0;
  std::string name;
  std::vector<Permutation> generators;
};

/// Parses a catalog file (one record per line, `degree= id= name= gens=`
/// fields, generators as semicolon-separated 0-based image arrays; see
/// docs/catalog-format.md). Every entry is validated: image arrays must be
/// bijections (PARSE_ERROR with line number), the generated action must be
/// transitive (INTRANSITIVE with the witness orbit), and (degree,id) must be
/// unique (DUPLICATE_ID).
std::vector<CatalogEntry> load_catalog(const std::string& path);

/// Parses a single record line (exposed for tests); line_no is used in errors.
CatalogEntry parse_catalog_line(const std::string& line, int line_no);

}  // namespace grplat

#endif
