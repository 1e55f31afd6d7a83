#ifndef GRPLAT_CONFIG_HPP
#define GRPLAT_CONFIG_HPP

#include <cstdint>
#include <string>

#include "grplat/complex.hpp"
#include "grplat/group.hpp"

namespace grplat {

struct Limits {
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  std::uint64_t face_cap = kDefaultFaceCap;
};

/// Reads {"enumeration_cap": N, "face_cap": N} (both optional) from a JSON
/// config file. Throws io_error / parse_error.
Limits load_limits(const std::string& path);

}  // namespace grplat

#endif
