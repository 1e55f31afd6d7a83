#ifndef GRPLAT_ERRORS_HPP
#define GRPLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grplat {

enum class Errc {
  invalid_permutation,
  not_an_element,
  not_a_subgroup,
  enumeration_limit_exceeded,
  not_boolean,
  not_group_complemented,
  not_bounded,
  not_graded,
  precondition_failed,
  face_cap_exceeded,
  parse_error,
  intransitive,
  duplicate_id,
  io_error,
  internal_check,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Cross-module consistency assertions (the spec'd invariants executed at
// runtime); failures indicate a real bug and are never caught internally.
inline void internal_check(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::internal_check, what);
}

}  // namespace grplat

#endif
