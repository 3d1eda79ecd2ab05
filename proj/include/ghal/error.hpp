#ifndef GHAL_ERROR_HPP
#define GHAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ghal {

enum class errc {
  invalid_argument,
  parse_error,
  dimension_mismatch,
  non_commuting_tuple,
  invalid_cartan,
  parameter_orbit_mismatch,
  parameter_sign,
  non_real_parameters,
  unsupported_element,
  ambiguous_decomposition,
  no_decomposition,
  unknown_weights,
  unverified_weights,
  not_invariant,
  not_simple_image,
  not_positive,
  stabilizer_condition_failed,
  not_irreducible,
  schur_violation,
  inconsistent_scalars,
  triangularity_violation,
  singular,
  indeterminate,
  internal_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace ghal

#endif
