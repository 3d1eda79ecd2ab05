#ifndef GHAL_APPLY_HPP
#define GHAL_APPLY_HPP

#include <optional>
#include <vector>

#include "ghal/matrix.hpp"
#include "ghal/poly.hpp"
#include "ghal/ratfn.hpp"

namespace ghal {

// Evaluates p(X_1, ..., X_n) by monomial substitution. The X_i must commute
// pairwise (checked; NonCommutingTuple otherwise) and be square of equal size.
GMat apply_poly_to_commuting(const Poly& p, const std::vector<GMat>& x);

// num(f)(X) * den(f)(X)^:-1 when the denominator evaluates to an invertible
// matrix. A singular denominator factor is reported instead of a matrix; it
// signals an intertwiner pole at this module.
struct RatFnOnModule {
  std::optional<GMat> matrix;
  std::optional<Poly> singular_factor; // the offending denominator factor
};

RatFnOnModule apply_ratfn_to_commuting(const RatFn& f, const std::vector<GMat>& x);

} // namespace ghal

#endif
