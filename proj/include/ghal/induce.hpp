#ifndef GHAL_INDUCE_HPP
#define GHAL_INDUCE_HPP

#include <vector>

#include "ghal/module.hpp"

namespace ghal {

// Induction datum (P, delta, lambda): a parabolic subset, a module over its
// parabolic subalgebra carrying weight data, and a character of t^P.
struct InductionDatum {
  std::vector<int> P;
  MatrixModule delta;
  Weight lambda;

  // lambda in i a^P.
  bool is_unitary() const { return lambda.real_part().is_zero(); }
  // Re(lambda) in a^{P+}.
  bool is_positive() const;
  // delta is in the discrete series of its parabolic subalgebra.
  bool delta_is_discrete_series() const;
};

// Checks the triple: delta validated over P with weight data, lambda
// orthogonal to the roots of P.
void validate_datum(const InductionDatum& xi);

// Weights of the induced module: w(lambda + mu) over minimal coset
// representatives w and weights mu of delta, with multiplicities.
std::vector<std::pair<Weight, int>> predicted_weights(const InductionDatum& xi);
// Crossed version: g w (lambda + mu) over Gamma x W^P.
std::vector<std::pair<Weight, int>> predicted_weights_crossed(
    const InductionDatum& xi, const std::vector<DiagramAut>& Gamma);

// The parabolically induced module on the basis (w, j), w in W^P
// length-increasing, j running over delta's fiber. Generator action is
// computed by normal-form rewriting, coset decomposition and evaluation of
// the parabolic part on the fiber.
MatrixModule induce(const InductionDatum& xi);

// Induction to the crossed product: basis (w, gamma, j) with w outermost in
// length-increasing order. Gamma must be a closed automorphism group
// containing the identity.
MatrixModule induce_crossed(const InductionDatum& xi, const std::vector<DiagramAut>& Gamma);

} // namespace ghal

#endif
