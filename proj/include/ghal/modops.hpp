#ifndef GHAL_MODOPS_HPP
#define GHAL_MODOPS_HPP

#include <optional>
#include <vector>

#include "ghal/module.hpp"

namespace ghal {

// Basis of the (generalized) mu-weight space: the joint kernel of X_i - mu_i
// (raised to the dimension for the generalized space).
std::vector<GVec> weight_space(const MatrixModule& m, const Weight& mu, bool generalized);

// Verifies that generalized weight spaces at the listed weights have the listed
// dimensions and exhaust the module. Throws UnverifiedWeights otherwise.
void verify_weight_report(const MatrixModule& m,
                          const std::vector<std::pair<Weight, int>>& report);

// For W-invariant polynomials up to the degree cap (averages of monomials over
// the tag's Weyl group), p(X) must equal p(mu) as a scalar matrix.
bool central_character_check(const MatrixModule& m, const Weight& mu, unsigned degree_cap = 3);

enum class Temperedness { discrete_series, tempered, neither };

// Cone tests on the real parts of all weights: the antidual cone for tempered,
// its (relative) interior plus irreducibility for discrete series.
Temperedness temperedness(const MatrixModule& m,
                          const std::vector<std::pair<Weight, int>>& report);

// All module generator matrices (coordinates, reflections, automorphisms).
std::vector<GMat> generator_matrices(const MatrixModule& m);

// Basis of Hom(M, N) = { f : f M(g) = N(g) f for all generators }.
std::vector<GMat> hom_space(const MatrixModule& m, const MatrixModule& n);

// Smallest generator-invariant subspace containing the given vectors, as a
// reduced row basis.
std::vector<GVec> submodule_closure(const MatrixModule& m, const std::vector<GVec>& vectors);

// Restriction of the action to an invariant subspace, in the given row basis.
MatrixModule submodule(const MatrixModule& m, const std::vector<GVec>& basis);

// Quotient by an invariant subspace, expressed in the pivot-based complement
// basis. Throws NotInvariant when the subspace is not generator-invariant.
MatrixModule quotient(const MatrixModule& m, const std::vector<GVec>& subspace);

enum class IrredVerdict { irreducible, reducible, unknown };

struct IrreducibilityResult {
  IrredVerdict verdict;
  std::vector<GVec> witness; // a proper invariant subspace when reducible
};

// Exact when every plain weight space is at most one-dimensional (any nonzero
// submodule contains a plain weight vector); otherwise closure probes plus
// deterministic pseudo-random combinations, three-valued.
IrreducibilityResult irreducibility(const MatrixModule& m,
                                    const std::vector<std::pair<Weight, int>>& report);

// Dimension multiset of the irreducible constituents, computed recursively by
// closures and quotients. Requires the exact branch throughout.
std::vector<size_t> constituent_dimensions(const MatrixModule& m,
                                           const std::vector<Weight>& candidate_weights);

// The adjoint identity <pi(h) u, v> = <u, pi(h*) v> for every generator, with
// respect to the stored inner product.
bool unitary_pairing_check(const MatrixModule& m);

// Squared euclidean norm of the real part.
Rational cc_norm(const Weight& w);

// The unique-irreducible-quotient checker: quotients by the sum of all proper
// closures of plain weight vectors. Succeeds when the result is nonzero and
// certified irreducible.
struct LanglandsQuotient {
  std::vector<GVec> radical; // the sum of all proper closures
  MatrixModule quotient;
  std::vector<std::pair<Weight, int>> quotient_weights;
};

std::optional<LanglandsQuotient> unique_irreducible_quotient(
    const MatrixModule& m, const std::vector<Weight>& candidate_weights);

} // namespace ghal

#endif
