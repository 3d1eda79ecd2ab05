#ifndef GHAL_CLIFFORD_HPP
#define GHAL_CLIFFORD_HPP

#include <map>
#include <vector>

#include "ghal/modops.hpp"
#include "ghal/module.hpp"

namespace ghal {

// Induction of a module over the full algebra up to the crossed product:
// basis (gamma, j), with h acting blockwise through pi after twisting by
// psi_gamma^{-1} and Gamma permuting the blocks. Restricted back to the plain
// algebra this is the direct sum of the twists pi o psi_gamma^{-1}.
MatrixModule induce_to_crossed(const MatrixModule& pi, const std::vector<DiagramAut>& Gamma);

// Stabilizer data for an irreducible module: the subgroup of Gamma fixing the
// isomorphism class, one normalized intertwiner per member (first nonzero
// entry 1 in row-major order, identity at the identity), and the resulting
// 2-cocycle.
struct CliffordData {
  MatrixModule pi;
  std::vector<DiagramAut> Gamma;
  std::vector<int> stabilizer;           // indices into Gamma
  std::vector<GMat> intertwiners;        // aligned with stabilizer
  // kappa[(i, j)] with i, j indexing into stabilizer.
  std::map<std::pair<int, int>, GaussRat> kappa;
};

// Computes the stabilizer and its intertwiners. Requires pi irreducible with a
// verified weight report (NotIrreducible otherwise); a hom space of dimension
// above one is a SchurViolation.
CliffordData stabilizer(const MatrixModule& pi,
                        const std::vector<std::pair<Weight, int>>& report,
                        const std::vector<DiagramAut>& Gamma);

// Extracts kappa from I^{g g'} = kappa(g, g') I^g I^{g'} entrywise
// (InconsistentScalars if the composite is not a scalar multiple) and asserts
// the 2-cocycle identity exactly.
void cocycle(CliffordData& cd);

// Multiplication table T_g T_{g'} = kappa(g, g') T_{g g'}; associativity is
// equivalent to the cocycle identity and asserted on all triples.
struct TwistedGroupAlgebra {
  size_t order = 0;
  std::vector<std::vector<GaussRat>> scalar;   // kappa table
  std::vector<std::vector<int>> product;       // index table
};

TwistedGroupAlgebra twisted_group_algebra(const CliffordData& cd);

// The change-of-model isomorphism from the induced module to the twisted
// group algebra model: gamma tensor v maps to T_gamma tensor I^gamma(v).
// Returns true when the map is bijective and equivariant for every generator.
bool clifford_T_check(const CliffordData& cd);

struct EndDimensionReport {
  size_t end_dim = 0;
  size_t stabilizer_order = 0;
  bool ok() const { return end_dim == stabilizer_order; }
};

// dim End of the full crossed induction equals the stabilizer order for an
// irreducible module.
EndDimensionReport end_dimension_check(const CliffordData& cd);

} // namespace ghal

#endif
