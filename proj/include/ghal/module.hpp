#ifndef GHAL_MODULE_HPP
#define GHAL_MODULE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ghal/hecke.hpp"
#include "ghal/matrix.hpp"
#include "ghal/rootdatum.hpp"

namespace ghal {

enum class AlgebraKind {
  full,                // the whole graded Hecke algebra
  parabolic,           // H_P: group part W_P, polynomial part acting through t*_P
  extended_parabolic,  // H^P = S(t^{P*}) tensor H_P
  crossed,             // Gamma acting by diagram automorphisms on the full algebra
};

struct AlgebraTag {
  AlgebraKind kind = AlgebraKind::full;
  std::vector<int> P;              // simple indices; for full/crossed: all of them
  std::vector<DiagramAut> Gamma;   // crossed only; a closed group containing the identity

  static AlgebraTag full_algebra(const RootDatum& rd);
  static AlgebraTag parabolic(std::vector<int> P) {
    return AlgebraTag{AlgebraKind::parabolic, std::move(P), {}};
  }
  static AlgebraTag extended_parabolic(std::vector<int> P) {
    return AlgebraTag{AlgebraKind::extended_parabolic, std::move(P), {}};
  }
  static AlgebraTag crossed_by(const RootDatum& rd, std::vector<DiagramAut> Gamma);
};

// Basis label of an induced module: (gamma, coset representative, fiber index),
// coset representatives in length-increasing order, gamma inside each block.
struct BasisLabel {
  int gamma = 0;
  int weyl = 0;
  int fiber = 0;
};

// A finite dimensional module given by exact generator matrices: one matrix per
// ambient coordinate of t*, one per simple reflection of the tag's root set,
// and one per diagram automorphism for crossed modules.
struct MatrixModule {
  RootDatumPtr rd;
  AlgebraTag tag;
  size_t dim = 0;
  std::vector<GMat> X;        // ambient_dim() many
  std::map<int, GMat> S;      // simple index -> matrix
  std::vector<GMat> G;        // aligned with tag.Gamma
  // Carried module data: generalized weights with multiplicities and a central
  // character representative. Catalog and induced modules always have them.
  std::optional<std::vector<std::pair<Weight, int>>> weights;
  std::optional<Weight> cc;
  std::optional<std::vector<BasisLabel>> labels;
  std::optional<GMat> gram;   // inner product matrix for unitarity checks

  const GMat& s_matrix(int alpha) const;
  const GMat& g_matrix(size_t gamma_index) const { return G.at(gamma_index); }
  // Action of a Weyl element of the tag's group: product along a reduced word.
  GMat weyl_action(int w) const;
  // Action of a degree-one form given by its coordinate vector.
  GMat coordinate_action(const GVec& form) const;
};

// Checks every defining relation exactly; returns human-readable violations
// (empty means the module is valid). Used as a gate by all constructors.
std::vector<std::string> validate(const MatrixModule& m);

enum class CatalogKind { delta0, steinberg, trivial };

// One-dimensional catalog modules over H_P. delta0 requires P empty. steinberg
// requires k_alpha > 0 on P and is discrete series by construction; trivial is
// its non-tempered mirror. Weight vectors are stored as elements of
// t_P = span(coroots of P), and the stored coordinate matrices kill t^{P*}, so
// the matrices, weight list and central character describe the same functional.
MatrixModule catalog(const RootDatumPtr& rd, const std::vector<int>& P, CatalogKind kind);

// General one-dimensional module over H_P: s_alpha acts by the given sign and
// the weight solves <alpha, mu> = sign_alpha * k_alpha inside t_P.
MatrixModule one_dimensional_module(const RootDatumPtr& rd, const std::vector<int>& P,
                                    const std::vector<int>& signs);

// pi(h) for an algebra element in normal form.
GMat module_eval(const MatrixModule& m, const HeckeElt& h);

} // namespace ghal

#endif
