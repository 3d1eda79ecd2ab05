#ifndef GHAL_INTERTWINE_HPP
#define GHAL_INTERTWINE_HPP

#include <optional>
#include <vector>

#include "ghal/induce.hpp"
#include "ghal/modops.hpp"

namespace ghal {

// An element gamma * w of the extended group: gamma indexes into the ambient
// Gamma list, w is a Weyl index. Plain Weyl elements have gamma_index 0 when
// the list starts with the identity.
struct ExtElement {
  int gamma_index = 0;
  int w = 0;
};

// Transport of an induction datum: w(P, delta, lambda) realizes the target
// fiber on the same underlying space, so the fiber intertwiner is the
// identity and equivalence of data becomes on-the-nose matrix equality.
InductionDatum act_on_datum(int w, const InductionDatum& xi);
InductionDatum act_on_datum(const DiagramAut& g, const InductionDatum& xi);
InductionDatum act_on_datum(const DiagramAut& g, int w, const InductionDatum& xi);

bool datum_equal(const InductionDatum& a, const InductionDatum& b);

struct IntertwinerResult {
  InductionDatum source, target;
  bool regular = false;
  std::optional<GMat> matrix;              // present iff regular
  std::optional<Poly> singular_denominator;// offending factor otherwise
  std::optional<Weight> singular_at;       // the target character
};

// The rational operator attached to w with w(P) simple: each basis element
// w' tensor v is sent through right multiplication by tau_{w^{-1}}, the result
// rewritten into the target basis with rational coefficients evaluated on the
// target fiber. A singular denominator is reported instead of a matrix.
IntertwinerResult intertwiner(TauContext& tau, int w, const InductionDatum& xi);

// Crossed-module operator attached to a diagram automorphism: an exact
// permutation-with-relabeling matrix, always regular.
IntertwinerResult intertwiner_gamma(const DiagramAut& g, const InductionDatum& xi,
                                    const std::vector<DiagramAut>& Gamma);

// gamma w acts as the composition of the w-operator induced up to the crossed
// product with the gamma-operator at the transported datum.
IntertwinerResult intertwiner_mixed(TauContext& tau, const DiagramAut& g, int w,
                                    const InductionDatum& xi,
                                    const std::vector<DiagramAut>& Gamma);

struct SpanReport {
  size_t homdim = 0;
  std::vector<ExtElement> candidates; // u with u(xi) equal to eta on the nose
  size_t span_rank = 0;
  bool all_regular = true;
  bool all_invertible = true;
  bool comparable = true; // both unitary or both positive; informational otherwise
  bool spans() const { return span_rank == homdim; }
};

// Compares the exact Hom dimension with the span of the constructed operators
// pi(u, xi) over u in W(P,Q) (or Gamma W(P,.) for crossed modules) with
// u(xi) = eta.
SpanReport span_check(TauContext& tau, const InductionDatum& xi, const InductionDatum& eta,
                      const std::vector<DiagramAut>& Gamma = {});

// P(xi) = { simple alpha : <alpha, Re lambda> = 0 }; requires xi positive.
std::vector<int> p_of_xi(const InductionDatum& xi);
// The unitary part: lambda projected onto t_{P(xi)}.
InductionDatum xi_u(const InductionDatum& xi);

struct TriangularityReport {
  bool ok = true;
  std::string violation;
  // Scalar diagonal contribution <x, gamma w (lambda)> per basis block.
  std::vector<GaussRat> diagonal_scalars;
};

// The coordinate action of an induced (or crossed-induced) module is block
// upper triangular in the length-ordered basis, with diagonal blocks
// <x, gamma w(lambda)> Id + fiber action of the t_P-component of (gamma w)^{-1} x.
TriangularityReport x_action_triangularity(const MatrixModule& m, const InductionDatum& xi,
                                           size_t coordinate);

// The rigidity harness: given data xi, eta in the positive cone, an operator f
// in Hom(pi'(xi), pi'(eta)) (by default pi'(u, xi)), and characters lambda',
// mu' compatible with every u' in W'(P,Q) stabilizing (lambda, mu), checks that
// the same matrix intertwines the modules induced at (lambda', mu').
bool rigidity_check(TauContext& tau, const InductionDatum& xi, const InductionDatum& eta,
                    const ExtElement& u, const Weight& lambda_prime, const Weight& mu_prime,
                    const std::vector<DiagramAut>& Gamma,
                    const std::optional<GMat>& f_override = std::nullopt);

// Enumerates W'(P,Q) for the given Gamma list ({identity} for the plain group).
std::vector<ExtElement> ext_w_of_p_q(const RootDatum& rd, const std::vector<DiagramAut>& Gamma,
                                     const std::vector<int>& P, const std::vector<int>& Q);

} // namespace ghal

#endif
