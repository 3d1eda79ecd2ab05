#ifndef GHAL_ROOTDATUM_HPP
#define GHAL_ROOTDATUM_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ghal/matrix.hpp"
#include "ghal/rational.hpp"

namespace ghal {

// A point of t = a + i a, in exact coordinates.
struct Weight {
  GVec v;

  Weight() = default;
  explicit Weight(GVec coords) : v(std::move(coords)) {}
  static Weight zero(size_t n) { return Weight(GVec(n)); }

  size_t dim() const { return v.size(); }
  bool is_zero() const { return ghal::is_zero(v); }
  bool is_real() const;
  Weight real_part() const;
  Weight imag_part() const; // as a real vector

  friend Weight operator+(const Weight& a, const Weight& b) { return Weight(a.v + b.v); }
  friend Weight operator-(const Weight& a, const Weight& b) { return Weight(a.v - b.v); }
  friend Weight operator*(const GaussRat& c, const Weight& w) { return Weight(c * w.v); }
  friend bool operator==(const Weight& a, const Weight& b) { return a.v == b.v; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) { return a.v < b.v; }
};

// <x, lambda>: the pairing between a* and a is the dot product in shared coordinates.
GaussRat pair(const GVec& x, const GVec& lambda);

// One Weyl group element; owned by WeylGroup, referenced by index elsewhere.
struct WeylElement {
  std::vector<int> word; // lexicographically least reduced word
  GMat dual_action;      // action on a* (roots, polynomials)
  GMat point_action;     // action on a (weights); (dual_action^T)^{-1}
  int length = 0;
};

class RootDatum;

// The full Weyl group, enumerated by breadth-first closure over the simple
// reflections with matrix deduplication, sorted by (length, lexicographic word).
class WeylGroup {
public:
  size_t size() const { return elements_.size(); }
  const WeylElement& operator[](int i) const { return elements_[i]; }
  int identity() const { return 0; }
  int simple(int alpha) const { return simple_[alpha]; }

  int mult(int a, int b) const { return mult_[a * elements_.size() + b]; }
  int inv(int a) const { return inv_[a]; }
  int index_of(const GMat& dual_action) const;
  int longest() const { return longest_; }

  // Image of a vector of a* under the element's action.
  GVec act_on_root(int w, const GVec& x) const;
  // Image of a point of t.
  Weight act_on_weight(int w, const Weight& lam) const;

private:
  friend class RootDatum;
  std::vector<WeylElement> elements_;
  std::map<GMat, int> by_matrix_;
  std::vector<int> simple_;
  std::vector<int> mult_, inv_;
  int longest_ = 0;
};

// A Cartan-pairing-preserving permutation of the simple roots, extended to a*
// by permuting the simple-root lines and acting as the identity on the
// orthogonal complement of their span.
struct DiagramAut {
  std::vector<int> perm; // image of each simple-root index
  GMat dual_action;      // on a*
  GMat point_action;     // on a

  bool is_identity() const;
  friend bool operator==(const DiagramAut& a, const DiagramAut& b) { return a.perm == b.perm; }
};

struct LanglandsDecomposition {
  std::vector<int> F;          // the unique qualifying subset of simple indices
  GVec lambda_Pi;              // component orthogonal to all simple roots
  std::map<int, Rational> d;   // strictly positive, over Pi \ F
  std::map<int, Rational> c;   // nonpositive, over F
};

enum class Cone {
  a_star_plus,   // x in a* with <x, alpha^vee> >= 0 for all simple alpha
  a_minus,       // sum of nonpositive multiples of the simple coroots
  a_minus_strict,// interior: strictly negative multiples, Pi spanning a*
  aP_plus,       // a^{P+}: orthogonal to P, >= 0 against Pi \ P
  aP_plusplus,   // a^{P++}: strict version
  aP_minus,      // nonpositive combinations of the coroots of P
  aP_minus_strict// relative interior of the above
};

// Degenerate root datum: simple roots and coroots in exact shared coordinates,
// plus one deformation parameter per simple root, constant on W-orbits.
class RootDatum {
public:
  // Presets use the weight-coordinate realization: simple coroots are standard
  // basis vectors and the simple-root coordinates are read off the Cartan
  // pairing. Names: A1, A2, B2, G2, A1xA1.
  static std::shared_ptr<const RootDatum> preset(
      const std::string& name, const std::vector<Rational>& k = {});
  static std::shared_ptr<const RootDatum> build(
      size_t n, std::vector<GVec> roots, std::vector<GVec> coroots, std::vector<Rational> k);

  // Same roots, parameters multiplied by z (the source algebra of the scaling
  // isomorphism onto this one).
  std::shared_ptr<const RootDatum> with_scaled_k(const Rational& z) const;

  size_t ambient_dim() const { return n_; }
  size_t num_simple() const { return roots_.size(); }
  const GVec& simple_root(int i) const { return roots_[i]; }
  const GVec& simple_coroot(int i) const { return coroots_[i]; }
  const Rational& k(int i) const { return k_[i]; }
  GaussRat k_gauss(int i) const { return GaussRat(k_[i]); }
  Rational cartan(int i, int j) const; // <alpha_i, alpha_j^vee>

  const WeylGroup& weyl() const { return weyl_; }

  const std::vector<GVec>& all_roots() const { return all_roots_; }
  const std::vector<GVec>& positive_roots() const { return positive_roots_; }
  bool is_positive_root(const GVec& r) const;
  bool is_root(const GVec& r) const;
  std::optional<int> simple_root_index(const GVec& r) const;
  // W-orbit index of each simple root (conjugate simple roots share parameters).
  int root_orbit(int i) const { return orbit_[i]; }

  // Subgroup W_P, in enumeration order.
  std::vector<int> subgroup(const std::vector<int>& P) const;
  // Minimal length coset representatives W^P = { w : w(P) subset R+ },
  // length-increasing.
  std::vector<int> minimal_coset_reps(const std::vector<int>& P) const;
  // w = w^P * w_P with w^P in W^P and w_P in W_P; unique.
  std::pair<int, int> coset_decompose(int w, const std::vector<int>& P) const;
  // W(P,Q) = { w : w(P) = Q } as sets of roots.
  std::vector<int> w_of_p_q(const std::vector<int>& P, const std::vector<int>& Q) const;
  // Image of the simple-root subset P under w, as simple indices;
  // nullopt when some w(alpha) is not simple.
  std::optional<std::vector<int>> act_on_subset(int w, const std::vector<int>& P) const;

  bool cone_test(const GVec& real_vec, Cone which, const std::vector<int>& P = {}) const;

  LanglandsDecomposition langlands_decompose(const GVec& real_vec) const;

  std::vector<DiagramAut> diagram_automorphisms() const;
  DiagramAut identity_aut() const;
  DiagramAut compose(const DiagramAut& a, const DiagramAut& b) const;
  DiagramAut invert(const DiagramAut& a) const;
  // gamma w gamma^{-1} as a Weyl group index.
  int conjugate_weyl(const DiagramAut& g, int w) const;

  // t^{P*} = (span of the coroots of P)^perp, as a rational basis.
  std::vector<GVec> t_P_star_perp_basis(const std::vector<int>& P) const;
  // Decomposition x = x_P + x^P of a vector of a* with x_P in span(P) and
  // x^P in t^{P*}; returns x_P's coefficients over the roots of P.
  // Projection of a weight onto t_P = span(coroots of P) along t^P.
  Weight project_t_P(const Weight& lam, const std::vector<int>& P) const;

  bool same_structure(const RootDatum& o) const;

private:
  RootDatum() = default;
  void validate_and_close(); // builds W, roots, orbits; throws on invalid input

  size_t n_ = 0;
  std::vector<GVec> roots_, coroots_;
  std::vector<Rational> k_;
  std::vector<int> orbit_;
  WeylGroup weyl_;
  std::vector<GVec> all_roots_, positive_roots_;
  std::map<GVec, bool> root_sign_; // root vector -> positivity
};

using RootDatumPtr = std::shared_ptr<const RootDatum>;

} // namespace ghal

#endif
