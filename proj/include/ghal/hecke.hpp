#ifndef GHAL_HECKE_HPP
#define GHAL_HECKE_HPP

#include <map>
#include <mutex>

#include "ghal/poly.hpp"
#include "ghal/ratfn.hpp"
#include "ghal/rootdatum.hpp"

namespace ghal {

// Graded Hecke algebra element in normal form: sum over Weyl indices w of
// w * coeff_w, group on the left, polynomial on the right. The cross relation
//   p * s_alpha = s_alpha * s_alpha(p) + k_alpha * (p - s_alpha(p)) / alpha
// rewrites any product back into this form; no zero coefficients are stored.
template <typename Coeff>
class HeckeExpr {
public:
  HeckeExpr() = default;
  explicit HeckeExpr(RootDatumPtr rd) : rd_(std::move(rd)) {}

  static HeckeExpr zero(RootDatumPtr rd) { return HeckeExpr(std::move(rd)); }
  static HeckeExpr unit(RootDatumPtr rd);
  static HeckeExpr group(RootDatumPtr rd, int w);
  static HeckeExpr coefficient(RootDatumPtr rd, Coeff c);

  const RootDatumPtr& datum() const { return rd_; }
  const std::map<int, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(int w, const Coeff& c);
  Coeff coeff(int w) const;

  HeckeExpr operator-() const;
  HeckeExpr& operator+=(const HeckeExpr& o);
  HeckeExpr& operator-=(const HeckeExpr& o);
  friend HeckeExpr operator+(HeckeExpr a, const HeckeExpr& b) { return a += b; }
  friend HeckeExpr operator-(HeckeExpr a, const HeckeExpr& b) { return a -= b; }

  bool equals(const HeckeExpr& o) const;
  friend bool operator==(const HeckeExpr& a, const HeckeExpr& b) { return a.equals(b); }
  friend bool operator!=(const HeckeExpr& a, const HeckeExpr& b) { return !a.equals(b); }

  std::string str() const;

private:
  RootDatumPtr rd_;
  std::map<int, Coeff> terms_;
};

using HeckeElt = HeckeExpr<Poly>;
using LocHeckeElt = HeckeExpr<RatFn>;

// Normal form of coeff * w, rewriting the coefficient past the element's
// canonical reduced word one simple reflection at a time.
std::map<int, Poly> poly_past_group(const RootDatum& rd, const Poly& p, int w);
std::map<int, RatFn> ratfn_past_group(const RootDatum& rd, const RatFn& f, int w);
// Same, along an arbitrary reduced word for the element (the result is
// word-independent; exercised by the PBW uniqueness tests).
std::map<int, Poly> poly_past_word(const RootDatum& rd, const Poly& p,
                                   const std::vector<int>& word);

HeckeElt multiply(const HeckeElt& a, const HeckeElt& b);
LocHeckeElt multiply(const LocHeckeElt& a, const LocHeckeElt& b);

// Convenience generators.
HeckeElt hecke_unit(RootDatumPtr rd);
HeckeElt hecke_group(RootDatumPtr rd, int w);
HeckeElt hecke_poly(RootDatumPtr rd, Poly p);
HeckeElt hecke_coordinate(RootDatumPtr rd, size_t i);
HeckeElt hecke_simple(RootDatumPtr rd, int alpha);

LocHeckeElt to_localized(const HeckeElt& h);

// Maximal polynomial degree over all terms; -1 for zero. The product of two
// elements never exceeds the sum of their degrees (filtration).
long filtration_degree(const HeckeElt& h);

// The * involution: w* = w^{-1} and x* = w0 conj(-w0(x)) w0 on coordinates,
// extended as a sesquilinear anti-homomorphism. Parameters are rational by
// construction, so the real-parameter requirement holds at the type level.
HeckeElt star(const HeckeElt& h);

// Scaling isomorphism from the algebra with parameters z*k onto the one with
// parameters k: multiplies every coordinate by z, identity on the group part.
// target must carry the same roots with k_target = k_source / z.
HeckeElt scale_iso(const Rational& z, const HeckeElt& h, const RootDatumPtr& target);

// psi_w for w with w(P) = Q: x u -> w(x) w u w^{-1} on elements supported on
// W_P with polynomial coefficients. Throws UnsupportedElement otherwise.
HeckeElt psi_w(int w, const std::vector<int>& P, const HeckeElt& h);
// Verification mode: conjugation by tau in the localized algebra must agree.
bool psi_w_matches_tau_conjugation(int w, const std::vector<int>& P, const HeckeElt& h);

// The diagram-automorphism action x s_alpha -> gamma(x) s_{gamma(alpha)}.
HeckeElt psi_gamma(const DiagramAut& g, const HeckeElt& h);
LocHeckeElt psi_gamma(const DiagramAut& g, const LocHeckeElt& h);

// Cache of the rational intertwining elements: tau(s_alpha) =
// (s_alpha alpha - k_alpha)(alpha + k_alpha)^{-1}, extended along canonical
// reduced words. Thread-safe memoization; w -> tau_w is a group homomorphism.
class TauContext {
public:
  explicit TauContext(RootDatumPtr rd) : rd_(std::move(rd)) {}

  const RootDatumPtr& datum() const { return rd_; }
  LocHeckeElt tau(int w);
  LocHeckeElt tau_inverse(int w);

  // a * tau(v), multiplying one simple factor of tau(v) at a time along the
  // canonical reduced word. Associativity makes this the same product as
  // multiply(a, tau(v)); the intermediates stay small.
  LocHeckeElt multiply_tau_factorwise(LocHeckeElt a, int v) const;
  LocHeckeElt multiply_tau_inverse_factorwise(LocHeckeElt a, int v) const;

private:
  LocHeckeElt tau_simple(int alpha) const;

  RootDatumPtr rd_;
  std::map<int, LocHeckeElt> cache_;
  std::mutex mutex_;
};

} // namespace ghal

#endif
