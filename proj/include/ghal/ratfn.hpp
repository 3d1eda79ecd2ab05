#ifndef GHAL_RATFN_HPP
#define GHAL_RATFN_HPP

#include <iosfwd>
#include <vector>

#include "ghal/poly.hpp"

namespace ghal {

// Rational function num / prod(den_factors). The denominator is kept as a list
// of factors rather than multiplied out: every denominator this engine produces
// is a product of linear forms (root + parameter), and keeping the factors makes
// cancellation a sequence of exact-division attempts instead of a multivariate
// gcd. Equality is decided by cross-multiplication.
class RatFn {
public:
  RatFn() = default;
  explicit RatFn(Poly num) : num_(std::move(num)) { reduce(); }
  RatFn(Poly num, std::vector<Poly> den_factors);

  static RatFn constant(size_t nvars, const GaussRat& c) {
    return RatFn(Poly::constant(nvars, c));
  }

  const Poly& num() const { return num_; }
  const std::vector<Poly>& den_factors() const { return den_factors_; }
  Poly den() const; // multiplied out

  size_t nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_factors_.empty(); }

  RatFn operator-() const;
  RatFn inverse() const;
  RatFn& operator+=(const RatFn& o);
  RatFn& operator-=(const RatFn& o);
  friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
  friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inverse(); }

  // Cross-multiplication equality of the represented functions.
  bool equals(const RatFn& o) const;
  friend bool operator==(const RatFn& a, const RatFn& b) { return a.equals(b); }
  friend bool operator!=(const RatFn& a, const RatFn& b) { return !a.equals(b); }

  RatFn substitute_linear(const GMat& m) const;
  RatFn scale_variables(const GaussRat& z) const;

  std::string str() const;

private:
  // Cancels denominator factors dividing the numerator and normalizes each
  // factor's leading coefficient to 1 (pushing scalars into the numerator).
  void reduce();

  Poly num_;
  std::vector<Poly> den_factors_;
};

std::ostream& operator<<(std::ostream& os, const RatFn& f);

// ratfn_eval outcome: either a value, a genuine pole, or an unresolved 0/0.
enum class EvalKind { value, pole, indeterminate };

struct EvalResult {
  EvalKind kind;
  GaussRat value; // meaningful only when kind == value
};

// Evaluates f at a point of t, reducing first so that removable 0/0 points of
// the stored representation evaluate cleanly.
EvalResult ratfn_eval(const RatFn& f, const GVec& point);

} // namespace ghal

#endif
