#ifndef GHAL_POLY_HPP
#define GHAL_POLY_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ghal/gaussrat.hpp"
#include "ghal/matrix.hpp"

namespace ghal {

using Exponent = std::vector<unsigned>;

// Sparse multivariate polynomial over the gaussian rationals. The variables are
// the coordinate functionals on t, so a linear form is the same data as a
// vector in t*. Exponent vectors are packed big-endian into a single word
// (at most 8 variables, per-variable degree below 256), which makes the packed
// order the lexicographic order; terms are kept sorted with no zeros stored.
class Poly {
public:
  using Packed = uint64_t;
  static constexpr size_t kMaxVars = 8;

  Poly() : nvars_(0) {}
  explicit Poly(size_t nvars);

  static Poly constant(size_t nvars, const GaussRat& c);
  static Poly variable(size_t nvars, size_t i);
  // Degree-one polynomial c0 + sum coeffs[i] * x_i.
  static Poly linear(const GVec& coeffs, const GaussRat& c0 = GaussRat());

  size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  GaussRat constant_term() const;
  long degree() const; // -1 for the zero polynomial

  const std::vector<std::pair<Packed, GaussRat>>& packed_terms() const { return terms_; }
  std::map<Exponent, GaussRat> terms() const; // unpacked view
  Packed pack(const Exponent& e) const;
  Exponent unpack(Packed p) const;

  void set_coeff(const Exponent& e, const GaussRat& c);
  GaussRat coeff(const Exponent& e) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const GaussRat& c, const Poly& p);

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend bool operator<(const Poly& a, const Poly& b);

  Poly pow(unsigned e) const;

  // Substitutes x_i -> sum_j m[j][i] x_j, the algebra automorphism induced by a
  // linear map on t* whose columns are the images of the coordinate vectors.
  Poly substitute_linear(const GMat& m) const;

  // Scales every variable by z, so a degree-d monomial picks up z^d.
  Poly scale_variables(const GaussRat& z) const;

  GaussRat evaluate(const GVec& point) const;

  // Applies complex conjugation to all coefficients.
  Poly conj_coeffs() const;

  // Exact division: nullopt unless divisor * quotient == *this exactly.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  // Leading term in the lexicographic order on exponents.
  std::pair<Exponent, GaussRat> leading_term() const;

  std::string str() const;

private:
  void sort_and_combine(std::vector<std::pair<Packed, GaussRat>>& raw);
  unsigned max_single_var_degree() const;

  size_t nvars_;
  std::vector<std::pair<Packed, GaussRat>> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

} // namespace ghal

#endif
