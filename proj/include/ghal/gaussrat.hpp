#ifndef GHAL_GAUSSRAT_HPP
#define GHAL_GAUSSRAT_HPP

#include <iosfwd>
#include <string>

#include "ghal/rational.hpp"

namespace ghal {

// Gaussian rational a + bi, the scalar field of the whole engine.
class GaussRat {
public:
  GaussRat() = default;
  GaussRat(long n) : re_(n) {}
  GaussRat(Rational re) : re_(std::move(re)) {}
  GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }
  // Parses "1/2", "i", "-i", "2i", "1/2+2i", "1-3/4i".
  static GaussRat parse(const std::string& s);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussRat inverse() const;

  GaussRat operator-() const { return GaussRat(-re_, -im_); }
  GaussRat& operator+=(const GaussRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o) { return *this *= o.inverse(); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
  // Lexicographic order; used only to keep containers and output deterministic.
  friend bool operator<(const GaussRat& a, const GaussRat& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  // "1/2+2i" style literal; real part omitted when 0 and imaginary present.
  std::string str() const;

private:
  Rational re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussRat& z);

} // namespace ghal

#endif
