#include "ghal/gaussrat.hpp"

#include <ostream>

#include "ghal/error.hpp"

namespace ghal {

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussRat GaussRat::inverse() const {
  Rational n = norm();
  if (n.is_zero()) fail(errc::invalid_argument, "inverse of zero gaussian rational");
  Rational ninv = n.inverse();
  return GaussRat(re_ * ninv, -im_ * ninv);
}

namespace {

// One term of a gaussian-rational literal: sign, digits/slashes, optional trailing 'i'.
struct Term {
  Rational value;
  bool imaginary;
};

Term parse_term(const std::string& s, size_t& pos) {
  Term t{Rational(0), false};
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = s[pos] == '-';
    ++pos;
  }
  size_t start = pos;
  while (pos < s.size() && ((s[pos] >= '0' && s[pos] <= '9') || s[pos] == '/')) ++pos;
  std::string digits = s.substr(start, pos - start);
  if (pos < s.size() && s[pos] == 'i') {
    t.imaginary = true;
    ++pos;
    if (digits.empty()) digits = "1";
  } else if (digits.empty()) {
    fail(errc::parse_error, "bad gaussian rational literal '" + s + "'");
  }
  t.value = Rational::parse(digits);
  if (neg) t.value = -t.value;
  return t;
}

} // namespace

GaussRat GaussRat::parse(const std::string& s) {
  if (s.empty()) fail(errc::parse_error, "empty gaussian rational literal");
  GaussRat out;
  size_t pos = 0;
  int terms = 0;
  while (pos < s.size()) {
    Term t = parse_term(s, pos);
    if (++terms > 2) fail(errc::parse_error, "too many terms in '" + s + "'");
    if (t.imaginary)
      out += GaussRat(Rational(0), t.value);
    else
      out += GaussRat(t.value);
  }
  return out;
}

std::string GaussRat::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag = (im_.abs().is_one() ? std::string() : im_.abs().str()) + "i";
  std::string sign = im_.sign() < 0 ? "-" : "";
  if (re_.is_zero()) return sign + imag;
  return re_.str() + (im_.sign() < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << z.str(); }

} // namespace ghal
