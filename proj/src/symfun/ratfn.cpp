#include "ghal/ratfn.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "ghal/error.hpp"

namespace ghal {

RatFn::RatFn(Poly num, std::vector<Poly> den_factors)
    : num_(std::move(num)), den_factors_(std::move(den_factors)) {
  for (const Poly& f : den_factors_)
    if (f.is_zero()) fail(errc::invalid_argument, "zero denominator factor");
  reduce();
}

Poly RatFn::den() const {
  Poly d = Poly::constant(num_.nvars(), GaussRat(1));
  for (const Poly& f : den_factors_) d = d * f;
  return d;
}

void RatFn::reduce() {
  if (num_.is_zero()) {
    den_factors_.clear();
    return;
  }
  // Cancel factors that divide the numerator exactly.
  std::vector<Poly> kept;
  for (Poly& f : den_factors_) {
    if (f.is_constant()) {
      num_ = f.constant_term().inverse() * num_;
      continue;
    }
    if (auto q = num_.divide_exact(f)) {
      num_ = std::move(*q);
    } else {
      kept.push_back(std::move(f));
    }
  }
  den_factors_ = std::move(kept);
  // Normalize each factor to leading coefficient 1.
  for (Poly& f : den_factors_) {
    GaussRat lc = f.leading_term().second;
    if (!lc.is_one()) {
      f = lc.inverse() * f;
      num_ = lc.inverse() * num_;
    }
  }
  std::sort(den_factors_.begin(), den_factors_.end());
}

RatFn RatFn::operator-() const {
  RatFn out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFn RatFn::inverse() const {
  if (num_.is_zero()) fail(errc::invalid_argument, "inverse of zero rational function");
  Poly n = Poly::constant(num_.nvars(), GaussRat(1));
  for (const Poly& f : den_factors_) n = n * f;
  std::vector<Poly> d;
  if (!num_.is_constant())
    d.push_back(num_);
  else
    n = num_.constant_term().inverse() * n;
  return RatFn(std::move(n), std::move(d));
}

RatFn& RatFn::operator+=(const RatFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  // Common denominator = multiset lcm of the factor lists (both are sorted and
  // normalized); each numerator is scaled only by the factors it lacks.
  std::vector<Poly> lcm, extra_left, extra_right;
  size_t i = 0, j = 0;
  while (i < den_factors_.size() || j < o.den_factors_.size()) {
    if (j == o.den_factors_.size() ||
        (i < den_factors_.size() && den_factors_[i] < o.den_factors_[j])) {
      lcm.push_back(den_factors_[i]);
      extra_right.push_back(den_factors_[i]);
      ++i;
    } else if (i == den_factors_.size() || o.den_factors_[j] < den_factors_[i]) {
      lcm.push_back(o.den_factors_[j]);
      extra_left.push_back(o.den_factors_[j]);
      ++j;
    } else {
      lcm.push_back(den_factors_[i]);
      ++i;
      ++j;
    }
  }
  Poly left = num_;
  for (const Poly& f : extra_left) left = left * f;
  Poly right = o.num_;
  for (const Poly& f : extra_right) right = right * f;
  *this = RatFn(left + right, std::move(lcm));
  return *this;
}

RatFn& RatFn::operator-=(const RatFn& o) { return *this += -o; }

RatFn operator*(const RatFn& a, const RatFn& b) {
  if (a.is_zero() || b.is_zero()) return RatFn(Poly(std::max(a.nvars(), b.nvars())));
  std::vector<Poly> den = a.den_factors_;
  den.insert(den.end(), b.den_factors_.begin(), b.den_factors_.end());
  return RatFn(a.num_ * b.num_, std::move(den));
}

bool RatFn::equals(const RatFn& o) const {
  Poly left = num_;
  for (const Poly& f : o.den_factors_) left = left * f;
  Poly right = o.num_;
  for (const Poly& f : den_factors_) right = right * f;
  return left == right;
}

RatFn RatFn::substitute_linear(const GMat& m) const {
  std::vector<Poly> den;
  den.reserve(den_factors_.size());
  for (const Poly& f : den_factors_) den.push_back(f.substitute_linear(m));
  return RatFn(num_.substitute_linear(m), std::move(den));
}

RatFn RatFn::scale_variables(const GaussRat& z) const {
  std::vector<Poly> den;
  den.reserve(den_factors_.size());
  for (const Poly& f : den_factors_) den.push_back(f.scale_variables(z));
  return RatFn(num_.scale_variables(z), std::move(den));
}

std::string RatFn::str() const {
  if (den_factors_.empty()) return num_.str();
  std::ostringstream os;
  os << "(" << num_.str() << ") / (";
  for (size_t i = 0; i < den_factors_.size(); ++i)
    os << (i ? ")*(" : "") << den_factors_[i].str();
  os << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatFn& f) { return os << f.str(); }

EvalResult ratfn_eval(const RatFn& f, const GVec& point) {
  // The stored form is already reduced factor-by-factor; a vanishing factor that
  // survived reduction does not divide the numerator, but the numerator may
  // still vanish at this particular point without being divisible (shared zero
  // of two different linear forms). Retry reduction against the vanishing
  // factors first; whatever remains is decided by direct evaluation.
  Poly num = f.num();
  std::vector<Poly> factors = f.den_factors();
  GaussRat denv(1);
  for (size_t i = 0; i < factors.size();) {
    GaussRat v = factors[i].evaluate(point);
    if (!v.is_zero()) {
      denv *= v;
      factors.erase(factors.begin() + i);
      continue;
    }
    if (auto q = num.divide_exact(factors[i])) {
      num = std::move(*q);
      factors.erase(factors.begin() + i);
      continue;
    }
    ++i;
  }
  GaussRat numv = num.evaluate(point);
  if (factors.empty()) return {EvalKind::value, numv * denv.inverse()};
  if (!numv.is_zero()) return {EvalKind::pole, GaussRat()};
  return {EvalKind::indeterminate, GaussRat()};
}

} // namespace ghal
