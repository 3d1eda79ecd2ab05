#include "ghal/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "ghal/error.hpp"

namespace ghal {

Poly::Poly(size_t nvars) : nvars_(nvars) {
  if (nvars > kMaxVars) fail(errc::invalid_argument, "too many polynomial variables");
}

Poly::Packed Poly::pack(const Exponent& e) const {
  if (e.size() != nvars_) fail(errc::dimension_mismatch, "exponent arity");
  Packed p = 0;
  for (size_t i = 0; i < nvars_; ++i) {
    if (e[i] > 255) fail(errc::invalid_argument, "exponent exceeds representable degree");
    p = (p << 8) | e[i];
  }
  return p;
}

Exponent Poly::unpack(Packed p) const {
  Exponent e(nvars_);
  for (size_t i = nvars_; i-- > 0;) {
    e[i] = static_cast<unsigned>(p & 0xff);
    p >>= 8;
  }
  return e;
}

Poly Poly::constant(size_t nvars, const GaussRat& c) {
  Poly p(nvars);
  if (!c.is_zero()) p.terms_.emplace_back(0, c);
  return p;
}

Poly Poly::variable(size_t nvars, size_t i) {
  if (i >= nvars) fail(errc::invalid_argument, "variable index out of range");
  Poly p(nvars);
  Exponent e(nvars, 0);
  e[i] = 1;
  p.terms_.emplace_back(p.pack(e), GaussRat(1));
  return p;
}

Poly Poly::linear(const GVec& coeffs, const GaussRat& c0) {
  Poly p(coeffs.size());
  if (!c0.is_zero()) p.terms_.emplace_back(0, c0);
  // Later variables pack smaller, so build descending for sorted order.
  for (size_t i = 0; i < coeffs.size(); ++i) {
    size_t j = coeffs.size() - 1 - i;
    if (coeffs[j].is_zero()) continue;
    Exponent e(coeffs.size(), 0);
    e[j] = 1;
    p.terms_.emplace_back(p.pack(e), coeffs[j]);
  }
  return p;
}

GaussRat Poly::constant_term() const {
  if (!terms_.empty() && terms_.front().first == 0) return terms_.front().second;
  return GaussRat();
}

long Poly::degree() const {
  long d = -1;
  for (const auto& [p, c] : terms_) {
    long t = 0;
    for (Packed q = p; q; q >>= 8) t += static_cast<long>(q & 0xff);
    d = std::max(d, t);
  }
  return d;
}

unsigned Poly::max_single_var_degree() const {
  unsigned m = 0;
  for (const auto& [p, c] : terms_)
    for (Packed q = p; q; q >>= 8) m = std::max(m, static_cast<unsigned>(q & 0xff));
  return m;
}

std::map<Exponent, GaussRat> Poly::terms() const {
  std::map<Exponent, GaussRat> out;
  for (const auto& [p, c] : terms_) out.emplace(unpack(p), c);
  return out;
}

void Poly::set_coeff(const Exponent& e, const GaussRat& c) {
  Packed p = pack(e);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                             [](const auto& t, Packed key) { return t.first < key; });
  if (it != terms_.end() && it->first == p) {
    if (c.is_zero())
      terms_.erase(it);
    else
      it->second = c;
  } else if (!c.is_zero()) {
    terms_.insert(it, {p, c});
  }
}

GaussRat Poly::coeff(const Exponent& e) const {
  Packed p = pack(e);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                             [](const auto& t, Packed key) { return t.first < key; });
  if (it != terms_.end() && it->first == p) return it->second;
  return GaussRat();
}

Poly Poly::operator-() const {
  Poly p(nvars_);
  p.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) p.terms_.emplace_back(e, -c);
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) {
    if (terms_.empty())
      nvars_ = o.nvars_;
    else if (!o.terms_.empty())
      fail(errc::dimension_mismatch, "polynomial arity");
  }
  std::vector<std::pair<Packed, GaussRat>> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].first < o.terms_[j].first) {
      merged.push_back(std::move(terms_[i++]));
    } else if (terms_[i].first > o.terms_[j].first) {
      merged.push_back(o.terms_[j++]);
    } else {
      GaussRat sum = terms_[i].second + o.terms_[j].second;
      if (!sum.is_zero()) merged.emplace_back(terms_[i].first, std::move(sum));
      ++i;
      ++j;
    }
  }
  while (i < terms_.size()) merged.push_back(std::move(terms_[i++]));
  while (j < o.terms_.size()) merged.push_back(o.terms_[j++]);
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

void Poly::sort_and_combine(std::vector<std::pair<Packed, GaussRat>>& raw) {
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  terms_.clear();
  for (auto& [e, c] : raw) {
    if (!terms_.empty() && terms_.back().first == e) {
      terms_.back().second += c;
      if (terms_.back().second.is_zero()) terms_.pop_back();
    } else if (!c.is_zero()) {
      terms_.emplace_back(e, std::move(c));
    }
  }
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_ && !a.is_zero() && !b.is_zero())
    fail(errc::dimension_mismatch, "polynomial arity");
  Poly p(std::max(a.nvars_, b.nvars_));
  if (a.is_zero() || b.is_zero()) return p;
  if (a.max_single_var_degree() + b.max_single_var_degree() > 255)
    fail(errc::invalid_argument, "product degree exceeds representable bound");
  std::vector<std::pair<Poly::Packed, GaussRat>> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) raw.emplace_back(ea + eb, ca * cb);
  p.sort_and_combine(raw);
  return p;
}

Poly operator*(const GaussRat& c, const Poly& p) {
  Poly out(p.nvars_);
  if (c.is_zero()) return out;
  out.terms_.reserve(p.terms_.size());
  for (const auto& [e, pc] : p.terms_) out.terms_.emplace_back(e, c * pc);
  return out;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

Poly Poly::pow(unsigned e) const {
  Poly out = Poly::constant(nvars_, GaussRat(1));
  Poly base = *this;
  while (e) {
    if (e & 1u) out = out * base;
    if (e >>= 1u) base = base * base;
  }
  return out;
}

Poly Poly::substitute_linear(const GMat& m) const {
  if (m.rows() != nvars_ || m.cols() != nvars_)
    fail(errc::dimension_mismatch, "substitution matrix shape");
  std::vector<std::vector<Poly>> powers(nvars_);
  auto image_power = [&](size_t i, unsigned e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) {
      cache.push_back(Poly::constant(nvars_, GaussRat(1)));
      cache.push_back(Poly::linear(m.col(i)));
    }
    while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };
  Poly out(nvars_);
  for (const auto& [p, c] : terms_) {
    Poly term = Poly::constant(nvars_, c);
    Packed q = p;
    for (size_t i = nvars_; i-- > 0;) {
      unsigned e = static_cast<unsigned>(q & 0xff);
      q >>= 8;
      if (e) term = term * image_power(i, e);
    }
    out += term;
  }
  return out;
}

Poly Poly::scale_variables(const GaussRat& z) const {
  Poly out(nvars_);
  out.terms_.reserve(terms_.size());
  for (const auto& [p, c] : terms_) {
    long d = 0;
    for (Packed q = p; q; q >>= 8) d += static_cast<long>(q & 0xff);
    GaussRat zc = c;
    for (long i = 0; i < d; ++i) zc *= z;
    if (!zc.is_zero()) out.terms_.emplace_back(p, std::move(zc));
  }
  return out;
}

GaussRat Poly::evaluate(const GVec& point) const {
  if (point.size() != nvars_) fail(errc::dimension_mismatch, "evaluation point arity");
  GaussRat out;
  for (const auto& [p, c] : terms_) {
    GaussRat term = c;
    Packed q = p;
    for (size_t i = nvars_; i-- > 0;) {
      unsigned e = static_cast<unsigned>(q & 0xff);
      q >>= 8;
      for (unsigned j = 0; j < e; ++j) term *= point[i];
    }
    out += term;
  }
  return out;
}

Poly Poly::conj_coeffs() const {
  Poly out(nvars_);
  out.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.terms_.emplace_back(e, c.conj());
  return out;
}

std::pair<Exponent, GaussRat> Poly::leading_term() const {
  if (terms_.empty()) fail(errc::invalid_argument, "leading term of zero polynomial");
  return {unpack(terms_.back().first), terms_.back().second};
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) fail(errc::invalid_argument, "division by zero polynomial");
  Poly rem = *this;
  Poly quot(nvars_);
  const Packed de = divisor.terms_.back().first;
  const GaussRat& dc = divisor.terms_.back().second;
  std::vector<std::pair<Packed, GaussRat>> qterms;
  while (!rem.terms_.empty()) {
    Packed re = rem.terms_.back().first;
    // Byte-wise dominance check: every exponent of the divisor's leading
    // monomial must fit under the remainder's.
    Packed qe = 0;
    bool fits = true;
    for (size_t i = 0; i < nvars_; ++i) {
      unsigned shift = 8 * static_cast<unsigned>(nvars_ - 1 - i);
      unsigned rb = static_cast<unsigned>((re >> shift) & 0xff);
      unsigned db = static_cast<unsigned>((de >> shift) & 0xff);
      if (rb < db) {
        fits = false;
        break;
      }
      qe |= static_cast<Packed>(rb - db) << shift;
    }
    if (!fits) return std::nullopt;
    GaussRat qc = rem.terms_.back().second / dc;
    Poly t(nvars_);
    t.terms_.emplace_back(qe, qc);
    qterms.emplace_back(qe, qc);
    rem -= t * divisor;
  }
  std::reverse(qterms.begin(), qterms.end());
  quot.terms_ = std::move(qterms);
  return quot;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    Exponent e = unpack(it->first);
    for (size_t i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      os << "*x" << i;
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

} // namespace ghal
