#include "ghal/hecke.hpp"

#include <algorithm>
#include <sstream>

#include "ghal/error.hpp"

namespace ghal {

namespace {

Poly one_poly(const RootDatum& rd) {
  return Poly::constant(rd.ambient_dim(), GaussRat(1));
}

RatFn one_ratfn(const RootDatum& rd) { return RatFn(one_poly(rd)); }

template <typename Coeff>
struct CoeffOps;

template <>
struct CoeffOps<Poly> {
  // (p - s_alpha p) / alpha; the numerator is anti-invariant, so the division
  // is exact. A remainder would mean the reflection action is broken.
  static Poly divided_difference(const RootDatum& rd, const Poly& p, int alpha,
                                 const GMat& srefl) {
    Poly numer = p - p.substitute_linear(srefl);
    if (numer.is_zero()) return Poly(rd.ambient_dim());
    auto q = numer.divide_exact(Poly::linear(rd.simple_root(alpha)));
    if (!q) fail(errc::internal_error, "divided difference left a remainder");
    return *q;
  }
  static Poly scale(const Poly& p, const GaussRat& c) { return c * p; }
};

template <>
struct CoeffOps<RatFn> {
  static RatFn divided_difference(const RootDatum& rd, const RatFn& f, int alpha,
                                  const GMat& srefl) {
    RatFn diff = f - f.substitute_linear(srefl);
    if (diff.is_zero()) return RatFn(Poly(rd.ambient_dim()));
    Poly alpha_poly = Poly::linear(rd.simple_root(alpha));
    if (auto q = diff.num().divide_exact(alpha_poly))
      return RatFn(std::move(*q), diff.den_factors());
    fail(errc::internal_error, "anti-invariant numerator not divisible by the root");
  }
  static RatFn scale(const RatFn& f, const GaussRat& c) {
    return RatFn(c * f.num(), f.den_factors());
  }
};

// coeff * s_{word[0]} * ... : one cross-relation step per letter.
template <typename Coeff>
void past_word_rec(const RootDatum& rd, const Coeff& c, const int* word, size_t len,
                   int left, std::map<int, Coeff>& out) {
  if (c.is_zero()) return;
  if (len == 0) {
    auto it = out.find(left);
    if (it == out.end()) {
      out.emplace(left, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
    return;
  }
  int alpha = word[0];
  const auto& W = rd.weyl();
  const GMat& srefl = W[W.simple(alpha)].dual_action;
  Coeff swapped = c.substitute_linear(srefl);
  past_word_rec(rd, swapped, word + 1, len - 1, W.mult(left, W.simple(alpha)), out);
  Coeff correction = CoeffOps<Coeff>::scale(
      CoeffOps<Coeff>::divided_difference(rd, c, alpha, srefl), rd.k_gauss(alpha));
  past_word_rec(rd, correction, word + 1, len - 1, left, out);
}

template <typename Coeff>
std::map<int, Coeff> past_group(const RootDatum& rd, const Coeff& c, int w) {
  std::map<int, Coeff> out;
  const auto& word = rd.weyl()[w].word;
  past_word_rec(rd, c, word.data(), word.size(), rd.weyl().identity(), out);
  return out;
}

bool same_algebra(const RootDatumPtr& a, const RootDatumPtr& b) {
  if (!a || !b) return false;
  if (a == b) return true;
  if (!a->same_structure(*b)) return false;
  for (size_t i = 0; i < a->num_simple(); ++i)
    if (a->k(static_cast<int>(i)) != b->k(static_cast<int>(i))) return false;
  return true;
}

template <typename Coeff>
HeckeExpr<Coeff> multiply_impl(const HeckeExpr<Coeff>& a, const HeckeExpr<Coeff>& b) {
  if (!same_algebra(a.datum(), b.datum()))
    fail(errc::invalid_argument, "factors live over different root data");
  const RootDatum& rd = *a.datum();
  HeckeExpr<Coeff> out(a.datum());
  for (const auto& [w1, p1] : a.terms())
    for (const auto& [w2, p2] : b.terms()) {
      auto shifted = past_group(rd, p1, w2);
      for (const auto& [u, q] : shifted)
        out.add_term(rd.weyl().mult(w1, u), q * p2);
    }
  return out;
}

} // namespace

template <typename Coeff>
HeckeExpr<Coeff> HeckeExpr<Coeff>::unit(RootDatumPtr rd) {
  return group(std::move(rd), 0);
}

template <typename Coeff>
HeckeExpr<Coeff> HeckeExpr<Coeff>::group(RootDatumPtr rd, int w) {
  HeckeExpr out(rd);
  if constexpr (std::is_same_v<Coeff, Poly>)
    out.terms_[w] = one_poly(*rd);
  else
    out.terms_[w] = one_ratfn(*rd);
  return out;
}

template <typename Coeff>
HeckeExpr<Coeff> HeckeExpr<Coeff>::coefficient(RootDatumPtr rd, Coeff c) {
  HeckeExpr out(std::move(rd));
  if (!c.is_zero()) out.terms_[out.rd_->weyl().identity()] = std::move(c);
  return out;
}

template <typename Coeff>
void HeckeExpr<Coeff>::add_term(int w, const Coeff& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

template <typename Coeff>
Coeff HeckeExpr<Coeff>::coeff(int w) const {
  auto it = terms_.find(w);
  if (it != terms_.end()) return it->second;
  if constexpr (std::is_same_v<Coeff, Poly>)
    return Poly(rd_ ? rd_->ambient_dim() : 0);
  else
    return RatFn(Poly(rd_ ? rd_->ambient_dim() : 0));
}

template <typename Coeff>
HeckeExpr<Coeff> HeckeExpr<Coeff>::operator-() const {
  HeckeExpr out(rd_);
  for (const auto& [w, c] : terms_) out.terms_[w] = -c;
  return out;
}

template <typename Coeff>
HeckeExpr<Coeff>& HeckeExpr<Coeff>::operator+=(const HeckeExpr& o) {
  if (!rd_) rd_ = o.rd_;
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

template <typename Coeff>
HeckeExpr<Coeff>& HeckeExpr<Coeff>::operator-=(const HeckeExpr& o) {
  return *this += -o;
}

template <typename Coeff>
bool HeckeExpr<Coeff>::equals(const HeckeExpr& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if constexpr (std::is_same_v<Coeff, Poly>) {
      if (it->second != jt->second) return false;
    } else {
      if (!it->second.equals(jt->second)) return false;
    }
  }
  return true;
}

template <typename Coeff>
std::string HeckeExpr<Coeff>::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << "  +  ";
    first = false;
    os << "w[" << w << "]*(" << c.str() << ")";
  }
  return os.str();
}

template class HeckeExpr<Poly>;
template class HeckeExpr<RatFn>;

std::map<int, Poly> poly_past_group(const RootDatum& rd, const Poly& p, int w) {
  return past_group(rd, p, w);
}

std::map<int, RatFn> ratfn_past_group(const RootDatum& rd, const RatFn& f, int w) {
  return past_group(rd, f, w);
}

std::map<int, Poly> poly_past_word(const RootDatum& rd, const Poly& p,
                                   const std::vector<int>& word) {
  std::map<int, Poly> out;
  past_word_rec(rd, p, word.data(), word.size(), rd.weyl().identity(), out);
  return out;
}

HeckeElt multiply(const HeckeElt& a, const HeckeElt& b) { return multiply_impl(a, b); }
LocHeckeElt multiply(const LocHeckeElt& a, const LocHeckeElt& b) {
  return multiply_impl(a, b);
}

HeckeElt hecke_unit(RootDatumPtr rd) { return HeckeElt::unit(std::move(rd)); }
HeckeElt hecke_group(RootDatumPtr rd, int w) { return HeckeElt::group(std::move(rd), w); }
HeckeElt hecke_poly(RootDatumPtr rd, Poly p) {
  return HeckeElt::coefficient(std::move(rd), std::move(p));
}
HeckeElt hecke_coordinate(RootDatumPtr rd, size_t i) {
  Poly x = Poly::variable(rd->ambient_dim(), i);
  return HeckeElt::coefficient(std::move(rd), std::move(x));
}
HeckeElt hecke_simple(RootDatumPtr rd, int alpha) {
  int s = rd->weyl().simple(alpha);
  return HeckeElt::group(std::move(rd), s);
}

LocHeckeElt to_localized(const HeckeElt& h) {
  LocHeckeElt out(h.datum());
  for (const auto& [w, p] : h.terms()) out.add_term(w, RatFn(p));
  return out;
}

long filtration_degree(const HeckeElt& h) {
  long d = -1;
  for (const auto& [w, p] : h.terms()) d = std::max(d, p.degree());
  return d;
}

HeckeElt star(const HeckeElt& h) {
  const RootDatumPtr& rd = h.datum();
  const auto& W = rd->weyl();
  int w0 = W.longest();
  // sigma0(p) = conj(-w0(p)): real substitution, then coefficient conjugation.
  GMat neg_w0 = -W[w0].dual_action;
  HeckeElt out(rd);
  for (const auto& [w, p] : h.terms()) {
    Poly sp = p.substitute_linear(neg_w0).conj_coeffs();
    HeckeElt term = multiply(hecke_group(rd, w0), hecke_poly(rd, std::move(sp)));
    term = multiply(term, hecke_group(rd, W.mult(w0, W.inv(w))));
    out += term;
  }
  return out;
}

HeckeElt scale_iso(const Rational& z, const HeckeElt& h, const RootDatumPtr& target) {
  if (z.is_zero()) fail(errc::invalid_argument, "scaling by zero");
  const RootDatumPtr& src = h.datum();
  if (!target->same_structure(*src))
    fail(errc::invalid_argument, "scaling isomorphism needs identical roots");
  for (size_t i = 0; i < src->num_simple(); ++i)
    if (src->k(static_cast<int>(i)) != z * target->k(static_cast<int>(i)))
      fail(errc::invalid_argument, "source parameters must be z times the target's");
  HeckeElt out(target);
  for (const auto& [w, p] : h.terms()) out.add_term(w, p.scale_variables(GaussRat(z)));
  return out;
}

HeckeElt psi_w(int w, const std::vector<int>& P, const HeckeElt& h) {
  const RootDatumPtr& rd = h.datum();
  const auto& W = rd->weyl();
  auto sub = rd->subgroup(P);
  for (const auto& [u, p] : h.terms())
    if (std::find(sub.begin(), sub.end(), u) == sub.end())
      fail(errc::unsupported_element, "element not supported on the parabolic subgroup");
  if (!rd->act_on_subset(w, P))
    fail(errc::invalid_argument, "w does not map P to simple roots");
  HeckeElt out(rd);
  int winv = W.inv(w);
  for (const auto& [u, p] : h.terms()) {
    int conj = W.mult(W.mult(w, u), winv);
    out.add_term(conj, p.substitute_linear(W[w].dual_action));
  }
  return out;
}

bool psi_w_matches_tau_conjugation(int w, const std::vector<int>& P, const HeckeElt& h) {
  TauContext tau(h.datum());
  LocHeckeElt conj = tau.multiply_tau_inverse_factorwise(
      multiply(tau.tau(w), to_localized(h)), w);
  return conj == to_localized(psi_w(w, P, h));
}

HeckeElt psi_gamma(const DiagramAut& g, const HeckeElt& h) {
  const RootDatumPtr& rd = h.datum();
  HeckeElt out(rd);
  for (const auto& [u, p] : h.terms())
    out.add_term(rd->conjugate_weyl(g, u), p.substitute_linear(g.dual_action));
  return out;
}

LocHeckeElt psi_gamma(const DiagramAut& g, const LocHeckeElt& h) {
  const RootDatumPtr& rd = h.datum();
  LocHeckeElt out(rd);
  for (const auto& [u, f] : h.terms())
    out.add_term(rd->conjugate_weyl(g, u), f.substitute_linear(g.dual_action));
  return out;
}

} // namespace ghal
