#include "ghal/error.hpp"
#include "ghal/hecke.hpp"

namespace ghal {

LocHeckeElt TauContext::tau_simple(int alpha) const {
  const RootDatum& rd = *rd_;
  size_t n = rd.ambient_dim();
  Poly alpha_poly = Poly::linear(rd.simple_root(alpha));
  Poly denom = alpha_poly + Poly::constant(n, rd.k_gauss(alpha));
  // (s a - k)(a + k)^{-1} = s * a/(a+k) + 1 * (-k)/(a+k).
  LocHeckeElt out(rd_);
  out.add_term(rd.weyl().simple(alpha), RatFn(alpha_poly, {denom}));
  out.add_term(rd.weyl().identity(),
               RatFn(Poly::constant(n, -rd.k_gauss(alpha)), {denom}));
  return out;
}

LocHeckeElt TauContext::tau(int w) {
  std::lock_guard<std::mutex> lock(mutex_);
  std::vector<int> todo = {w};
  while (!todo.empty()) {
    int v = todo.back();
    if (cache_.count(v)) {
      todo.pop_back();
      continue;
    }
    const auto& word = rd_->weyl()[v].word;
    if (word.empty()) {
      cache_.emplace(v, LocHeckeElt::unit(rd_));
      todo.pop_back();
      continue;
    }
    // Built along the stored canonical reduced word: the parent element drops
    // the final letter, and its word is exactly the remaining prefix.
    int parent = rd_->weyl().mult(v, rd_->weyl().simple(word.back()));
    auto it = cache_.find(parent);
    if (it == cache_.end()) {
      todo.push_back(parent);
      continue;
    }
    cache_.emplace(v, multiply(it->second, tau_simple(word.back())));
    todo.pop_back();
  }
  return cache_.at(w);
}

LocHeckeElt TauContext::tau_inverse(int w) { return tau(rd_->weyl().inv(w)); }

LocHeckeElt TauContext::multiply_tau_factorwise(LocHeckeElt a, int v) const {
  for (int letter : rd_->weyl()[v].word) a = multiply(a, tau_simple(letter));
  return a;
}

LocHeckeElt TauContext::multiply_tau_inverse_factorwise(LocHeckeElt a, int v) const {
  return multiply_tau_factorwise(std::move(a), rd_->weyl().inv(v));
}

} // namespace ghal
