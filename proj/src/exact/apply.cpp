#include "ghal/apply.hpp"

#include "ghal/error.hpp"

namespace ghal {

namespace {

size_t common_dim(const std::vector<GMat>& x) {
  if (x.empty()) fail(errc::invalid_argument, "empty matrix tuple");
  size_t d = x[0].rows();
  for (const GMat& m : x)
    if (!m.is_square() || m.rows() != d)
      fail(errc::dimension_mismatch, "matrix tuple entries must be square of equal size");
  return d;
}

void check_commuting(const std::vector<GMat>& x) {
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j)
      if (x[i] * x[j] != x[j] * x[i])
        fail(errc::non_commuting_tuple, "matrix tuple does not commute");
}

GMat apply_unchecked(const Poly& p, const std::vector<GMat>& x, size_t d) {
  GMat out(d, d);
  // Power cache per variable.
  std::vector<std::vector<GMat>> powers(x.size());
  auto power = [&](size_t i, unsigned e) -> const GMat& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(GMat::identity(d));
    while (cache.size() <= e) cache.push_back(cache.back() * x[i]);
    return cache[e];
  };
  for (const auto& [e, c] : p.terms()) {
    GMat term = GMat::scalar(d, c);
    for (size_t i = 0; i < x.size(); ++i)
      if (e[i]) term = term * power(i, e[i]);
    out += term;
  }
  return out;
}

} // namespace

GMat apply_poly_to_commuting(const Poly& p, const std::vector<GMat>& x) {
  size_t d = common_dim(x);
  if (p.nvars() != x.size()) fail(errc::dimension_mismatch, "polynomial arity vs tuple size");
  check_commuting(x);
  return apply_unchecked(p, x, d);
}

RatFnOnModule apply_ratfn_to_commuting(const RatFn& f, const std::vector<GMat>& x) {
  size_t d = common_dim(x);
  if (f.nvars() != x.size() && !f.is_zero())
    fail(errc::dimension_mismatch, "rational function arity vs tuple size");
  check_commuting(x);
  GMat out = apply_unchecked(f.num(), x, d);
  for (const Poly& factor : f.den_factors()) {
    GMat fm = apply_unchecked(factor, x, d);
    if (!invertible(fm)) return {std::nullopt, factor};
    out = out * inverse(fm);
  }
  return {std::move(out), std::nullopt};
}

} // namespace ghal
