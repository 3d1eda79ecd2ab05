#include "ghal/induce.hpp"

#include <algorithm>
#include <map>

#include "ghal/error.hpp"
#include "ghal/modops.hpp"

namespace ghal {

bool InductionDatum::is_positive() const {
  return delta.rd->cone_test(lambda.real_part().v, Cone::aP_plus, P);
}

bool InductionDatum::delta_is_discrete_series() const {
  if (!delta.weights) return false;
  auto verdict = temperedness(delta, *delta.weights);
  return verdict == Temperedness::discrete_series;
}

void validate_datum(const InductionDatum& xi) {
  if (xi.delta.tag.kind != AlgebraKind::parabolic || xi.delta.tag.P != xi.P)
    fail(errc::invalid_argument, "delta must be a module over the parabolic of P");
  auto bad = validate(xi.delta);
  if (!bad.empty()) fail(errc::invalid_argument, "delta fails validation: " + bad[0]);
  if (!xi.delta.weights) fail(errc::unknown_weights, "delta must carry its weight list");
  if (xi.lambda.dim() != xi.delta.rd->ambient_dim())
    fail(errc::dimension_mismatch, "lambda has the wrong arity");
  for (int a : xi.P)
    if (!pair(xi.delta.rd->simple_root(a), xi.lambda.v).is_zero())
      fail(errc::invalid_argument, "lambda must pair to zero with the roots of P");
}

namespace {

std::vector<std::pair<Weight, int>> collect_weights(std::map<Weight, int>&& acc) {
  std::vector<std::pair<Weight, int>> out;
  out.reserve(acc.size());
  for (auto& [w, m] : acc) out.emplace_back(w, m);
  return out;
}

// Fiber data shared by plain and crossed induction.
struct Fiber {
  std::vector<GMat> x;                 // coordinate action on C_lambda tensor V_delta
  std::map<int, GMat> weyl_cache;      // W_P element -> action on the fiber
  const MatrixModule* delta;

  const GMat& weyl(int w) {
    auto it = weyl_cache.find(w);
    if (it != weyl_cache.end()) return it->second;
    GMat m = delta->weyl_action(w);
    return weyl_cache.emplace(w, std::move(m)).first->second;
  }

  // q(X) on the fiber; the coordinates commute by construction.
  GMat poly_action(const Poly& q) const {
    size_t d = delta->dim;
    GMat out(d, d);
    for (const auto& [e, c] : q.terms()) {
      GMat term = GMat::scalar(d, c);
      for (size_t i = 0; i < e.size(); ++i)
        for (unsigned t = 0; t < e[i]; ++t) term = term * x[i];
      out += term;
    }
    return out;
  }
};

Fiber make_fiber(const InductionDatum& xi) {
  Fiber f;
  f.delta = &xi.delta;
  size_t d = xi.delta.dim;
  for (size_t i = 0; i < xi.delta.rd->ambient_dim(); ++i)
    f.x.push_back(xi.delta.X[i] + GMat::scalar(d, xi.lambda.v[i]));
  return f;
}

} // namespace

std::vector<std::pair<Weight, int>> predicted_weights(const InductionDatum& xi) {
  validate_datum(xi);
  const RootDatum& rd = *xi.delta.rd;
  std::map<Weight, int> acc;
  for (int w : rd.minimal_coset_reps(xi.P))
    for (const auto& [mu, mult] : *xi.delta.weights)
      acc[rd.weyl().act_on_weight(w, xi.lambda + mu)] += mult;
  return collect_weights(std::move(acc));
}

std::vector<std::pair<Weight, int>> predicted_weights_crossed(
    const InductionDatum& xi, const std::vector<DiagramAut>& Gamma) {
  validate_datum(xi);
  const RootDatum& rd = *xi.delta.rd;
  std::map<Weight, int> acc;
  for (int w : rd.minimal_coset_reps(xi.P))
    for (const auto& g : Gamma)
      for (const auto& [mu, mult] : *xi.delta.weights) {
        Weight base = rd.weyl().act_on_weight(w, xi.lambda + mu);
        acc[Weight(g.point_action * base.v)] += mult;
      }
  return collect_weights(std::move(acc));
}

MatrixModule induce(const InductionDatum& xi) {
  validate_datum(xi);
  const RootDatumPtr& rd = xi.delta.rd;
  auto reps = rd->minimal_coset_reps(xi.P);
  size_t nb = reps.size();
  size_t d = xi.delta.dim;
  size_t dim = nb * d;
  std::map<int, size_t> rep_slot;
  for (size_t m = 0; m < nb; ++m) rep_slot[reps[m]] = m;

  Fiber fiber = make_fiber(xi);

  MatrixModule out;
  out.rd = rd;
  out.tag = AlgebraTag::full_algebra(*rd);
  out.dim = dim;
  std::vector<BasisLabel> labels;
  for (size_t m = 0; m < nb; ++m)
    for (size_t j = 0; j < d; ++j) labels.push_back({0, reps[m], static_cast<int>(j)});
  out.labels = std::move(labels);

  // h * (w_m tensor v_j) for h a generator: rewrite h w_m into normal form
  // sum_u u q_u, split u = u^P u_P and act with u_P q_u on the fiber.
  auto scatter = [&](GMat& target, size_t col_block, const std::map<int, Poly>& normal_form) {
    for (const auto& [u, q] : normal_form) {
      auto [uP, u_P] = rd->coset_decompose(u, xi.P);
      GMat block = fiber.weyl(u_P) * fiber.poly_action(q);
      size_t row_block = rep_slot.at(uP);
      for (size_t r = 0; r < d; ++r)
        for (size_t c = 0; c < d; ++c)
          target.at(row_block * d + r, col_block * d + c) += block.at(r, c);
    }
  };

  for (size_t i = 0; i < rd->ambient_dim(); ++i) {
    GMat xi_mat(dim, dim);
    Poly x = Poly::variable(rd->ambient_dim(), i);
    for (size_t m = 0; m < nb; ++m) scatter(xi_mat, m, poly_past_group(*rd, x, reps[m]));
    out.X.push_back(std::move(xi_mat));
  }
  for (size_t a = 0; a < rd->num_simple(); ++a) {
    GMat s_mat(dim, dim);
    for (size_t m = 0; m < nb; ++m) {
      // s_a w_m is a plain group product; no polynomial appears.
      int u = rd->weyl().mult(rd->weyl().simple(static_cast<int>(a)), reps[m]);
      auto [uP, u_P] = rd->coset_decompose(u, xi.P);
      const GMat& block = fiber.weyl(u_P);
      size_t row_block = rep_slot.at(uP);
      for (size_t r = 0; r < d; ++r)
        for (size_t c = 0; c < d; ++c)
          s_mat.at(row_block * d + r, m * d + c) += block.at(r, c);
    }
    out.S.emplace(static_cast<int>(a), std::move(s_mat));
  }

  out.weights = predicted_weights(xi);
  if (xi.delta.cc) out.cc = *xi.delta.cc + xi.lambda;
  if (xi.delta.gram) {
    GMat gram(dim, dim);
    for (size_t m = 0; m < nb; ++m)
      for (size_t r = 0; r < d; ++r)
        for (size_t c = 0; c < d; ++c)
          gram.at(m * d + r, m * d + c) = xi.delta.gram->at(r, c);
    out.gram = std::move(gram);
  }
  return out;
}

MatrixModule induce_crossed(const InductionDatum& xi, const std::vector<DiagramAut>& Gamma) {
  validate_datum(xi);
  const RootDatumPtr& rd = xi.delta.rd;
  if (Gamma.empty()) fail(errc::invalid_argument, "Gamma must contain the identity");
  // Closure and k-invariance of Gamma.
  auto find_gamma = [&](const std::vector<int>& perm) {
    for (size_t i = 0; i < Gamma.size(); ++i)
      if (Gamma[i].perm == perm) return static_cast<int>(i);
    return -1;
  };
  bool has_identity = false;
  for (const auto& g : Gamma) {
    if (g.is_identity()) has_identity = true;
    for (const auto& h : Gamma)
      if (find_gamma(rd->compose(g, h).perm) < 0)
        fail(errc::invalid_argument, "Gamma is not closed under composition");
  }
  if (!has_identity) fail(errc::invalid_argument, "Gamma must contain the identity");

  auto reps = rd->minimal_coset_reps(xi.P);
  size_t nb = reps.size(), ng = Gamma.size(), d = xi.delta.dim;
  size_t dim = nb * ng * d;
  std::map<int, size_t> rep_slot;
  for (size_t m = 0; m < nb; ++m) rep_slot[reps[m]] = m;
  auto slot = [&](size_t m, size_t a) { return (m * ng + a) * d; };

  Fiber fiber = make_fiber(xi);
  std::vector<GMat> gamma_inv_dual;
  for (const auto& g : Gamma) gamma_inv_dual.push_back(inverse(g.dual_action));

  MatrixModule out;
  out.rd = rd;
  out.tag = AlgebraTag::crossed_by(*rd, Gamma);
  out.dim = dim;
  std::vector<BasisLabel> labels;
  for (size_t m = 0; m < nb; ++m)
    for (size_t a = 0; a < ng; ++a)
      for (size_t j = 0; j < d; ++j)
        labels.push_back({static_cast<int>(a), reps[m], static_cast<int>(j)});
  out.labels = std::move(labels);

  auto scatter = [&](GMat& target, size_t col_off, size_t a,
                     const std::map<int, Poly>& normal_form) {
    for (const auto& [u, q] : normal_form) {
      auto [uP, u_P] = rd->coset_decompose(u, xi.P);
      GMat block = fiber.weyl(u_P) * fiber.poly_action(q);
      size_t row_off = slot(rep_slot.at(uP), a);
      for (size_t r = 0; r < d; ++r)
        for (size_t c = 0; c < d; ++c)
          target.at(row_off + r, col_off + c) += block.at(r, c);
    }
  };

  // Coordinates: x gamma w = gamma (gamma^{-1} x) w.
  for (size_t i = 0; i < rd->ambient_dim(); ++i) {
    GMat xmat(dim, dim);
    for (size_t a = 0; a < ng; ++a) {
      Poly moved = Poly::linear(gamma_inv_dual[a].col(i));
      for (size_t m = 0; m < nb; ++m)
        scatter(xmat, slot(m, a), a, poly_past_group(*rd, moved, reps[m]));
    }
    out.X.push_back(std::move(xmat));
  }
  // Reflections: s_b gamma w = gamma s_{gamma^{-1}(b)} w.
  for (size_t b = 0; b < rd->num_simple(); ++b) {
    GMat smat(dim, dim);
    for (size_t a = 0; a < ng; ++a) {
      const auto& perm = Gamma[a].perm;
      int moved = -1;
      for (size_t c = 0; c < perm.size(); ++c)
        if (perm[c] == static_cast<int>(b)) moved = static_cast<int>(c);
      for (size_t m = 0; m < nb; ++m) {
        int u = rd->weyl().mult(rd->weyl().simple(moved), reps[m]);
        auto [uP, u_P] = rd->coset_decompose(u, xi.P);
        const GMat& block = fiber.weyl(u_P);
        size_t row_off = slot(rep_slot.at(uP), a);
        size_t col_off = slot(m, a);
        for (size_t r = 0; r < d; ++r)
          for (size_t c = 0; c < d; ++c)
            smat.at(row_off + r, col_off + c) += block.at(r, c);
      }
    }
    out.S.emplace(static_cast<int>(b), std::move(smat));
  }
  // Automorphisms: gamma' (gamma w) = (gamma' gamma) w.
  for (size_t gp = 0; gp < ng; ++gp) {
    GMat gmat(dim, dim);
    for (size_t a = 0; a < ng; ++a) {
      int target = find_gamma(rd->compose(Gamma[gp], Gamma[a]).perm);
      for (size_t m = 0; m < nb; ++m) {
        size_t row_off = slot(m, static_cast<size_t>(target));
        size_t col_off = slot(m, a);
        for (size_t r = 0; r < d; ++r) gmat.at(row_off + r, col_off + r) = GaussRat(1);
      }
    }
    out.G.push_back(std::move(gmat));
  }

  out.weights = predicted_weights_crossed(xi, Gamma);
  if (xi.delta.cc) out.cc = *xi.delta.cc + xi.lambda;
  if (xi.delta.gram) {
    GMat gram(dim, dim);
    for (size_t blk = 0; blk < nb * ng; ++blk)
      for (size_t r = 0; r < d; ++r)
        for (size_t c = 0; c < d; ++c)
          gram.at(blk * d + r, blk * d + c) = xi.delta.gram->at(r, c);
    out.gram = std::move(gram);
  }
  return out;
}

} // namespace ghal
