#include "ghal/intertwine.hpp"

#include <algorithm>

#include "ghal/apply.hpp"
#include "ghal/error.hpp"

namespace ghal {

namespace {

// Transported fiber: X' = delta(u^{-1} x), S'_{u(a)} = S_a, weights moved by u.
MatrixModule transport_delta(const MatrixModule& delta, const GMat& dual_inv,
                             const GMat& point_act, const std::vector<int>& new_P,
                             const std::vector<int>& perm_to_new) {
  MatrixModule out;
  out.rd = delta.rd;
  out.tag = AlgebraTag::parabolic(new_P);
  out.dim = delta.dim;
  for (size_t i = 0; i < delta.rd->ambient_dim(); ++i)
    out.X.push_back(delta.coordinate_action(dual_inv.col(i)));
  for (size_t idx = 0; idx < perm_to_new.size(); ++idx)
    out.S.emplace(perm_to_new[idx], delta.S.at(delta.tag.P[idx]));
  if (delta.weights) {
    std::vector<std::pair<Weight, int>> ws;
    for (const auto& [mu, mult] : *delta.weights)
      ws.emplace_back(Weight(point_act * mu.v), mult);
    std::sort(ws.begin(), ws.end());
    out.weights = std::move(ws);
  }
  if (delta.cc) out.cc = Weight(point_act * delta.cc->v);
  out.gram = delta.gram;
  return out;
}

} // namespace

InductionDatum act_on_datum(int w, const InductionDatum& xi) {
  const RootDatumPtr& rd = xi.delta.rd;
  auto q = rd->act_on_subset(w, xi.P);
  if (!q) fail(errc::not_simple_image, "w does not map P into the simple roots");
  std::vector<int> perm_to_new;
  for (int a : xi.P)
    perm_to_new.push_back(*rd->simple_root_index(rd->weyl().act_on_root(w, rd->simple_root(a))));
  const auto& W = rd->weyl();
  InductionDatum out;
  out.P = *q;
  out.delta = transport_delta(xi.delta, W[W.inv(w)].dual_action, W[w].point_action,
                              *q, perm_to_new);
  out.lambda = W.act_on_weight(w, xi.lambda);
  return out;
}

InductionDatum act_on_datum(const DiagramAut& g, const InductionDatum& xi) {
  const RootDatumPtr& rd = xi.delta.rd;
  std::vector<int> new_P, perm_to_new;
  for (int a : xi.P) {
    new_P.push_back(g.perm[a]);
    perm_to_new.push_back(g.perm[a]);
  }
  std::sort(new_P.begin(), new_P.end());
  InductionDatum out;
  out.P = std::move(new_P);
  out.delta = transport_delta(xi.delta, inverse(g.dual_action), g.point_action,
                              out.P, perm_to_new);
  out.lambda = Weight(g.point_action * xi.lambda.v);
  return out;
}

InductionDatum act_on_datum(const DiagramAut& g, int w, const InductionDatum& xi) {
  return act_on_datum(g, act_on_datum(w, xi));
}

bool datum_equal(const InductionDatum& a, const InductionDatum& b) {
  if (a.P != b.P || !(a.lambda == b.lambda)) return false;
  if (a.delta.dim != b.delta.dim) return false;
  if (a.delta.X != b.delta.X) return false;
  for (int p : a.P) {
    if (!b.delta.S.count(p) || !a.delta.S.count(p)) return false;
    if (a.delta.S.at(p) != b.delta.S.at(p)) return false;
  }
  return true;
}

IntertwinerResult intertwiner(TauContext& tau, int w, const InductionDatum& xi) {
  const RootDatumPtr& rd = xi.delta.rd;
  const auto& W = rd->weyl();
  IntertwinerResult res;
  res.source = xi;
  res.target = act_on_datum(w, xi);
  const InductionDatum& eta = res.target;

  auto src_reps = rd->minimal_coset_reps(xi.P);
  auto tgt_reps = rd->minimal_coset_reps(eta.P);
  std::map<int, size_t> tgt_slot;
  for (size_t m = 0; m < tgt_reps.size(); ++m) tgt_slot[tgt_reps[m]] = m;
  size_t d = xi.delta.dim;
  size_t dim = src_reps.size() * d;

  // Target fiber coordinate tuple and parabolic action.
  std::vector<GMat> xf;
  for (size_t i = 0; i < rd->ambient_dim(); ++i)
    xf.push_back(eta.delta.X[i] + GMat::scalar(d, eta.lambda.v[i]));
  std::map<int, GMat> weyl_cache;
  auto fiber_weyl = [&](int u) -> const GMat& {
    auto it = weyl_cache.find(u);
    if (it != weyl_cache.end()) return it->second;
    GMat mtx = GMat::identity(d);
    for (int letter : W[u].word) mtx = mtx * eta.delta.S.at(letter);
    return weyl_cache.emplace(u, std::move(mtx)).first->second;
  };

  LocHeckeElt tw_inv = tau.tau_inverse(w);
  // Rational coefficients evaluated once on the target fiber.
  std::map<int, GMat> coeff_on_fiber;
  for (const auto& [u, f] : tw_inv.terms()) {
    auto applied = apply_ratfn_to_commuting(f, xf);
    if (!applied.matrix) {
      res.regular = false;
      res.singular_denominator = applied.singular_factor;
      res.singular_at = eta.lambda;
      return res;
    }
    coeff_on_fiber.emplace(u, std::move(*applied.matrix));
  }

  GMat op(dim, dim);
  for (size_t m = 0; m < src_reps.size(); ++m) {
    for (const auto& [u, f] : tw_inv.terms()) {
      int v = W.mult(src_reps[m], u);
      auto [vQ, v_Q] = rd->coset_decompose(v, eta.P);
      GMat block = fiber_weyl(v_Q) * coeff_on_fiber.at(u);
      size_t row_off = tgt_slot.at(vQ) * d;
      for (size_t r = 0; r < d; ++r)
        for (size_t c = 0; c < d; ++c) op.at(row_off + r, m * d + c) += block.at(r, c);
    }
  }
  res.regular = true;
  res.matrix = std::move(op);

  // The intertwining identity is part of the contract; a failure here would
  // mean the rewriting engine and the module construction disagree.
  MatrixModule src = induce(xi), tgt = induce(eta);
  auto mg = generator_matrices(src);
  auto ng = generator_matrices(tgt);
  for (size_t g = 0; g < mg.size(); ++g)
    if (*res.matrix * mg[g] != ng[g] * *res.matrix)
      fail(errc::internal_error, "constructed operator does not intertwine");
  return res;
}

namespace {

int find_aut(const std::vector<DiagramAut>& Gamma, const std::vector<int>& perm) {
  for (size_t i = 0; i < Gamma.size(); ++i)
    if (Gamma[i].perm == perm) return static_cast<int>(i);
  return -1;
}

} // namespace

IntertwinerResult intertwiner_gamma(const DiagramAut& g, const InductionDatum& xi,
                                    const std::vector<DiagramAut>& Gamma) {
  const RootDatumPtr& rd = xi.delta.rd;
  IntertwinerResult res;
  res.source = xi;
  res.target = act_on_datum(g, xi);
  const InductionDatum& eta = res.target;

  auto src_reps = rd->minimal_coset_reps(xi.P);
  auto tgt_reps = rd->minimal_coset_reps(eta.P);
  std::map<int, size_t> tgt_slot;
  for (size_t m = 0; m < tgt_reps.size(); ++m) tgt_slot[tgt_reps[m]] = m;
  size_t d = xi.delta.dim, ng = Gamma.size();
  size_t dim = src_reps.size() * ng * d;

  DiagramAut ginv = rd->invert(g);
  GMat op(dim, dim);
  for (size_t m = 0; m < src_reps.size(); ++m)
    for (size_t a = 0; a < ng; ++a) {
      // gamma_a w_m gamma^{-1} = (gamma_a gamma^{-1}) (gamma w_m gamma^{-1}).
      int b = find_aut(Gamma, rd->compose(Gamma[a], ginv).perm);
      if (b < 0) fail(errc::invalid_argument, "Gamma is not closed under composition");
      int w2 = rd->conjugate_weyl(g, src_reps[m]);
      size_t row_off = (tgt_slot.at(w2) * ng + static_cast<size_t>(b)) * d;
      size_t col_off = (m * ng + a) * d;
      for (size_t j = 0; j < d; ++j) op.at(row_off + j, col_off + j) = GaussRat(1);
    }
  res.regular = true;
  res.matrix = std::move(op);

  MatrixModule src = induce_crossed(xi, Gamma), tgt = induce_crossed(eta, Gamma);
  auto mg = generator_matrices(src);
  auto tg = generator_matrices(tgt);
  for (size_t i = 0; i < mg.size(); ++i)
    if (*res.matrix * mg[i] != tg[i] * *res.matrix)
      fail(errc::internal_error, "automorphism operator does not intertwine");
  return res;
}

IntertwinerResult intertwiner_mixed(TauContext& tau, const DiagramAut& g, int w,
                                    const InductionDatum& xi,
                                    const std::vector<DiagramAut>& Gamma) {
  const RootDatumPtr& rd = xi.delta.rd;
  IntertwinerResult plain = intertwiner(tau, w, xi);
  IntertwinerResult res;
  res.source = xi;
  res.target = act_on_datum(g, plain.target);
  if (!plain.regular) {
    res.regular = false;
    res.singular_denominator = plain.singular_denominator;
    res.singular_at = plain.singular_at;
    return res;
  }
  // Induce the plain operator up to the crossed product: it acts within each
  // gamma-slice of the basis (w outermost, gamma inside).
  size_t ng = Gamma.size(), d = xi.delta.dim;
  size_t nb_src = rd->minimal_coset_reps(xi.P).size();
  size_t nb_tgt = rd->minimal_coset_reps(plain.target.P).size();
  GMat induced(nb_tgt * ng * d, nb_src * ng * d);
  for (size_t mc = 0; mc < nb_src; ++mc)
    for (size_t mr = 0; mr < nb_tgt; ++mr)
      for (size_t a = 0; a < ng; ++a)
        for (size_t r = 0; r < d; ++r)
          for (size_t c = 0; c < d; ++c)
            induced.at((mr * ng + a) * d + r, (mc * ng + a) * d + c) =
                plain.matrix->at(mr * d + r, mc * d + c);

  IntertwinerResult gop = intertwiner_gamma(g, plain.target, Gamma);
  res.regular = true;
  res.matrix = *gop.matrix * induced;
  res.target = gop.target;
  return res;
}

std::vector<ExtElement> ext_w_of_p_q(const RootDatum& rd, const std::vector<DiagramAut>& Gamma,
                                     const std::vector<int>& P, const std::vector<int>& Q) {
  std::vector<ExtElement> out;
  std::vector<DiagramAut> gs = Gamma.empty() ? std::vector<DiagramAut>{} : Gamma;
  if (gs.empty()) gs.push_back(DiagramAut{});
  for (size_t a = 0; a < gs.size(); ++a) {
    std::vector<int> pre_Q;
    if (Gamma.empty()) {
      pre_Q = Q;
    } else {
      // w(P) = gamma^{-1}(Q) as root subsets.
      DiagramAut ginv = rd.invert(Gamma[a]);
      for (int q : Q) pre_Q.push_back(ginv.perm[q]);
      std::sort(pre_Q.begin(), pre_Q.end());
    }
    for (int w : rd.w_of_p_q(P, pre_Q)) out.push_back({static_cast<int>(a), w});
  }
  return out;
}

SpanReport span_check(TauContext& tau, const InductionDatum& xi, const InductionDatum& eta,
                      const std::vector<DiagramAut>& Gamma) {
  const RootDatumPtr& rd = xi.delta.rd;
  SpanReport rep;
  rep.comparable = (xi.is_unitary() && eta.is_unitary()) ||
                   (xi.is_positive() && eta.is_positive());
  bool crossed = !Gamma.empty();

  MatrixModule src = crossed ? induce_crossed(xi, Gamma) : induce(xi);
  MatrixModule tgt = crossed ? induce_crossed(eta, Gamma) : induce(eta);
  rep.homdim = hom_space(src, tgt).size();

  std::vector<GMat> ops;
  for (const ExtElement& u : ext_w_of_p_q(*rd, Gamma, xi.P, eta.P)) {
    InductionDatum moved = crossed ? act_on_datum(Gamma[u.gamma_index], u.w, xi)
                                   : act_on_datum(u.w, xi);
    if (!datum_equal(moved, eta)) continue;
    rep.candidates.push_back(u);
    IntertwinerResult op =
        crossed ? intertwiner_mixed(tau, Gamma[u.gamma_index], u.w, xi, Gamma)
                : intertwiner(tau, u.w, xi);
    if (!op.regular) {
      rep.all_regular = false;
      continue;
    }
    if (!invertible(*op.matrix)) rep.all_invertible = false;
    ops.push_back(*op.matrix);
  }
  if (!ops.empty()) {
    std::vector<GVec> rows;
    for (const GMat& f : ops) rows.push_back(f.flat());
    rep.span_rank = rank(GMat::from_rows(rows));
  }
  return rep;
}

std::vector<int> p_of_xi(const InductionDatum& xi) {
  if (!xi.is_positive()) fail(errc::not_positive, "datum is not positive");
  const RootDatum& rd = *xi.delta.rd;
  std::vector<int> out;
  GVec re = xi.lambda.real_part().v;
  for (size_t a = 0; a < rd.num_simple(); ++a)
    if (pair(rd.simple_root(static_cast<int>(a)), re).is_zero())
      out.push_back(static_cast<int>(a));
  return out;
}

InductionDatum xi_u(const InductionDatum& xi) {
  std::vector<int> p = p_of_xi(xi);
  InductionDatum out = xi;
  out.lambda = xi.delta.rd->project_t_P(xi.lambda, p);
  return out;
}

TriangularityReport x_action_triangularity(const MatrixModule& m, const InductionDatum& xi,
                                           size_t coordinate) {
  TriangularityReport rep;
  if (!m.labels) {
    rep.ok = false;
    rep.violation = "module carries no basis labels";
    return rep;
  }
  const RootDatumPtr& rd = m.rd;
  const auto& W = rd->weyl();
  size_t d = xi.delta.dim;
  size_t blocks = m.dim / d;
  const GMat& x = m.X.at(coordinate);
  std::vector<DiagramAut> Gamma = m.tag.Gamma;
  if (Gamma.empty()) Gamma.push_back(rd->identity_aut());

  for (size_t bc = 0; bc < blocks; ++bc) {
    const BasisLabel& lab = (*m.labels)[bc * d];
    // Combined action gamma w on t.
    const DiagramAut& g = Gamma[lab.gamma];
    GMat point = g.point_action * W[lab.weyl].point_action;
    GMat dual = g.dual_action * W[lab.weyl].dual_action;
    Weight moved = Weight(point * xi.lambda.v);
    GaussRat scalar = moved.v[coordinate];
    rep.diagonal_scalars.push_back(scalar);
    // Fiber part: delta action of (gamma w)^{-1} x_i.
    GMat fiber = xi.delta.coordinate_action(inverse(dual).col(coordinate));
    GMat expect = GMat::scalar(d, scalar) + fiber;
    for (size_t br = 0; br < blocks; ++br) {
      for (size_t r = 0; r < d; ++r)
        for (size_t c = 0; c < d; ++c) {
          const GaussRat& entry = x.at(br * d + r, bc * d + c);
          if (br > bc && !entry.is_zero()) {
            rep.ok = false;
            rep.violation = "nonzero entry below the block diagonal";
            return rep;
          }
          if (br == bc && entry != expect.at(r, c)) {
            rep.ok = false;
            rep.violation = "diagonal block differs from the predicted action";
            return rep;
          }
        }
    }
  }
  return rep;
}

bool rigidity_check(TauContext& tau, const InductionDatum& xi, const InductionDatum& eta,
                    const ExtElement& u, const Weight& lambda_prime, const Weight& mu_prime,
                    const std::vector<DiagramAut>& Gamma,
                    const std::optional<GMat>& f_override) {
  const RootDatumPtr& rd = xi.delta.rd;
  if (!xi.is_positive() || !eta.is_positive())
    fail(errc::not_positive, "rigidity needs positive data");
  std::vector<DiagramAut> gs = Gamma.empty()
      ? std::vector<DiagramAut>{rd->identity_aut()} : Gamma;

  // Stabilizer condition: every u' in W'(P,Q) with u'(lambda) = mu must also
  // carry lambda' to mu'.
  for (const ExtElement& up : ext_w_of_p_q(*rd, gs, xi.P, eta.P)) {
    const DiagramAut& g = gs[up.gamma_index];
    auto move = [&](const Weight& v) {
      return Weight(g.point_action * rd->weyl()[up.w].point_action * v.v);
    };
    if (move(xi.lambda) == eta.lambda && !(move(lambda_prime) == mu_prime))
      fail(errc::stabilizer_condition_failed,
           "a stabilizing element separates the transported characters");
  }

  GMat f(0, 0);
  if (f_override) {
    f = *f_override;
  } else {
    IntertwinerResult op = intertwiner_mixed(tau, gs[u.gamma_index], u.w, xi, gs);
    if (!op.regular) fail(errc::singular, "base operator is singular");
    f = *op.matrix;
  }

  InductionDatum xi_p{xi.P, xi.delta, lambda_prime};
  InductionDatum eta_p{eta.P, eta.delta, mu_prime};
  MatrixModule src = induce_crossed(xi_p, gs);
  MatrixModule tgt = induce_crossed(eta_p, gs);
  auto mg = generator_matrices(src);
  auto ng = generator_matrices(tgt);
  for (size_t i = 0; i < mg.size(); ++i)
    if (f * mg[i] != ng[i] * f) return false;
  return true;
}

} // namespace ghal
