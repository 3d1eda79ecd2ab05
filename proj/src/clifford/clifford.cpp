#include "ghal/clifford.hpp"

#include <algorithm>

#include "ghal/error.hpp"

namespace ghal {

namespace {

int find_aut(const std::vector<DiagramAut>& Gamma, const std::vector<int>& perm) {
  for (size_t i = 0; i < Gamma.size(); ++i)
    if (Gamma[i].perm == perm) return static_cast<int>(i);
  return -1;
}

// pi twisted by psi_gamma: X'(x) = pi(gamma(x)), S'_b = pi(s_{gamma(b)}). With
// the crossed-product convention gamma h gamma^{-1} = psi_gamma(h), the
// stabilizer intertwiners live in Hom(pi, pi o psi_gamma); this is the choice
// that makes the change-of-model map of the induced module equivariant.
MatrixModule twist_by(const MatrixModule& pi, const DiagramAut& g) {
  MatrixModule out;
  out.rd = pi.rd;
  out.tag = pi.tag;
  out.dim = pi.dim;
  for (size_t i = 0; i < pi.rd->ambient_dim(); ++i)
    out.X.push_back(pi.coordinate_action(g.dual_action.col(i)));
  for (int b : pi.tag.P) out.S.emplace(b, pi.s_matrix(g.perm[b]));
  if (pi.weights) {
    GMat point_inv = inverse(g.point_action);
    std::vector<std::pair<Weight, int>> ws;
    for (const auto& [mu, mult] : *pi.weights)
      ws.emplace_back(Weight(point_inv * mu.v), mult);
    std::sort(ws.begin(), ws.end());
    out.weights = std::move(ws);
  }
  return out;
}

GMat normalize_first_entry(const GMat& f) {
  for (const GaussRat& e : f.flat())
    if (!e.is_zero()) return e.inverse() * f;
  fail(errc::internal_error, "zero intertwiner cannot be normalized");
}

} // namespace

MatrixModule induce_to_crossed(const MatrixModule& pi, const std::vector<DiagramAut>& Gamma) {
  if (pi.tag.kind != AlgebraKind::full)
    fail(errc::invalid_argument, "crossed induction starts from a full-algebra module");
  const RootDatumPtr& rd = pi.rd;
  size_t ng = Gamma.size(), d = pi.dim;
  MatrixModule out;
  out.rd = rd;
  out.tag = AlgebraTag::crossed_by(*rd, Gamma);
  out.dim = ng * d;

  auto place = [&](GMat& target, size_t row_blk, size_t col_blk, const GMat& block) {
    for (size_t r = 0; r < d; ++r)
      for (size_t c = 0; c < d; ++c)
        target.at(row_blk * d + r, col_blk * d + c) += block.at(r, c);
  };

  std::vector<GMat> dual_inv;
  for (const auto& g : Gamma) dual_inv.push_back(inverse(g.dual_action));

  for (size_t i = 0; i < rd->ambient_dim(); ++i) {
    GMat x(out.dim, out.dim);
    for (size_t a = 0; a < ng; ++a)
      place(x, a, a, pi.coordinate_action(dual_inv[a].col(i)));
    out.X.push_back(std::move(x));
  }
  for (size_t b = 0; b < rd->num_simple(); ++b) {
    GMat s(out.dim, out.dim);
    for (size_t a = 0; a < ng; ++a) {
      int pre = -1;
      for (size_t c = 0; c < Gamma[a].perm.size(); ++c)
        if (Gamma[a].perm[c] == static_cast<int>(b)) pre = static_cast<int>(c);
      place(s, a, a, pi.s_matrix(pre));
    }
    out.S.emplace(static_cast<int>(b), std::move(s));
  }
  for (size_t gp = 0; gp < ng; ++gp) {
    GMat gm(out.dim, out.dim);
    for (size_t a = 0; a < ng; ++a) {
      int target = find_aut(Gamma, pi.rd->compose(Gamma[gp], Gamma[a]).perm);
      if (target < 0) fail(errc::invalid_argument, "Gamma is not closed");
      place(gm, static_cast<size_t>(target), a, GMat::identity(d));
    }
    out.G.push_back(std::move(gm));
  }
  if (pi.weights) {
    std::map<Weight, int> acc;
    for (const auto& g : Gamma)
      for (const auto& [mu, mult] : *pi.weights)
        acc[Weight(g.point_action * mu.v)] += mult;
    std::vector<std::pair<Weight, int>> ws(acc.begin(), acc.end());
    out.weights = std::move(ws);
  }
  if (pi.gram) {
    GMat gram(out.dim, out.dim);
    for (size_t a = 0; a < ng; ++a)
      for (size_t r = 0; r < d; ++r)
        for (size_t c = 0; c < d; ++c) gram.at(a * d + r, a * d + c) = pi.gram->at(r, c);
    out.gram = std::move(gram);
  }
  return out;
}

CliffordData stabilizer(const MatrixModule& pi,
                        const std::vector<std::pair<Weight, int>>& report,
                        const std::vector<DiagramAut>& Gamma) {
  auto irr = irreducibility(pi, report);
  if (irr.verdict != IrredVerdict::irreducible)
    fail(errc::not_irreducible, "stabilizer needs a certified irreducible module");
  CliffordData cd;
  cd.pi = pi;
  cd.Gamma = Gamma;
  for (size_t a = 0; a < Gamma.size(); ++a) {
    MatrixModule twisted = twist_by(pi, Gamma[a]);
    auto homs = hom_space(pi, twisted);
    if (homs.empty()) continue;
    if (homs.size() > 1)
      fail(errc::schur_violation, "hom space to a twist has dimension above one");
    cd.stabilizer.push_back(static_cast<int>(a));
    if (Gamma[a].is_identity())
      cd.intertwiners.push_back(GMat::identity(pi.dim));
    else
      cd.intertwiners.push_back(normalize_first_entry(homs[0]));
  }
  return cd;
}

void cocycle(CliffordData& cd) {
  cd.kappa.clear();
  for (size_t i = 0; i < cd.stabilizer.size(); ++i)
    for (size_t j = 0; j < cd.stabilizer.size(); ++j) {
      auto prod =
          cd.pi.rd->compose(cd.Gamma[cd.stabilizer[i]], cd.Gamma[cd.stabilizer[j]]);
      int pk = -1;
      for (size_t k = 0; k < cd.stabilizer.size(); ++k)
        if (cd.Gamma[cd.stabilizer[k]].perm == prod.perm) pk = static_cast<int>(k);
      if (pk < 0) fail(errc::internal_error, "stabilizer is not closed");
      GMat composite = cd.intertwiners[i] * cd.intertwiners[j];
      const GMat& direct = cd.intertwiners[pk];
      // kappa from the first nonzero entry, then verified entrywise.
      GaussRat ratio;
      bool found = false;
      for (size_t t = 0; t < composite.flat().size() && !found; ++t)
        if (!composite.flat()[t].is_zero()) {
          ratio = direct.flat()[t] / composite.flat()[t];
          found = true;
        }
      if (!found) fail(errc::internal_error, "zero composite intertwiner");
      if (!(ratio * composite == direct))
        fail(errc::inconsistent_scalars,
             "composite intertwiner is not a scalar multiple of the direct one");
      cd.kappa[{static_cast<int>(i), static_cast<int>(j)}] = ratio;
    }
  // 2-cocycle identity kappa(a,b) kappa(ab,c) = kappa(b,c) kappa(a,bc).
  auto stab_index = [&](const std::vector<int>& perm) {
    for (size_t k = 0; k < cd.stabilizer.size(); ++k)
      if (cd.Gamma[cd.stabilizer[k]].perm == perm) return static_cast<int>(k);
    fail(errc::internal_error, "stabilizer is not closed");
  };
  size_t n = cd.stabilizer.size();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c) {
        int ab = stab_index(
            cd.pi.rd->compose(cd.Gamma[cd.stabilizer[a]], cd.Gamma[cd.stabilizer[b]]).perm);
        int bc = stab_index(
            cd.pi.rd->compose(cd.Gamma[cd.stabilizer[b]], cd.Gamma[cd.stabilizer[c]]).perm);
        GaussRat lhs = cd.kappa.at({static_cast<int>(a), static_cast<int>(b)}) *
                       cd.kappa.at({ab, static_cast<int>(c)});
        GaussRat rhs = cd.kappa.at({static_cast<int>(b), static_cast<int>(c)}) *
                       cd.kappa.at({static_cast<int>(a), bc});
        if (lhs != rhs) fail(errc::internal_error, "2-cocycle identity fails");
      }
}

TwistedGroupAlgebra twisted_group_algebra(const CliffordData& cd) {
  TwistedGroupAlgebra t;
  t.order = cd.stabilizer.size();
  t.scalar.assign(t.order, std::vector<GaussRat>(t.order));
  t.product.assign(t.order, std::vector<int>(t.order, -1));
  for (size_t i = 0; i < t.order; ++i)
    for (size_t j = 0; j < t.order; ++j) {
      auto prod =
          cd.pi.rd->compose(cd.Gamma[cd.stabilizer[i]], cd.Gamma[cd.stabilizer[j]]);
      for (size_t k = 0; k < t.order; ++k)
        if (cd.Gamma[cd.stabilizer[k]].perm == prod.perm)
          t.product[i][j] = static_cast<int>(k);
      t.scalar[i][j] = cd.kappa.at({static_cast<int>(i), static_cast<int>(j)});
    }
  // Associativity: (T_a T_b) T_c = T_a (T_b T_c) as scaled basis elements.
  for (size_t a = 0; a < t.order; ++a)
    for (size_t b = 0; b < t.order; ++b)
      for (size_t c = 0; c < t.order; ++c) {
        int ab = t.product[a][b];
        int bc = t.product[b][c];
        if (t.product[ab][c] != t.product[a][bc] ||
            t.scalar[a][b] * t.scalar[ab][c] != t.scalar[b][c] * t.scalar[a][bc])
          fail(errc::internal_error, "twisted multiplication is not associative");
      }
  return t;
}

bool clifford_T_check(const CliffordData& cd) {
  const RootDatumPtr& rd = cd.pi.rd;
  size_t d = cd.pi.dim;
  size_t n = cd.stabilizer.size();
  std::vector<DiagramAut> stab_auts;
  for (int s : cd.stabilizer) stab_auts.push_back(cd.Gamma[s]);

  // Left side: induction of pi up to the stabilizer crossed product.
  MatrixModule left = induce_to_crossed(cd.pi, stab_auts);

  // Right side: the twisted-group-algebra model on the same index set.
  auto stab_index = [&](const std::vector<int>& perm) {
    for (size_t k = 0; k < n; ++k)
      if (stab_auts[k].perm == perm) return static_cast<int>(k);
    fail(errc::internal_error, "stabilizer is not closed");
  };
  MatrixModule right;
  right.rd = rd;
  right.tag = AlgebraTag::crossed_by(*rd, stab_auts);
  right.dim = n * d;
  auto place = [&](GMat& target, size_t rb, size_t cb, const GMat& block, const GaussRat& c) {
    for (size_t r = 0; r < d; ++r)
      for (size_t cc = 0; cc < d; ++cc)
        target.at(rb * d + r, cb * d + cc) += c * block.at(r, cc);
  };
  for (size_t i = 0; i < rd->ambient_dim(); ++i) {
    GMat x(right.dim, right.dim);
    for (size_t a = 0; a < n; ++a) place(x, a, a, cd.pi.X[i], GaussRat(1));
    right.X.push_back(std::move(x));
  }
  for (size_t b = 0; b < rd->num_simple(); ++b) {
    GMat s(right.dim, right.dim);
    for (size_t a = 0; a < n; ++a)
      place(s, a, a, cd.pi.s_matrix(static_cast<int>(b)), GaussRat(1));
    right.S.emplace(static_cast<int>(b), std::move(s));
  }
  for (size_t gp = 0; gp < n; ++gp) {
    GMat gm(right.dim, right.dim);
    for (size_t a = 0; a < n; ++a) {
      int target = stab_index(rd->compose(stab_auts[gp], stab_auts[a]).perm);
      GaussRat c = cd.kappa.at({static_cast<int>(gp), static_cast<int>(a)});
      place(gm, static_cast<size_t>(target), a, cd.intertwiners[gp], c);
    }
    right.G.push_back(std::move(gm));
  }

  // T: gamma tensor v -> T_gamma tensor I^gamma(v), block diagonal.
  GMat T(right.dim, left.dim);
  for (size_t a = 0; a < n; ++a)
    for (size_t r = 0; r < d; ++r)
      for (size_t c = 0; c < d; ++c)
        T.at(a * d + r, a * d + c) = cd.intertwiners[a].at(r, c);
  if (!invertible(T)) return false;

  auto lg = generator_matrices(left);
  auto rg = generator_matrices(right);
  for (size_t i = 0; i < lg.size(); ++i)
    if (T * lg[i] != rg[i] * T) return false;
  return true;
}

EndDimensionReport end_dimension_check(const CliffordData& cd) {
  MatrixModule ind = induce_to_crossed(cd.pi, cd.Gamma);
  EndDimensionReport rep;
  rep.end_dim = hom_space(ind, ind).size();
  rep.stabilizer_order = cd.stabilizer.size();
  return rep;
}

} // namespace ghal
