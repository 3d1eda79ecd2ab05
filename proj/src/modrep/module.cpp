#include "ghal/module.hpp"

#include <numeric>
#include <sstream>

#include "ghal/error.hpp"

namespace ghal {

AlgebraTag AlgebraTag::full_algebra(const RootDatum& rd) {
  AlgebraTag t;
  t.kind = AlgebraKind::full;
  t.P.resize(rd.num_simple());
  std::iota(t.P.begin(), t.P.end(), 0);
  return t;
}

AlgebraTag AlgebraTag::crossed_by(const RootDatum& rd, std::vector<DiagramAut> Gamma) {
  AlgebraTag t = full_algebra(rd);
  t.kind = AlgebraKind::crossed;
  t.Gamma = std::move(Gamma);
  return t;
}

const GMat& MatrixModule::s_matrix(int alpha) const {
  auto it = S.find(alpha);
  if (it == S.end()) fail(errc::invalid_argument, "no reflection matrix for this root");
  return it->second;
}

GMat MatrixModule::weyl_action(int w) const {
  GMat out = GMat::identity(dim);
  for (int letter : rd->weyl()[w].word) out = out * s_matrix(letter);
  return out;
}

GMat MatrixModule::coordinate_action(const GVec& form) const {
  GMat out(dim, dim);
  for (size_t i = 0; i < form.size(); ++i)
    if (!form[i].is_zero()) out += form[i] * X[i];
  return out;
}

namespace {

int braid_order(const RootDatum& rd, int a, int b) {
  Rational prod = rd.cartan(a, b) * rd.cartan(b, a);
  if (prod == Rational(0)) return 2;
  if (prod == Rational(1)) return 3;
  if (prod == Rational(2)) return 4;
  if (prod == Rational(3)) return 6;
  fail(errc::invalid_cartan, "Cartan product out of range");
}

int gamma_index_of(const AlgebraTag& tag, const std::vector<int>& perm) {
  for (size_t i = 0; i < tag.Gamma.size(); ++i)
    if (tag.Gamma[i].perm == perm) return static_cast<int>(i);
  return -1;
}

} // namespace

std::vector<std::string> validate(const MatrixModule& m) {
  std::vector<std::string> bad;
  auto report = [&](const std::string& s) { bad.push_back(s); };
  const RootDatum& rd = *m.rd;
  size_t n = rd.ambient_dim();
  if (m.X.size() != n) {
    report("wrong number of coordinate matrices");
    return bad;
  }
  for (const GMat& x : m.X)
    if (!x.is_square() || x.rows() != m.dim) {
      report("coordinate matrix with wrong shape");
      return bad;
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (m.X[i] * m.X[j] != m.X[j] * m.X[i]) {
        std::ostringstream os;
        os << "coordinate matrices " << i << " and " << j << " do not commute";
        report(os.str());
      }

  for (int a : m.tag.P) {
    auto it = m.S.find(a);
    if (it == m.S.end()) {
      report("missing reflection matrix");
      return bad;
    }
    const GMat& s = it->second;
    if (!s.is_square() || s.rows() != m.dim) {
      report("reflection matrix with wrong shape");
      return bad;
    }
    if (s * s != GMat::identity(m.dim)) report("reflection does not square to one");
  }

  // Braid relations inside the tag's root set.
  for (size_t ia = 0; ia < m.tag.P.size(); ++ia)
    for (size_t ib = ia + 1; ib < m.tag.P.size(); ++ib) {
      int a = m.tag.P[ia], b = m.tag.P[ib];
      int order = braid_order(rd, a, b);
      GMat prod = GMat::identity(m.dim);
      GMat prod2 = GMat::identity(m.dim);
      for (int t = 0; t < order; ++t) {
        prod = prod * (t % 2 == 0 ? m.s_matrix(a) : m.s_matrix(b));
        prod2 = prod2 * (t % 2 == 0 ? m.s_matrix(b) : m.s_matrix(a));
      }
      if (prod != prod2) {
        std::ostringstream os;
        os << "braid relation fails for roots " << a << ", " << b;
        report(os.str());
      }
    }

  // Cross relation per coordinate and tag root:
  //   X(x) S_a - S_a X(s_a x) = k_a <x, alpha_a^vee> Id.
  for (int a : m.tag.P) {
    const GMat& refl = rd.weyl()[rd.weyl().simple(a)].dual_action;
    for (size_t i = 0; i < n; ++i) {
      GMat sx = m.coordinate_action(refl.col(i));
      GMat lhs = m.X[i] * m.s_matrix(a) - m.s_matrix(a) * sx;
      GaussRat c = rd.k_gauss(a) * rd.simple_coroot(a)[i];
      if (lhs != GMat::scalar(m.dim, c)) {
        std::ostringstream os;
        os << "cross relation fails for coordinate " << i << " and root " << a;
        report(os.str());
      }
    }
  }

  // Storage conventions off the tag's span: a parabolic module kills t^{P*},
  // an extended-parabolic module acts on it by a scalar.
  if (m.tag.kind == AlgebraKind::parabolic || m.tag.kind == AlgebraKind::extended_parabolic) {
    for (const GVec& y : rd.t_P_star_perp_basis(m.tag.P)) {
      GMat act = m.coordinate_action(y);
      if (m.tag.kind == AlgebraKind::parabolic) {
        if (!act.is_zero()) report("t^{P*} direction does not act by zero");
      } else {
        if (m.dim > 0 && act != GMat::scalar(m.dim, act.at(0, 0)))
          report("t^{P*} direction does not act by a scalar");
      }
    }
  }

  if (m.tag.kind == AlgebraKind::crossed) {
    if (m.G.size() != m.tag.Gamma.size()) {
      report("wrong number of automorphism matrices");
      return bad;
    }
    for (size_t gi = 0; gi < m.tag.Gamma.size(); ++gi) {
      const DiagramAut& g = m.tag.Gamma[gi];
      const GMat& Gm = m.G[gi];
      if (!Gm.is_square() || Gm.rows() != m.dim) {
        report("automorphism matrix with wrong shape");
        return bad;
      }
      if (!invertible(Gm)) {
        report("automorphism matrix is singular");
        continue;
      }
      GMat ginv = inverse(Gm);
      for (size_t i = 0; i < n; ++i) {
        GMat expect = m.coordinate_action(g.dual_action.col(i));
        if (Gm * m.X[i] * ginv != expect) report("automorphism does not twist coordinates");
      }
      for (int a : m.tag.P)
        if (Gm * m.s_matrix(a) * ginv != m.s_matrix(g.perm[a]))
          report("automorphism does not permute reflections");
      for (size_t gj = 0; gj < m.tag.Gamma.size(); ++gj) {
        auto prod = m.rd->compose(g, m.tag.Gamma[gj]);
        int pi = gamma_index_of(m.tag, prod.perm);
        if (pi < 0)
          report("Gamma list is not closed under composition");
        else if (Gm * m.G[gj] != m.G[pi])
          report("automorphism matrices do not respect the group law");
      }
    }
  }

  if (m.weights) {
    int total = 0;
    for (const auto& [mu, mult] : *m.weights) {
      if (mult <= 0) report("nonpositive weight multiplicity");
      total += mult;
    }
    if (total != static_cast<int>(m.dim)) report("weight multiplicities do not sum to dim");
  }
  return bad;
}

MatrixModule one_dimensional_module(const RootDatumPtr& rd, const std::vector<int>& P,
                                    const std::vector<int>& signs) {
  if (signs.size() != P.size()) fail(errc::invalid_argument, "one sign per root expected");
  MatrixModule m;
  m.rd = rd;
  m.tag = AlgebraTag::parabolic(P);
  m.dim = 1;
  // Weight in span of the coroots of P: <alpha_i, mu> = sign_i k_i.
  Weight mu = Weight::zero(rd->ambient_dim());
  if (!P.empty()) {
    std::vector<GVec> cols;
    for (int a : P) cols.push_back(rd->simple_coroot(a));
    GMat coroot_cols = GMat::from_cols(cols);
    std::vector<GVec> rows;
    for (int a : P) rows.push_back(rd->simple_root(a));
    GMat pairing = GMat::from_rows(rows) * coroot_cols;
    GVec rhs(P.size());
    for (size_t i = 0; i < P.size(); ++i)
      rhs[i] = GaussRat(Rational(signs[i])) * rd->k_gauss(P[i]);
    auto sol = solve(pairing, rhs);
    if (!sol) fail(errc::internal_error, "P-Cartan block must be invertible");
    mu = Weight(coroot_cols * *sol);
  }
  for (size_t i = 0; i < rd->ambient_dim(); ++i) {
    GMat x(1, 1);
    x.at(0, 0) = mu.v[i];
    m.X.push_back(std::move(x));
  }
  for (size_t i = 0; i < P.size(); ++i) {
    GMat s(1, 1);
    s.at(0, 0) = GaussRat(Rational(signs[i]));
    m.S.emplace(P[i], std::move(s));
  }
  m.weights = {{{mu, 1}}};
  m.cc = mu;
  m.gram = GMat::identity(1);
  auto bad = validate(m);
  if (!bad.empty()) fail(errc::internal_error, "catalog module fails validation: " + bad[0]);
  return m;
}

MatrixModule catalog(const RootDatumPtr& rd, const std::vector<int>& P, CatalogKind kind) {
  switch (kind) {
    case CatalogKind::delta0: {
      if (!P.empty())
        fail(errc::invalid_argument, "delta0 is the module of the empty parabolic");
      return one_dimensional_module(rd, {}, {});
    }
    case CatalogKind::steinberg: {
      for (int a : P)
        if (!(rd->k(a) > Rational(0)))
          fail(errc::parameter_sign, "steinberg needs strictly positive parameters on P");
      return one_dimensional_module(rd, P, std::vector<int>(P.size(), -1));
    }
    case CatalogKind::trivial:
      return one_dimensional_module(rd, P, std::vector<int>(P.size(), +1));
  }
  fail(errc::invalid_argument, "unknown catalog kind");
}

GMat module_eval(const MatrixModule& m, const HeckeElt& h) {
  if (!h.datum()->same_structure(*m.rd))
    fail(errc::invalid_argument, "element and module live over different data");
  GMat out(m.dim, m.dim);
  for (const auto& [w, p] : h.terms()) {
    GMat pw(m.dim, m.dim);
    for (const auto& [e, c] : p.terms()) {
      GMat term = GMat::scalar(m.dim, c);
      for (size_t i = 0; i < e.size(); ++i)
        for (unsigned t = 0; t < e[i]; ++t) term = term * m.X[i];
      pw += term;
    }
    out += m.weyl_action(w) * pw;
  }
  return out;
}

} // namespace ghal
