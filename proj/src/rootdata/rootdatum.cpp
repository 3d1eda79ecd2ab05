#include "ghal/rootdatum.hpp"

#include <algorithm>
#include <numeric>

#include "ghal/error.hpp"

namespace ghal {

namespace {
constexpr size_t kMaxWeylSize = 20000;
constexpr size_t kMaxRoots = 2000;
} // namespace

bool Weight::is_real() const {
  for (const auto& c : v)
    if (!c.im().is_zero()) return false;
  return true;
}

Weight Weight::real_part() const {
  GVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = GaussRat(v[i].re());
  return Weight(out);
}

Weight Weight::imag_part() const {
  GVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = GaussRat(v[i].im());
  return Weight(out);
}

GaussRat pair(const GVec& x, const GVec& lambda) { return dot(x, lambda); }

int WeylGroup::index_of(const GMat& dual_action) const {
  auto it = by_matrix_.find(dual_action);
  if (it == by_matrix_.end()) fail(errc::internal_error, "matrix is not a Weyl element");
  return it->second;
}

GVec WeylGroup::act_on_root(int w, const GVec& x) const {
  return elements_[w].dual_action * x;
}

Weight WeylGroup::act_on_weight(int w, const Weight& lam) const {
  return Weight(elements_[w].point_action * lam.v);
}

bool DiagramAut::is_identity() const {
  for (size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

std::shared_ptr<const RootDatum> RootDatum::preset(
    const std::string& name, const std::vector<Rational>& k) {
  std::vector<std::vector<long>> cartan;
  if (name == "A1") cartan = {{2}};
  else if (name == "A2") cartan = {{2, -1}, {-1, 2}};
  else if (name == "B2") cartan = {{2, -1}, {-2, 2}};
  else if (name == "G2") cartan = {{2, -1}, {-3, 2}};
  else if (name == "A1xA1") cartan = {{2, 0}, {0, 2}};
  else fail(errc::invalid_argument, "unknown preset '" + name + "'");

  size_t m = cartan.size();
  std::vector<GVec> roots(m), coroots(m);
  for (size_t i = 0; i < m; ++i) {
    roots[i].assign(m, GaussRat());
    coroots[i].assign(m, GaussRat());
    coroots[i][i] = GaussRat(1);
    for (size_t j = 0; j < m; ++j) roots[i][j] = GaussRat(Rational(cartan[i][j]));
  }
  std::vector<Rational> kk = k;
  if (kk.empty()) kk.assign(m, Rational(1));
  return build(m, std::move(roots), std::move(coroots), std::move(kk));
}

std::shared_ptr<const RootDatum> RootDatum::build(
    size_t n, std::vector<GVec> roots, std::vector<GVec> coroots, std::vector<Rational> k) {
  auto rd = std::shared_ptr<RootDatum>(new RootDatum());
  rd->n_ = n;
  rd->roots_ = std::move(roots);
  rd->coroots_ = std::move(coroots);
  rd->k_ = std::move(k);
  rd->validate_and_close();
  return rd;
}

std::shared_ptr<const RootDatum> RootDatum::with_scaled_k(const Rational& z) const {
  if (z.is_zero()) fail(errc::invalid_argument, "parameter scale must be nonzero");
  std::vector<Rational> k = k_;
  for (auto& x : k) x *= z;
  return build(n_, roots_, coroots_, std::move(k));
}

Rational RootDatum::cartan(int i, int j) const {
  GaussRat p = pair(roots_[i], coroots_[j]);
  return p.re();
}

void RootDatum::validate_and_close() {
  size_t m = roots_.size();
  if (coroots_.size() != m || k_.size() != m)
    fail(errc::invalid_argument, "roots, coroots and parameters must align");
  for (size_t i = 0; i < m; ++i) {
    if (roots_[i].size() != n_ || coroots_[i].size() != n_)
      fail(errc::invalid_argument, "root coordinate arity mismatch");
    for (const auto& c : roots_[i])
      if (!c.is_real()) fail(errc::invalid_argument, "roots must be real vectors");
    for (const auto& c : coroots_[i])
      if (!c.is_real()) fail(errc::invalid_argument, "coroots must be real vectors");
  }
  // Cartan pairing: <alpha, alpha^vee> = 2, integral, crystallographic signs.
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      GaussRat pz = pair(roots_[i], coroots_[j]);
      if (!pz.is_real() || !pz.re().is_integer())
        fail(errc::invalid_cartan, "Cartan pairing must be integral");
      long v = pz.re().numerator().get_si();
      if (i == j && v != 2) fail(errc::invalid_cartan, "<alpha, alpha^vee> must equal 2");
      if (i != j && v > 0) fail(errc::invalid_cartan, "off-diagonal Cartan entries must be <= 0");
    }
    for (size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      bool zij = cartan(i, j).is_zero(), zji = cartan(j, i).is_zero();
      if (zij != zji) fail(errc::invalid_cartan, "Cartan zero pattern must be symmetric");
      if (!(cartan(i, j) * cartan(j, i) <= Rational(3)))
        fail(errc::invalid_cartan, "Cartan product exceeds 3; root system not finite");
    }
  }
  if (m > 0 && rank(GMat::from_rows(roots_)) != m)
    fail(errc::invalid_cartan, "simple roots must be linearly independent");

  // Simple reflection matrices: s_alpha(x) = x - <x, alpha^vee> alpha on a*.
  std::vector<GMat> refl(m);
  for (size_t i = 0; i < m; ++i) {
    GMat A = GMat::identity(n_);
    for (size_t r = 0; r < n_; ++r)
      for (size_t c = 0; c < n_; ++c) A.at(r, c) -= roots_[i][r] * coroots_[i][c];
    refl[i] = std::move(A);
  }

  // Breadth-first closure of W with matrix deduplication.
  auto& W = weyl_;
  W.elements_.clear();
  W.by_matrix_.clear();
  W.simple_.assign(m, -1);
  WeylElement id;
  id.word = {};
  id.dual_action = GMat::identity(n_);
  id.point_action = GMat::identity(n_);
  id.length = 0;
  W.by_matrix_[id.dual_action] = 0;
  W.elements_.push_back(std::move(id));
  size_t level_begin = 0;
  while (level_begin < W.elements_.size()) {
    size_t level_end = W.elements_.size();
    for (size_t p = level_begin; p < level_end; ++p) {
      for (size_t j = 0; j < m; ++j) {
        GMat child = W.elements_[p].dual_action * refl[j];
        if (W.by_matrix_.count(child)) continue;
        WeylElement e;
        e.word = W.elements_[p].word;
        e.word.push_back(static_cast<int>(j));
        e.point_action = W.elements_[p].point_action * refl[j].transpose();
        e.length = W.elements_[p].length + 1;
        W.by_matrix_[child] = static_cast<int>(W.elements_.size());
        e.dual_action = std::move(child);
        W.elements_.push_back(std::move(e));
        if (W.elements_.size() > kMaxWeylSize)
          fail(errc::invalid_cartan, "Weyl group closure exceeded size bound");
      }
    }
    level_begin = level_end;
  }
  for (size_t j = 0; j < m; ++j) W.simple_[j] = W.by_matrix_.at(refl[j]);
  size_t order = W.elements_.size();
  W.mult_.assign(order * order, -1);
  W.inv_.assign(order, -1);
  for (size_t a = 0; a < order; ++a)
    for (size_t b = 0; b < order; ++b) {
      int p = W.by_matrix_.at(W.elements_[a].dual_action * W.elements_[b].dual_action);
      W.mult_[a * order + b] = p;
      if (p == 0) W.inv_[a] = static_cast<int>(b);
    }
  W.longest_ = static_cast<int>(order - 1);
  for (size_t a = 0; a < order; ++a)
    if (W.elements_[a].length > W.elements_[W.longest_].length) W.longest_ = static_cast<int>(a);

  // All roots: W-orbit of the simple roots. Positivity: nonnegative coordinates
  // over the simple-root basis.
  std::map<GVec, int> seen;
  for (size_t i = 0; i < m; ++i) seen[roots_[i]] = static_cast<int>(i);
  std::vector<GVec> frontier = roots_;
  while (!frontier.empty()) {
    std::vector<GVec> next;
    for (const GVec& r : frontier)
      for (size_t j = 0; j < m; ++j) {
        GVec img = refl[j] * r;
        if (seen.count(img)) continue;
        seen[img] = -1;
        next.push_back(img);
        if (seen.size() > kMaxRoots) fail(errc::invalid_cartan, "root closure exceeded bound");
      }
    frontier = std::move(next);
  }
  // Merge orbit labels: simple roots in one W-orbit share a class.
  std::vector<int> cls(m);
  std::iota(cls.begin(), cls.end(), 0);
  auto find = [&](int x) {
    while (cls[x] != x) x = cls[x] = cls[cls[x]];
    return x;
  };
  for (size_t i = 0; i < m; ++i) {
    // alpha_i's full orbit under W; any simple root inside merges with i.
    for (size_t w = 0; w < order; ++w) {
      GVec img = W.elements_[w].dual_action * roots_[i];
      for (size_t j = 0; j < m; ++j)
        if (img == roots_[j]) cls[find(static_cast<int>(j))] = find(static_cast<int>(i));
    }
  }
  orbit_.assign(m, 0);
  for (size_t i = 0; i < m; ++i) orbit_[i] = find(static_cast<int>(i));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (orbit_[i] == orbit_[j] && k_[i] != k_[j])
        fail(errc::parameter_orbit_mismatch,
             "parameters must agree on W-conjugate simple roots");

  all_roots_.clear();
  positive_roots_.clear();
  root_sign_.clear();
  GMat simple_cols = GMat::from_cols(roots_);
  for (const auto& [r, tag] : seen) {
    all_roots_.push_back(r);
    auto coeffs = solve(simple_cols, r);
    if (!coeffs) fail(errc::internal_error, "root outside simple span");
    bool pos = true;
    for (const auto& c : *coeffs)
      if (c.re().sign() < 0) pos = false;
    root_sign_[r] = pos;
    if (pos) positive_roots_.push_back(r);
  }
}

bool RootDatum::is_positive_root(const GVec& r) const {
  auto it = root_sign_.find(r);
  return it != root_sign_.end() && it->second;
}

bool RootDatum::is_root(const GVec& r) const { return root_sign_.count(r) > 0; }

std::optional<int> RootDatum::simple_root_index(const GVec& r) const {
  for (size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i] == r) return static_cast<int>(i);
  return std::nullopt;
}

std::vector<int> RootDatum::subgroup(const std::vector<int>& P) const {
  std::vector<int> members;
  std::vector<bool> in(weyl_.size(), false);
  std::vector<int> frontier = {weyl_.identity()};
  in[0] = true;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int w : frontier)
      for (int a : P) {
        int u = weyl_.mult(w, weyl_.simple(a));
        if (!in[u]) {
          in[u] = true;
          next.push_back(u);
        }
      }
    frontier = std::move(next);
  }
  for (size_t w = 0; w < weyl_.size(); ++w)
    if (in[w]) members.push_back(static_cast<int>(w));
  return members; // enumeration order = (length, word) order
}

std::vector<int> RootDatum::minimal_coset_reps(const std::vector<int>& P) const {
  std::vector<int> reps;
  for (size_t w = 0; w < weyl_.size(); ++w) {
    bool ok = true;
    for (int a : P)
      if (!is_positive_root(weyl_.act_on_root(static_cast<int>(w), roots_[a]))) {
        ok = false;
        break;
      }
    if (ok) reps.push_back(static_cast<int>(w));
  }
  return reps;
}

std::pair<int, int> RootDatum::coset_decompose(int w, const std::vector<int>& P) const {
  int u = w;
  int right = weyl_.identity();
  for (;;) {
    int desc = -1;
    for (int a : P)
      if (!is_positive_root(weyl_.act_on_root(u, roots_[a]))) {
        desc = a;
        break;
      }
    if (desc < 0) break;
    u = weyl_.mult(u, weyl_.simple(desc));
    right = weyl_.mult(weyl_.simple(desc), right);
  }
  return {u, right};
}

std::vector<int> RootDatum::w_of_p_q(const std::vector<int>& P, const std::vector<int>& Q) const {
  std::vector<int> out;
  std::vector<GVec> q_roots;
  for (int b : Q) q_roots.push_back(roots_[b]);
  std::sort(q_roots.begin(), q_roots.end());
  for (size_t w = 0; w < weyl_.size(); ++w) {
    std::vector<GVec> images;
    for (int a : P) images.push_back(weyl_.act_on_root(static_cast<int>(w), roots_[a]));
    std::sort(images.begin(), images.end());
    if (images == q_roots) out.push_back(static_cast<int>(w));
  }
  return out;
}

std::optional<std::vector<int>> RootDatum::act_on_subset(int w, const std::vector<int>& P) const {
  std::vector<int> out;
  for (int a : P) {
    auto idx = simple_root_index(weyl_.act_on_root(w, roots_[a]));
    if (!idx) return std::nullopt;
    out.push_back(*idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool RootDatum::cone_test(const GVec& real_vec, Cone which, const std::vector<int>& P) const {
  for (const auto& c : real_vec)
    if (!c.is_real()) fail(errc::invalid_argument, "cone test needs a real vector");
  size_t m = roots_.size();
  auto nonneg_pairing = [&](const std::vector<int>& idxs, bool strict, bool against_roots) {
    for (int i : idxs) {
      GaussRat p = against_roots ? pair(roots_[i], real_vec) : pair(real_vec, coroots_[i]);
      if (strict ? !(p.re() > Rational(0)) : p.re() < Rational(0)) return false;
    }
    return true;
  };
  auto coroot_combination = [&](const std::vector<int>& idxs, bool strict) {
    std::vector<GVec> cols;
    for (int i : idxs) cols.push_back(coroots_[i]);
    if (cols.empty()) return ghal::is_zero(real_vec);
    auto coeffs = solve(GMat::from_cols(cols), real_vec);
    if (!coeffs) return false;
    for (const auto& c : *coeffs) {
      if (strict ? !(c.re() < Rational(0)) : c.re() > Rational(0)) return false;
    }
    return true;
  };
  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> complement;
  for (int i = 0; i < static_cast<int>(m); ++i)
    if (std::find(P.begin(), P.end(), i) == P.end()) complement.push_back(i);

  switch (which) {
    case Cone::a_star_plus:
      return nonneg_pairing(all, false, false);
    case Cone::a_minus:
      return coroot_combination(all, false);
    case Cone::a_minus_strict:
      // Interior is empty unless the simple roots span a*.
      if (m != n_) return false;
      return coroot_combination(all, true);
    case Cone::aP_plus:
    case Cone::aP_plusplus: {
      for (int a : P)
        if (!pair(roots_[a], real_vec).is_zero()) return false;
      return nonneg_pairing(complement, which == Cone::aP_plusplus, true);
    }
    case Cone::aP_minus:
      return coroot_combination(P, false);
    case Cone::aP_minus_strict:
      return coroot_combination(P, true);
  }
  return false;
}

LanglandsDecomposition RootDatum::langlands_decompose(const GVec& real_vec) const {
  for (const auto& c : real_vec)
    if (!c.is_real()) fail(errc::invalid_argument, "decomposition needs a real vector");
  size_t m = roots_.size();
  // delta_alpha inside span of the coroots: <beta_i, delta_alpha> = [i == alpha].
  GMat coroot_cols = GMat::from_cols(coroots_);
  GMat root_rows = GMat::from_rows(roots_);
  GMat pairing = root_rows * coroot_cols; // m x m, the Cartan matrix
  std::vector<GVec> delta(m);
  for (size_t a = 0; a < m; ++a) {
    GVec e(m);
    e[a] = GaussRat(1);
    auto sol = solve(pairing, e);
    if (!sol) fail(errc::internal_error, "Cartan matrix must be invertible");
    delta[a] = coroot_cols * *sol;
  }
  // Basis of a^Pi: kernel of the root-pairing.
  std::vector<GVec> perp = kernel(root_rows);

  std::optional<LanglandsDecomposition> found;
  int count = 0;
  for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
    // Unknowns: coefficients over perp, then d over Pi \ F, then c over F.
    std::vector<GVec> cols = perp;
    std::vector<int> d_idx, c_idx;
    for (size_t i = 0; i < m; ++i) {
      if (mask & (size_t(1) << i)) c_idx.push_back(static_cast<int>(i));
      else d_idx.push_back(static_cast<int>(i));
    }
    for (int i : d_idx) cols.push_back(delta[i]);
    for (int i : c_idx) cols.push_back(coroots_[i]);
    auto sol = solve(GMat::from_cols(cols), real_vec);
    if (!sol) continue;
    bool ok = true;
    size_t off = perp.size();
    for (size_t j = 0; j < d_idx.size(); ++j)
      if (!((*sol)[off + j].re() > Rational(0))) ok = false;
    for (size_t j = 0; j < c_idx.size(); ++j)
      if ((*sol)[off + d_idx.size() + j].re() > Rational(0)) ok = false;
    if (!ok) continue;
    ++count;
    if (count == 1) {
      LanglandsDecomposition out;
      out.F = c_idx;
      GVec lp(n_);
      for (size_t j = 0; j < perp.size(); ++j) lp = lp + (*sol)[j] * perp[j];
      out.lambda_Pi = lp;
      for (size_t j = 0; j < d_idx.size(); ++j) out.d[d_idx[j]] = (*sol)[off + j].re();
      for (size_t j = 0; j < c_idx.size(); ++j)
        out.c[c_idx[j]] = (*sol)[off + d_idx.size() + j].re();
      found = std::move(out);
    }
  }
  if (count == 0) fail(errc::no_decomposition, "no qualifying subset; input not decomposable");
  if (count > 1) fail(errc::ambiguous_decomposition, "multiple qualifying subsets");
  return *found;
}

DiagramAut RootDatum::identity_aut() const {
  DiagramAut a;
  a.perm.resize(roots_.size());
  std::iota(a.perm.begin(), a.perm.end(), 0);
  a.dual_action = GMat::identity(n_);
  a.point_action = GMat::identity(n_);
  return a;
}

std::vector<DiagramAut> RootDatum::diagram_automorphisms() const {
  size_t m = roots_.size();
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<DiagramAut> out;

  // Complement basis of span(Pi) in a*, fixed pointwise by every automorphism.
  std::vector<GVec> comp;
  if (m > 0) comp = kernel(GMat::from_rows(roots_));
  GMat basis_cols(0, 0);
  {
    std::vector<GVec> cols = roots_;
    for (auto& b : comp) cols.push_back(b);
    basis_cols = GMat::from_cols(cols);
    if (!invertible(basis_cols))
      fail(errc::internal_error, "simple roots plus orthogonal complement do not span");
  }

  do {
    bool ok = true;
    for (size_t i = 0; i < m && ok; ++i) {
      if (k_[perm[i]] != k_[i]) ok = false;
      for (size_t j = 0; j < m && ok; ++j)
        if (cartan(perm[i], perm[j]) != cartan(i, j)) ok = false;
    }
    if (!ok) continue;
    std::vector<GVec> image_cols;
    for (size_t i = 0; i < m; ++i) image_cols.push_back(roots_[perm[i]]);
    for (auto& b : comp) image_cols.push_back(b);
    GMat A = GMat::from_cols(image_cols) * inverse(basis_cols);
    GMat B = inverse(A).transpose();
    // The point action must permute the coroots the same way; otherwise this
    // permutation does not extend compatibly in the given realization.
    bool coroots_ok = true;
    for (size_t i = 0; i < m && coroots_ok; ++i)
      if (B * coroots_[i] != coroots_[perm[i]]) coroots_ok = false;
    if (!coroots_ok) continue;
    DiagramAut g;
    g.perm.assign(perm.begin(), perm.end());
    g.dual_action = std::move(A);
    g.point_action = std::move(B);
    out.push_back(std::move(g));
  } while (std::next_permutation(perm.begin(), perm.end()));

  // next_permutation needs ascending start; regenerate deterministically.
  std::sort(out.begin(), out.end(), [](const DiagramAut& a, const DiagramAut& b) {
    return a.perm < b.perm;
  });
  return out;
}

DiagramAut RootDatum::compose(const DiagramAut& a, const DiagramAut& b) const {
  DiagramAut g;
  g.perm.resize(a.perm.size());
  for (size_t i = 0; i < a.perm.size(); ++i) g.perm[i] = a.perm[b.perm[i]];
  g.dual_action = a.dual_action * b.dual_action;
  g.point_action = a.point_action * b.point_action;
  return g;
}

DiagramAut RootDatum::invert(const DiagramAut& a) const {
  DiagramAut g;
  g.perm.resize(a.perm.size());
  for (size_t i = 0; i < a.perm.size(); ++i) g.perm[a.perm[i]] = static_cast<int>(i);
  g.dual_action = inverse(a.dual_action);
  g.point_action = inverse(a.point_action);
  return g;
}

int RootDatum::conjugate_weyl(const DiagramAut& g, int w) const {
  GMat conj = g.dual_action * weyl_[w].dual_action * inverse(g.dual_action);
  return weyl_.index_of(conj);
}

std::vector<GVec> RootDatum::t_P_star_perp_basis(const std::vector<int>& P) const {
  if (P.empty()) {
    std::vector<GVec> out;
    for (size_t i = 0; i < n_; ++i) {
      GVec e(n_);
      e[i] = GaussRat(1);
      out.push_back(e);
    }
    return out;
  }
  std::vector<GVec> rows;
  for (int a : P) rows.push_back(coroots_[a]);
  return kernel(GMat::from_rows(rows));
}

Weight RootDatum::project_t_P(const Weight& lam, const std::vector<int>& P) const {
  if (P.empty()) return Weight::zero(n_);
  // lam = sum c_a coroot_a + mu with <alpha, mu> = 0 for alpha in P.
  std::vector<GVec> cols;
  for (int a : P) cols.push_back(coroots_[a]);
  GMat coroot_cols = GMat::from_cols(cols);
  std::vector<GVec> root_rows;
  for (int a : P) root_rows.push_back(roots_[a]);
  GMat pairing = GMat::from_rows(root_rows) * coroot_cols;
  GVec rhs(P.size());
  for (size_t i = 0; i < P.size(); ++i) rhs[i] = pair(roots_[P[i]], lam.v);
  auto sol = solve(pairing, rhs);
  if (!sol) fail(errc::internal_error, "P-Cartan block must be invertible");
  return Weight(coroot_cols * *sol);
}

bool RootDatum::same_structure(const RootDatum& o) const {
  return n_ == o.n_ && roots_ == o.roots_ && coroots_ == o.coroots_;
}

} // namespace ghal
