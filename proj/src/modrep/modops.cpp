#include "ghal/modops.hpp"

#include <algorithm>
#include <numeric>

#include "ghal/error.hpp"
#include "ghal/rng.hpp"

namespace ghal {

std::vector<GVec> weight_space(const MatrixModule& m, const Weight& mu, bool generalized) {
  if (mu.dim() != m.rd->ambient_dim()) fail(errc::dimension_mismatch, "weight arity");
  std::vector<GVec> rows;
  for (size_t i = 0; i < m.X.size(); ++i) {
    GMat shifted = m.X[i] - GMat::scalar(m.dim, mu.v[i]);
    if (generalized) {
      GMat power = GMat::identity(m.dim);
      for (size_t t = 0; t < m.dim; ++t) power = power * shifted;
      shifted = std::move(power);
    }
    for (size_t r = 0; r < m.dim; ++r) rows.push_back(shifted.row(r));
  }
  if (rows.empty()) return {};
  return kernel(GMat::from_rows(rows));
}

void verify_weight_report(const MatrixModule& m,
                          const std::vector<std::pair<Weight, int>>& report) {
  size_t total = 0;
  for (const auto& [mu, mult] : report) {
    size_t got = weight_space(m, mu, true).size();
    if (got != static_cast<size_t>(mult))
      fail(errc::unverified_weights, "generalized weight space has unexpected dimension");
    total += got;
  }
  if (total != m.dim)
    fail(errc::unverified_weights, "weight spaces do not exhaust the module");
}

bool central_character_check(const MatrixModule& m, const Weight& mu, unsigned degree_cap) {
  const RootDatum& rd = *m.rd;
  size_t n = rd.ambient_dim();
  std::vector<int> group;
  if (m.tag.kind == AlgebraKind::parabolic || m.tag.kind == AlgebraKind::extended_parabolic)
    group = rd.subgroup(m.tag.P);
  else
    group.resize(rd.weyl().size()), std::iota(group.begin(), group.end(), 0);

  // Enumerate exponents of total degree 1..cap.
  std::vector<Exponent> exps;
  Exponent cur(n, 0);
  auto rec = [&](auto&& self, size_t pos, unsigned left) -> void {
    if (pos == n) {
      unsigned total = 0;
      for (unsigned e : cur) total += e;
      if (total >= 1) exps.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, degree_cap);

  for (const Exponent& e : exps) {
    Poly mono(n);
    mono.set_coeff(e, GaussRat(1));
    Poly avg(n);
    for (int w : group) avg += mono.substitute_linear(rd.weyl()[w].dual_action);
    // p(X) on the module vs the scalar p(mu).
    GMat px(m.dim, m.dim);
    for (const auto& [ee, c] : avg.terms()) {
      GMat term = GMat::scalar(m.dim, c);
      for (size_t i = 0; i < n; ++i)
        for (unsigned t = 0; t < ee[i]; ++t) term = term * m.X[i];
      px += term;
    }
    if (px != GMat::scalar(m.dim, avg.evaluate(mu.v))) return false;
  }
  return true;
}

Temperedness temperedness(const MatrixModule& m,
                          const std::vector<std::pair<Weight, int>>& report) {
  verify_weight_report(m, report);
  const RootDatum& rd = *m.rd;
  bool full_tag =
      m.tag.kind == AlgebraKind::full || m.tag.kind == AlgebraKind::crossed;
  bool in_cone = true, in_interior = true;
  for (const auto& [mu, mult] : report) {
    GVec re = mu.real_part().v;
    if (full_tag) {
      in_cone = in_cone && rd.cone_test(re, Cone::a_minus);
      in_interior = in_interior && rd.cone_test(re, Cone::a_minus_strict);
    } else {
      in_cone = in_cone && rd.cone_test(re, Cone::aP_minus, m.tag.P);
      in_interior = in_interior && rd.cone_test(re, Cone::aP_minus_strict, m.tag.P);
    }
  }
  if (!in_cone) return Temperedness::neither;
  if (in_interior) {
    auto irr = irreducibility(m, report);
    if (irr.verdict == IrredVerdict::irreducible) return Temperedness::discrete_series;
  }
  return Temperedness::tempered;
}

std::vector<GMat> generator_matrices(const MatrixModule& m) {
  std::vector<GMat> gens = m.X;
  for (int a : m.tag.P) gens.push_back(m.s_matrix(a));
  for (const GMat& g : m.G) gens.push_back(g);
  return gens;
}

std::vector<GMat> hom_space(const MatrixModule& m, const MatrixModule& n) {
  if (m.tag.kind != n.tag.kind || m.tag.P != n.tag.P)
    fail(errc::invalid_argument, "hom space needs modules over the same algebra");
  if (m.tag.kind == AlgebraKind::crossed) {
    if (m.tag.Gamma.size() != n.tag.Gamma.size())
      fail(errc::invalid_argument, "crossed modules over different groups");
    for (size_t i = 0; i < m.tag.Gamma.size(); ++i)
      if (!(m.tag.Gamma[i] == n.tag.Gamma[i]))
        fail(errc::invalid_argument, "crossed modules over different groups");
  }
  auto mg = generator_matrices(m);
  auto ng = generator_matrices(n);
  size_t dm = m.dim, dn = n.dim;
  // Unknowns F[r][c] (dn x dm), flattened row-major; constraints N F - F M = 0.
  GMat sys(mg.size() * dn * dm, dn * dm);
  size_t row = 0;
  for (size_t g = 0; g < mg.size(); ++g) {
    for (size_t r = 0; r < dn; ++r)
      for (size_t c = 0; c < dm; ++c) {
        for (size_t s = 0; s < dn; ++s)
          if (!ng[g].at(r, s).is_zero()) sys.at(row, s * dm + c) += ng[g].at(r, s);
        for (size_t s = 0; s < dm; ++s)
          if (!mg[g].at(s, c).is_zero()) sys.at(row, r * dm + s) -= mg[g].at(s, c);
        ++row;
      }
  }
  std::vector<GMat> out;
  for (const GVec& v : kernel(sys)) {
    GMat f(dn, dm);
    for (size_t r = 0; r < dn; ++r)
      for (size_t c = 0; c < dm; ++c) f.at(r, c) = v[r * dm + c];
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<GVec> submodule_closure(const MatrixModule& m, const std::vector<GVec>& vectors) {
  auto gens = generator_matrices(m);
  std::vector<GVec> basis = row_space_basis(vectors);
  for (;;) {
    std::vector<GVec> expanded = basis;
    for (const GVec& b : basis)
      for (const GMat& g : gens) expanded.push_back(g * b);
    std::vector<GVec> next = row_space_basis(expanded);
    if (next.size() == basis.size()) return next;
    basis = std::move(next);
  }
}

namespace {

bool subspace_invariant(const MatrixModule& m, const std::vector<GVec>& basis) {
  auto gens = generator_matrices(m);
  for (const GVec& b : basis)
    for (const GMat& g : gens)
      if (!in_span(basis, g * b)) return false;
  return true;
}

// Coordinates of v in the subspace row basis (must lie in the span).
GVec coords_in(const std::vector<GVec>& basis, const GVec& v) {
  auto sol = solve(GMat::from_cols(basis), v);
  if (!sol) fail(errc::internal_error, "vector not in span");
  return *sol;
}

} // namespace

MatrixModule submodule(const MatrixModule& m, const std::vector<GVec>& basis_in) {
  std::vector<GVec> basis = row_space_basis(basis_in);
  if (!subspace_invariant(m, basis)) fail(errc::not_invariant, "subspace is not invariant");
  MatrixModule out;
  out.rd = m.rd;
  out.tag = m.tag;
  out.dim = basis.size();
  auto restrict_matrix = [&](const GMat& g) {
    GMat r(basis.size(), basis.size());
    for (size_t c = 0; c < basis.size(); ++c) {
      GVec img = coords_in(basis, g * basis[c]);
      for (size_t rr = 0; rr < basis.size(); ++rr) r.at(rr, c) = img[rr];
    }
    return r;
  };
  for (const GMat& x : m.X) out.X.push_back(restrict_matrix(x));
  for (int a : m.tag.P) out.S.emplace(a, restrict_matrix(m.s_matrix(a)));
  for (const GMat& g : m.G) out.G.push_back(restrict_matrix(g));
  return out;
}

MatrixModule quotient(const MatrixModule& m, const std::vector<GVec>& subspace) {
  std::vector<GVec> basis = row_space_basis(subspace);
  if (!subspace_invariant(m, basis)) fail(errc::not_invariant, "subspace is not invariant");
  // Pivot columns of the reduced basis; the complement is the remaining
  // standard basis vectors.
  Echelon ech = basis.empty() ? Echelon{GMat(0, m.dim), {}}
                              : reduced_row_echelon(GMat::from_rows(basis));
  std::vector<bool> is_pivot(m.dim, false);
  for (size_t c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<size_t> comp;
  for (size_t c = 0; c < m.dim; ++c)
    if (!is_pivot[c]) comp.push_back(c);

  auto reduce_vec = [&](GVec v) {
    for (size_t r = 0; r < ech.pivot_cols.size(); ++r) {
      GaussRat c = v[ech.pivot_cols[r]];
      if (c.is_zero()) continue;
      GVec row = ech.rref.row(r);
      for (size_t i = 0; i < v.size(); ++i) v[i] -= c * row[i];
    }
    return v;
  };

  MatrixModule out;
  out.rd = m.rd;
  out.tag = m.tag;
  out.dim = comp.size();
  auto project_matrix = [&](const GMat& g) {
    GMat q(comp.size(), comp.size());
    for (size_t cc = 0; cc < comp.size(); ++cc) {
      GVec e(m.dim);
      e[comp[cc]] = GaussRat(1);
      GVec img = reduce_vec(g * e);
      for (size_t rr = 0; rr < comp.size(); ++rr) q.at(rr, cc) = img[comp[rr]];
    }
    return q;
  };
  for (const GMat& x : m.X) out.X.push_back(project_matrix(x));
  for (int a : m.tag.P) out.S.emplace(a, project_matrix(m.s_matrix(a)));
  for (const GMat& g : m.G) out.G.push_back(project_matrix(g));
  return out;
}

IrreducibilityResult irreducibility(const MatrixModule& m,
                                    const std::vector<std::pair<Weight, int>>& report) {
  verify_weight_report(m, report);
  if (m.dim == 0) return {IrredVerdict::unknown, {}};
  bool all_plain_lines = true;
  std::vector<GVec> probes;
  for (const auto& [mu, mult] : report) {
    auto plain = weight_space(m, mu, false);
    if (plain.size() > 1) all_plain_lines = false;
    for (auto& v : plain) probes.push_back(std::move(v));
  }
  if (all_plain_lines) {
    // Exact branch: any nonzero submodule contains a plain weight vector, and
    // those are unique up to scale.
    for (const GVec& v : probes) {
      auto closure = submodule_closure(m, {v});
      if (closure.size() < m.dim) return {IrredVerdict::reducible, closure};
    }
    return {IrredVerdict::irreducible, {}};
  }
  // Probing branch: weight basis vectors plus deterministic pseudo-random
  // combinations; any proper closure decides, otherwise unknown.
  Sampler s(424243);
  std::vector<GVec> extra = probes;
  for (int t = 0; t < 8; ++t) {
    GVec v(m.dim);
    for (auto& c : v) c = s.gauss(3, 2);
    extra.push_back(std::move(v));
  }
  for (const GVec& v : extra) {
    if (is_zero(v)) continue;
    auto closure = submodule_closure(m, {v});
    if (!closure.empty() && closure.size() < m.dim)
      return {IrredVerdict::reducible, closure};
  }
  return {IrredVerdict::unknown, {}};
}

namespace {

std::vector<std::pair<Weight, int>> report_from_candidates(
    const MatrixModule& m, const std::vector<Weight>& candidates_in) {
  std::vector<Weight> candidates = candidates_in;
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<std::pair<Weight, int>> report;
  size_t total = 0;
  for (const Weight& mu : candidates) {
    size_t d = weight_space(m, mu, true).size();
    if (d) {
      report.emplace_back(mu, static_cast<int>(d));
      total += d;
    }
  }
  if (total != m.dim)
    fail(errc::unverified_weights, "candidate weights do not exhaust the module");
  return report;
}

} // namespace

std::vector<size_t> constituent_dimensions(const MatrixModule& m,
                                           const std::vector<Weight>& candidate_weights) {
  if (m.dim == 0) return {};
  auto report = report_from_candidates(m, candidate_weights);
  auto irr = irreducibility(m, report);
  if (irr.verdict == IrredVerdict::irreducible) return {m.dim};
  if (irr.verdict == IrredVerdict::unknown)
    fail(errc::indeterminate, "constituents need the exact irreducibility branch");
  auto sub = submodule(m, irr.witness);
  auto quot = quotient(m, irr.witness);
  auto out = constituent_dimensions(sub, candidate_weights);
  auto rest = constituent_dimensions(quot, candidate_weights);
  out.insert(out.end(), rest.begin(), rest.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool unitary_pairing_check(const MatrixModule& m) {
  if (!m.gram) fail(errc::invalid_argument, "module carries no inner product");
  const GMat& B = *m.gram;
  const RootDatumPtr& rd = m.rd;
  // Generators: coordinates and tag reflections, as algebra elements.
  std::vector<HeckeElt> gens;
  for (size_t i = 0; i < rd->ambient_dim(); ++i) gens.push_back(hecke_coordinate(rd, i));
  for (int a : m.tag.P) gens.push_back(hecke_simple(rd, a));
  for (const HeckeElt& h : gens) {
    GMat lhs = module_eval(m, h).conj_transpose() * B;
    GMat rhs = B * module_eval(m, star(h));
    if (lhs != rhs) return false;
  }
  return true;
}

Rational cc_norm(const Weight& w) {
  Rational out(0);
  Weight re = w.real_part();
  for (const auto& c : re.v) out += c.re() * c.re();
  return out;
}

std::optional<LanglandsQuotient> unique_irreducible_quotient(
    const MatrixModule& m, const std::vector<Weight>& candidate_weights) {
  auto report = report_from_candidates(m, candidate_weights);
  std::vector<GVec> accumulated;
  for (const auto& [mu, mult] : report) {
    for (const GVec& v : weight_space(m, mu, false)) {
      auto closure = submodule_closure(m, {v});
      if (closure.size() < m.dim)
        accumulated.insert(accumulated.end(), closure.begin(), closure.end());
    }
  }
  std::vector<GVec> radical = row_space_basis(accumulated);
  if (radical.size() >= m.dim) return std::nullopt;
  MatrixModule quot = quotient(m, radical);
  auto quot_report = report_from_candidates(quot, candidate_weights);
  auto irr = irreducibility(quot, quot_report);
  if (irr.verdict != IrredVerdict::irreducible) return std::nullopt;
  return LanglandsQuotient{std::move(radical), std::move(quot), std::move(quot_report)};
}

} // namespace ghal
