#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghal/error.hpp"
#include "ghal/induce.hpp"
#include "ghal/modops.hpp"
#include "ghal/module.hpp"
#include "ghal/rng.hpp"

using namespace ghal;

namespace {

Weight wt(std::initializer_list<const char*> coords) {
  GVec v;
  for (const char* c : coords) v.push_back(GaussRat::parse(c));
  return Weight(std::move(v));
}

InductionDatum principal_series(const RootDatumPtr& rd, Weight lambda) {
  return InductionDatum{{}, catalog(rd, {}, CatalogKind::delta0), std::move(lambda)};
}

} // namespace

TEST_CASE("catalog: frozen rank-one modules") {
  auto rd = RootDatum::preset("A1"); // k = 1
  auto st = catalog(rd, {0}, CatalogKind::steinberg);
  CHECK(st.dim == 1);
  CHECK(st.X[0].at(0, 0) == GaussRat(Rational(-1, 2)));
  CHECK(st.s_matrix(0).at(0, 0) == GaussRat(-1));
  // Weight -(1/2) alpha^vee lies in the strict antidual cone.
  CHECK(rd->cone_test(st.cc->real_part().v, Cone::a_minus_strict));

  auto triv = catalog(rd, {0}, CatalogKind::trivial);
  CHECK(triv.X[0].at(0, 0) == GaussRat(Rational(1, 2)));
  CHECK(triv.s_matrix(0).at(0, 0) == GaussRat(1));
  CHECK_FALSE(rd->cone_test(triv.cc->real_part().v, Cone::a_minus));

  auto d0 = catalog(rd, {}, CatalogKind::delta0);
  CHECK(d0.dim == 1);
  CHECK(d0.S.empty());
  CHECK(d0.cc->is_zero());

  // Steinberg requires strictly positive parameters.
  auto rdneg = RootDatum::preset("A1", {Rational(-1)});
  CHECK_THROWS_AS(catalog(rdneg, {0}, CatalogKind::steinberg), error);
}

TEST_CASE("validate flags a broken cross relation") {
  auto rd = RootDatum::preset("A1");
  auto st = catalog(rd, {0}, CatalogKind::steinberg);
  CHECK(validate(st).empty());
  // Flipping the sign of X breaks the cross relation (k is nonzero).
  MatrixModule broken = st;
  broken.X[0] = -broken.X[0];
  auto bad = validate(broken);
  REQUIRE(!bad.empty());
  CHECK(bad[0].find("cross relation") != std::string::npos);
}

TEST_CASE("induce: frozen rank-one principal series matrices") {
  auto rd = RootDatum::preset("A1"); // k = 1
  auto m = induce(principal_series(rd, wt({"1/3"})));
  REQUIRE(m.dim == 2);
  CHECK(validate(m).empty());

  // X = [[l, k], [0, -l]] and S = [[0,1],[1,0]] in the basis (e, s).
  GMat x = m.X[0];
  CHECK(x.at(0, 0) == GaussRat(Rational(1, 3)));
  CHECK(x.at(0, 1) == GaussRat(1));
  CHECK(x.at(1, 0) == GaussRat(0));
  CHECK(x.at(1, 1) == GaussRat(Rational(-1, 3)));
  GMat s = m.s_matrix(0);
  CHECK(s.at(0, 0) == GaussRat(0));
  CHECK(s.at(0, 1) == GaussRat(1));
  CHECK(s.at(1, 0) == GaussRat(1));
  CHECK(s.at(1, 1) == GaussRat(0));

  // module_eval is multiplicative across the generators used.
  auto xs = multiply(hecke_coordinate(rd, 0), hecke_simple(rd, 0));
  CHECK(module_eval(m, xs) == m.X[0] * m.s_matrix(0));
}

TEST_CASE("induced dimensions are coset count times fiber dimension") {
  auto a2 = RootDatum::preset("A2");
  auto xi = InductionDatum{{0}, catalog(a2, {0}, CatalogKind::steinberg), wt({"1", "2"})};
  // lambda must pair to zero with alpha_1 = (2,-1): (1,2) works.
  auto m = induce(xi);
  CHECK(m.dim == 3);
  CHECK(validate(m).empty());

  auto ps = induce(principal_series(a2, wt({"0", "0"})));
  CHECK(ps.dim == 6);
  CHECK(validate(ps).empty());
}

TEST_CASE("predicted weights: frozen instances") {
  auto rd = RootDatum::preset("A1");
  auto pw = predicted_weights(principal_series(rd, wt({"1/3"})));
  REQUIRE(pw.size() == 2);
  CHECK(pw[0].first == wt({"-1/3"}));
  CHECK(pw[1].first == wt({"1/3"}));

  auto pw0 = predicted_weights(principal_series(rd, wt({"0"})));
  REQUIRE(pw0.size() == 1);
  CHECK(pw0[0].second == 2);

  auto a2 = RootDatum::preset("A2");
  auto xi = InductionDatum{{0}, catalog(a2, {0}, CatalogKind::steinberg), wt({"1", "2"})};
  CHECK(predicted_weights(xi).size() == 3);
}

TEST_CASE("weight spaces: frozen dimensions, plain vs generalized") {
  auto rd = RootDatum::preset("A1");
  auto generic = induce(principal_series(rd, wt({"1/3"})));
  CHECK(weight_space(generic, wt({"1/3"}), false).size() == 1);
  CHECK(weight_space(generic, wt({"1/3"}), true).size() == 1);
  CHECK(weight_space(generic, wt({"5"}), true).empty());

  auto zero = induce(principal_series(rd, wt({"0"})));
  CHECK(weight_space(zero, wt({"0"}), false).size() == 1);
  CHECK(weight_space(zero, wt({"0"}), true).size() == 2);

  verify_weight_report(generic, *generic.weights);
  verify_weight_report(zero, *zero.weights);
}

TEST_CASE("generalized weight spaces exhaust induced modules") {
  auto a2 = RootDatum::preset("A2");
  for (Weight lam : {wt({"1/3", "1/5"}), wt({"0", "0"}), wt({"i", "2"})}) {
    auto m = induce(principal_series(a2, lam));
    verify_weight_report(m, *m.weights);
  }
  auto xi = InductionDatum{{1}, catalog(a2, {1}, CatalogKind::steinberg), wt({"2", "1"})};
  auto m = induce(xi);
  verify_weight_report(m, *m.weights);
}

TEST_CASE("central character: invariant polynomials act by the right scalar") {
  auto rd = RootDatum::preset("A1");
  auto m = induce(principal_series(rd, wt({"1/3"})));
  CHECK(central_character_check(m, wt({"1/3"})));
  CHECK(central_character_check(m, wt({"-1/3"}))); // same W-orbit
  CHECK_FALSE(central_character_check(m, wt({"4/3"})));

  auto st = catalog(rd, {0}, CatalogKind::steinberg);
  CHECK(central_character_check(st, *st.cc));
}

TEST_CASE("temperedness: frozen verdicts") {
  auto rd = RootDatum::preset("A1");
  auto st = catalog(rd, {0}, CatalogKind::steinberg);
  CHECK(temperedness(st, *st.weights) == Temperedness::discrete_series);

  auto triv = catalog(rd, {0}, CatalogKind::trivial);
  CHECK(temperedness(triv, *triv.weights) == Temperedness::neither);

  auto ps_i = induce(principal_series(rd, wt({"i"})));
  CHECK(temperedness(ps_i, *ps_i.weights) == Temperedness::tempered);

  auto ps_real = induce(principal_series(rd, wt({"1/3"})));
  CHECK(temperedness(ps_real, *ps_real.weights) == Temperedness::neither);
}

TEST_CASE("hom spaces: frozen dimensions") {
  auto rd = RootDatum::preset("A1");
  auto ps0 = induce(principal_series(rd, wt({"0"})));
  auto endo = hom_space(ps0, ps0);
  CHECK(endo.size() == 1);

  // Hom always contains the identity.
  bool has_identity_direction = false;
  for (const auto& f : endo)
    if (f == f.at(0, 0) * GMat::identity(2)) has_identity_direction = true;
  CHECK(has_identity_direction);

  auto st = catalog(rd, {0}, CatalogKind::steinberg);
  auto triv = catalog(rd, {0}, CatalogKind::trivial);
  CHECK(hom_space(st, triv).empty());
}

TEST_CASE("closures and quotients in rank one") {
  auto rd = RootDatum::preset("A1");
  auto ps0 = induce(principal_series(rd, wt({"0"})));
  CHECK(submodule_closure(ps0, {GVec(2)}).empty());
  // The weight vector (1,0) generates everything at lambda = 0.
  CHECK(submodule_closure(ps0, {GVec{GaussRat(1), GaussRat(0)}}).size() == 2);

  // At 2l = k the module is reducible: some weight vector has a proper closure.
  auto ps_half = induce(principal_series(rd, wt({"1/2"})));
  std::vector<GVec> proper;
  for (const auto& [mu, mult] : *ps_half.weights)
    for (const GVec& v : weight_space(ps_half, mu, false)) {
      auto cl = submodule_closure(ps_half, {v});
      if (cl.size() < ps_half.dim) proper = cl;
    }
  REQUIRE(proper.size() == 1);

  auto sub = submodule(ps_half, proper);
  CHECK(sub.dim == 1);
  CHECK(validate(sub).empty());
  auto quot = quotient(ps_half, proper);
  CHECK(quot.dim == 1);
  CHECK(validate(quot).empty());
  // Sub is Steinberg-like, quotient is trivial-like.
  CHECK(sub.s_matrix(0).at(0, 0) == GaussRat(-1));
  CHECK(quot.s_matrix(0).at(0, 0) == GaussRat(1));

  // Quotient by a non-invariant subspace is rejected.
  CHECK_THROWS_AS(quotient(ps_half, {GVec{GaussRat(1), GaussRat(0)}}), error);
}

TEST_CASE("irreducibility: frozen verdicts in rank one") {
  auto rd = RootDatum::preset("A1");
  auto generic = induce(principal_series(rd, wt({"1/3"})));
  CHECK(irreducibility(generic, *generic.weights).verdict == IrredVerdict::irreducible);

  auto half = induce(principal_series(rd, wt({"1/2"})));
  auto r = irreducibility(half, *half.weights);
  CHECK(r.verdict == IrredVerdict::reducible);
  CHECK(r.witness.size() == 1);

  auto st = catalog(rd, {0}, CatalogKind::steinberg);
  CHECK(irreducibility(st, *st.weights).verdict == IrredVerdict::irreducible);

  auto zero = induce(principal_series(rd, wt({"0"})));
  CHECK(irreducibility(zero, *zero.weights).verdict == IrredVerdict::irreducible);
}

TEST_CASE("constituent dimensions match across the reducibility locus") {
  auto rd = RootDatum::preset("A1");
  auto cands = [&](const Weight& l) {
    return std::vector<Weight>{l, rd->weyl().act_on_weight(1, l)};
  };
  auto generic = induce(principal_series(rd, wt({"1/3"})));
  CHECK(constituent_dimensions(generic, cands(wt({"1/3"}))) == std::vector<size_t>{2});
  auto half = induce(principal_series(rd, wt({"1/2"})));
  CHECK(constituent_dimensions(half, cands(wt({"1/2"}))) == std::vector<size_t>{1, 1});
}

TEST_CASE("unitary pairing: frozen instances and negative control") {
  auto rd = RootDatum::preset("A1");
  auto ps_i = induce(principal_series(rd, wt({"i"})));
  CHECK(unitary_pairing_check(ps_i));

  // Steinberg of the whole algebra, induced from P = Pi at lambda = 0.
  auto xi = InductionDatum{{0}, catalog(rd, {0}, CatalogKind::steinberg), wt({"0"})};
  auto st_full = induce(xi);
  CHECK(st_full.dim == 1);
  CHECK(unitary_pairing_check(st_full));

  // Re(lambda) != 0 breaks the coordinate adjoint identity.
  auto ps_real = induce(principal_series(rd, wt({"1/3"})));
  CHECK_FALSE(unitary_pairing_check(ps_real));
}

TEST_CASE("cc_norm: frozen values") {
  CHECK(cc_norm(wt({"0", "0"})) == Rational(0));
  auto rd = RootDatum::preset("A1");
  auto st = catalog(rd, {0}, CatalogKind::steinberg);
  CHECK(cc_norm(*st.cc) == Rational(1, 4));
  // Rank-one orbit invariance: the reflection is -1 on coordinates.
  CHECK(cc_norm(rd->weyl().act_on_weight(1, *st.cc)) == Rational(1, 4));
}

TEST_CASE("frobenius reciprocity: maps from a principal series count plain weight vectors") {
  auto rd = RootDatum::preset("A1");
  // Hom(PS(lambda), M) has the dimension of the plain lambda-weight space of M.
  auto ps_third = induce(principal_series(rd, wt({"1/3"})));
  auto ps_same = induce(principal_series(rd, wt({"1/3"})));
  CHECK(hom_space(ps_third, ps_same).size() ==
        weight_space(ps_same, wt({"1/3"}), false).size());

  auto st = catalog(rd, {0}, CatalogKind::steinberg);
  auto xi_st = InductionDatum{{0}, st, wt({"0"})};
  auto st_full = induce(xi_st);
  auto ps_at_st = induce(principal_series(rd, Weight(st.cc->v)));
  CHECK(hom_space(ps_at_st, st_full).size() == 1);
  CHECK(weight_space(st_full, *st.cc, false).size() == 1);

  // Mismatched central characters give zero on both sides.
  auto ps_far = induce(principal_series(rd, wt({"7"})));
  CHECK(hom_space(ps_far, st_full).empty());
  CHECK(weight_space(st_full, wt({"7"}), false).empty());
}

TEST_CASE("standard-module endomorphisms are scalars for a Langlands datum") {
  // P = {alpha_1} in A2, delta = Steinberg, nu strictly dominant in t^P.
  auto a2 = RootDatum::preset("A2");
  auto st = catalog(a2, {0}, CatalogKind::steinberg);
  Weight nu = wt({"1", "2"}); // <alpha_1, nu> = 0, <alpha_2, nu> = 3 > 0
  InductionDatum xi{{0}, st, nu};
  CHECK(xi.is_positive());
  auto m = induce(xi);
  CHECK(hom_space(m, m).size() == 1);
}

TEST_CASE("langlands quotient checker on a reducible rank-one standard module") {
  auto rd = RootDatum::preset("A1");
  Weight nu = wt({"1/2"});
  auto m = induce(principal_series(rd, nu));
  std::vector<Weight> cands = {nu, rd->weyl().act_on_weight(1, nu)};
  auto lq = unique_irreducible_quotient(m, cands);
  REQUIRE(lq.has_value());
  CHECK(lq->radical.size() == 1);
  CHECK(lq->quotient.dim == 1);
  // The quotient carries the dominant weight nu.
  REQUIRE(lq->quotient_weights.size() == 1);
  CHECK(lq->quotient_weights[0].first == nu);
}
