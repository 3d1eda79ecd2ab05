#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghal/apply.hpp"
#include "ghal/error.hpp"
#include "ghal/gaussrat.hpp"
#include "ghal/matrix.hpp"
#include "ghal/rational.hpp"
#include "ghal/rng.hpp"

using namespace ghal;

namespace {

GMat diag2(const GaussRat& a, const GaussRat& b) {
  GMat m(2, 2);
  m.at(0, 0) = a;
  m.at(1, 1) = b;
  return m;
}

GMat random_matrix(Sampler& s, size_t rows, size_t cols) {
  GMat m(rows, cols);
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) m.at(r, c) = s.gauss(3, 2);
  return m;
}

} // namespace

TEST_CASE("rational arithmetic and canonical form") {
  Rational a(4, 6);
  CHECK(a == Rational(2, 3));
  CHECK(a.str() == "2/3");
  CHECK(Rational(-4, -6) == Rational(2, 3));
  CHECK(Rational(3, -9).str() == "-1/3");
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational(1, 3) + Rational(2, 5) == Rational(11, 15));
  CHECK_THROWS_AS(Rational::parse("1/0"), error);
  CHECK_THROWS_AS(Rational::parse("x"), error);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), error);
}

TEST_CASE("gaussian rational field operations") {
  GaussRat i = GaussRat::i();
  CHECK(i * i == GaussRat(-1));
  GaussRat z(Rational(1, 2), Rational(2));
  CHECK(z.str() == "1/2+2i");
  CHECK(GaussRat::parse("1/2+2i") == z);
  CHECK(GaussRat::parse("-i") == -i);
  CHECK(GaussRat::parse("2i") == GaussRat(Rational(0), Rational(2)));
  CHECK(GaussRat::parse("1-3/4i") == GaussRat(Rational(1), Rational(-3, 4)));
  CHECK(z * z.inverse() == GaussRat(1));
  CHECK(z.conj() == GaussRat(Rational(1, 2), Rational(-2)));

  // Field axiom spot checks on random samples.
  Sampler s(7);
  for (int trial = 0; trial < 30; ++trial) {
    GaussRat a = s.gauss(), b = s.gauss(), c = s.gauss();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == GaussRat(1));
  }
}

TEST_CASE("kernel: frozen examples") {
  CHECK(kernel(GMat::zero(2, 2)).size() == 2);
  CHECK(kernel(GMat::identity(2)).empty());

  // [[1,1],[1,1]]: hand row-reduction gives one relation, kernel (1,-1) up to scale.
  GMat m(2, 2);
  m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = m.at(1, 1) = GaussRat(1);
  auto basis = kernel(m);
  REQUIRE(basis.size() == 1);
  GaussRat ratio = basis[0][0] / basis[0][1];
  CHECK(ratio == GaussRat(-1));
}

TEST_CASE("rank-nullity over random matrices") {
  Sampler s(11);
  for (int trial = 0; trial < 25; ++trial) {
    size_t rows = 1 + s.below(4), cols = 1 + s.below(4);
    GMat m = random_matrix(s, rows, cols);
    auto basis = kernel(m);
    CHECK(rank(m) + basis.size() == cols);
    for (const auto& v : basis) CHECK(is_zero(m * v));
  }
}

TEST_CASE("solve: frozen examples and exactness") {
  GVec b = {GaussRat(3), GaussRat(Rational(1, 2))};
  auto x = solve(GMat::identity(2), b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  GMat two(1, 1);
  two.at(0, 0) = GaussRat(2);
  auto y = solve(two, GVec{GaussRat(1)});
  REQUIRE(y.has_value());
  CHECK((*y)[0] == GaussRat(Rational(1, 2)));

  // Inconsistent system.
  GMat a(2, 1);
  a.at(0, 0) = GaussRat(1);
  a.at(1, 0) = GaussRat(1);
  CHECK_FALSE(solve(a, GVec{GaussRat(0), GaussRat(1)}).has_value());

  CHECK_THROWS_AS(solve(a, GVec{GaussRat(0)}), error);

  Sampler s(13);
  for (int trial = 0; trial < 25; ++trial) {
    size_t rows = 1 + s.below(4), cols = 1 + s.below(4);
    GMat m = random_matrix(s, rows, cols);
    GVec v(cols);
    for (auto& c : v) c = s.gauss(2, 2);
    GVec rhs = m * v;
    auto sol = solve(m, rhs);
    REQUIRE(sol.has_value());
    CHECK(m * *sol == rhs);
  }
}

TEST_CASE("apply_poly_to_commuting: frozen examples") {
  GMat x1 = diag2(GaussRat(Rational(2)), GaussRat(Rational(5)));
  Poly one = Poly::constant(1, GaussRat(1));
  CHECK(apply_poly_to_commuting(one, {x1}) == GMat::identity(2));

  Poly v = Poly::variable(1, 0);
  CHECK(apply_poly_to_commuting(v, {x1}) == x1);

  // x^2 on a square-zero matrix is the zero matrix.
  GMat nil(2, 2);
  nil.at(0, 1) = GaussRat(1);
  CHECK(apply_poly_to_commuting(v * v, {nil}).is_zero());

  // Non-commuting tuple rejected.
  GMat s01(2, 2);
  s01.at(0, 1) = GaussRat(1);
  s01.at(1, 0) = GaussRat(1);
  CHECK_THROWS_AS(apply_poly_to_commuting(Poly::variable(2, 0), {nil, s01}), error);
}

TEST_CASE("apply_poly is multiplicative on commuting samples") {
  Sampler s(17);
  for (int trial = 0; trial < 15; ++trial) {
    // Commuting pair: polynomials in one random matrix.
    GMat a = random_matrix(s, 3, 3);
    GMat b = a * a + GMat::scalar(3, s.gauss(2, 2));
    std::vector<GMat> tuple = {a, b};
    Poly p(2), q(2);
    for (int t = 0; t < 3; ++t) {
      Exponent e = {static_cast<unsigned>(s.below(3)), static_cast<unsigned>(s.below(2))};
      p.set_coeff(e, s.gauss(2, 2));
      Exponent f = {static_cast<unsigned>(s.below(2)), static_cast<unsigned>(s.below(3))};
      q.set_coeff(f, s.gauss(2, 2));
    }
    CHECK(apply_poly_to_commuting(p * q, tuple) ==
          apply_poly_to_commuting(p, tuple) * apply_poly_to_commuting(q, tuple));
  }
}

TEST_CASE("apply_ratfn_to_commuting: frozen examples") {
  // 1/(x+1) on diag(0,1) is diag(1, 1/2): scalar evaluation per eigenvalue.
  GMat x = diag2(GaussRat(0), GaussRat(1));
  RatFn f(Poly::constant(1, GaussRat(1)),
          {Poly::linear(GVec{GaussRat(1)}, GaussRat(1))});
  auto r = apply_ratfn_to_commuting(f, {x});
  REQUIRE(r.matrix.has_value());
  CHECK(*r.matrix == diag2(GaussRat(1), GaussRat(Rational(1, 2))));

  RatFn idf(Poly::variable(1, 0));
  auto r2 = apply_ratfn_to_commuting(idf, {x});
  REQUIRE(r2.matrix.has_value());
  CHECK(*r2.matrix == x);

  // 1/x on a nilpotent matrix: singular denominator.
  GMat nil(2, 2);
  nil.at(0, 1) = GaussRat(1);
  RatFn g(Poly::constant(1, GaussRat(1)), {Poly::variable(1, 0)});
  auto r3 = apply_ratfn_to_commuting(g, {nil});
  CHECK_FALSE(r3.matrix.has_value());
  REQUIRE(r3.singular_factor.has_value());
  CHECK(*r3.singular_factor == Poly::variable(1, 0));
}

TEST_CASE("inverse and determinant") {
  Sampler s(23);
  for (int trial = 0; trial < 20; ++trial) {
    GMat m = random_matrix(s, 3, 3);
    if (det(m).is_zero()) continue;
    CHECK(m * inverse(m) == GMat::identity(3));
  }
  CHECK(det(GMat::identity(4)) == GaussRat(1));
}
