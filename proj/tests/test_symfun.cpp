#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghal/error.hpp"
#include "ghal/poly.hpp"
#include "ghal/ratfn.hpp"
#include "ghal/rng.hpp"
#include "ghal/rootdatum.hpp"

using namespace ghal;

namespace {

Poly random_poly(Sampler& s, size_t nvars, unsigned maxdeg, int nterms) {
  Poly p(nvars);
  for (int t = 0; t < nterms; ++t) {
    Exponent e(nvars);
    unsigned total = 0;
    for (size_t i = 0; i < nvars; ++i) {
      unsigned x = static_cast<unsigned>(s.below(maxdeg + 1));
      if (total + x > maxdeg) x = 0;
      e[i] = x;
      total += x;
    }
    p.set_coeff(e, s.gauss(3, 2));
  }
  return p;
}

} // namespace

TEST_CASE("polynomial ring basics") {
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  Poly p = x * x + GaussRat(2) * (x * y);
  CHECK(p.degree() == 2);
  CHECK((p - p).is_zero());
  CHECK(p * Poly::constant(2, GaussRat(1)) == p);

  Sampler s(3);
  for (int t = 0; t < 20; ++t) {
    Poly a = random_poly(s, 2, 3, 3), b = random_poly(s, 2, 3, 3), c = random_poly(s, 2, 2, 2);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("exact division") {
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  Poly d = x + GaussRat(2) * y;
  Poly q = x * y + Poly::constant(2, GaussRat(Rational(1, 3)));
  auto back = (d * q).divide_exact(d);
  REQUIRE(back.has_value());
  CHECK(*back == q);
  // x^2 + 1 is not divisible by x + 2y.
  CHECK_FALSE((x * x + Poly::constant(2, GaussRat(1))).divide_exact(d).has_value());
}

TEST_CASE("weyl action on polynomials: sign flip in rank one") {
  auto rd = RootDatum::preset("A1");
  const auto& W = rd->weyl();
  int s = W.simple(0);
  Poly x = Poly::variable(1, 0);
  // s(x) = x - <x, alpha^vee> alpha = -x in the weight realization.
  CHECK(x.substitute_linear(W[s].dual_action) == -x);
  CHECK(x.substitute_linear(W[W.identity()].dual_action) == x);
}

TEST_CASE("weyl action is a ring homomorphism and a group action") {
  auto rd = RootDatum::preset("A2");
  const auto& W = rd->weyl();
  Sampler s(5);
  for (int t = 0; t < 12; ++t) {
    int u = static_cast<int>(s.below(W.size()));
    int v = static_cast<int>(s.below(W.size()));
    Poly p = random_poly(s, 2, 3, 3), q = random_poly(s, 2, 3, 3);
    const GMat& mu = W[u].dual_action;
    const GMat& mv = W[v].dual_action;
    CHECK((p * q).substitute_linear(mu) ==
          p.substitute_linear(mu) * q.substitute_linear(mu));
    // (uv) . p = u . (v . p)
    CHECK(p.substitute_linear(W[W.mult(u, v)].dual_action) ==
          p.substitute_linear(mv).substitute_linear(mu));
  }
}

TEST_CASE("divided difference: frozen rank-one values") {
  auto rd = RootDatum::preset("A1");
  const auto& W = rd->weyl();
  GMat srefl = W[W.simple(0)].dual_action;
  Poly x = Poly::variable(1, 0);
  Poly alpha = Poly::linear(rd->simple_root(0)); // 2x

  auto divided_difference = [&](const Poly& p) {
    Poly numer = p - p.substitute_linear(srefl);
    auto q = numer.divide_exact(alpha);
    REQUIRE(q.has_value());
    return *q;
  };

  CHECK(divided_difference(Poly::constant(1, GaussRat(5))).is_zero());
  CHECK(divided_difference(x) == Poly::constant(1, GaussRat(1)));
  CHECK(divided_difference(x * x).is_zero());

  // Defining identity alpha * D(p) = p - s(p) on random polynomials.
  Sampler s(9);
  for (int t = 0; t < 20; ++t) {
    Poly p = random_poly(s, 1, 4, 3);
    CHECK(alpha * divided_difference(p) == p - p.substitute_linear(srefl));
  }
}

TEST_CASE("rational function arithmetic satisfies field axioms on samples") {
  Sampler s(15);
  for (int t = 0; t < 12; ++t) {
    Poly na = random_poly(s, 2, 2, 2), nb = random_poly(s, 2, 2, 2);
    Poly da = Poly::linear(GVec{s.gauss(2, 1), s.gauss(2, 1)}, GaussRat(Rational(1)));
    Poly db = Poly::linear(GVec{s.gauss(2, 1), s.gauss(2, 1)}, GaussRat(Rational(2)));
    if (da.is_zero() || db.is_zero()) continue;
    RatFn a(na, {da}), b(nb, {db});
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a * (a.is_zero() ? RatFn::constant(2, GaussRat(1)) : a.inverse() * a) == a);
  }
}

TEST_CASE("ratfn cancellation through factored denominators") {
  Poly x = Poly::variable(1, 0);
  Poly xp1 = x + Poly::constant(1, GaussRat(1));
  // (x+1)*x / (x+1) reduces to x.
  RatFn f(xp1 * x, {xp1});
  CHECK(f.is_polynomial());
  CHECK(f.num() == x);
}

TEST_CASE("ratfn_eval: frozen examples in rank one") {
  auto rd = RootDatum::preset("A1"); // k = 1
  Poly alpha = Poly::linear(rd->simple_root(0));
  Poly alpha_plus_k = alpha + Poly::constant(1, GaussRat(rd->k(0)));
  RatFn f(alpha, {alpha_plus_k});

  // lambda = 0: evaluates to 0/1 = 0.
  auto r0 = ratfn_eval(f, GVec{GaussRat(0)});
  CHECK(r0.kind == EvalKind::value);
  CHECK(r0.value == GaussRat(0));

  // <alpha, lambda> = -1 means alpha + k vanishes: pole.
  auto rp = ratfn_eval(f, GVec{GaussRat(Rational(-1, 2))});
  CHECK(rp.kind == EvalKind::pole);

  auto rc = ratfn_eval(RatFn::constant(1, GaussRat(Rational(5, 7))), GVec{GaussRat(3)});
  CHECK(rc.kind == EvalKind::value);
  CHECK(rc.value == GaussRat(Rational(5, 7)));

  // Removable singularity: alpha/(alpha) at 0 resolves by reduction.
  RatFn g(alpha, {alpha});
  auto rr = ratfn_eval(g, GVec{GaussRat(0)});
  CHECK(rr.kind == EvalKind::value);
  CHECK(rr.value == GaussRat(1));
}
