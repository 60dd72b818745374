#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "repstrata/phase_space.hpp"
#include "repstrata/quaternion.hpp"

using namespace repstrata;

namespace {

Poly random_poly(const VarSetPtr& vars, Rng& rng, int max_degree) {
  Poly p(vars);
  const int terms = 3 + static_cast<int>(rng.uniform_int(0, 4));
  for (int t = 0; t < terms; ++t) {
    Poly::Exponents e(vars->size(), 0);
    int budget = max_degree;
    for (int i = 0; i < vars->size() && budget > 0; ++i) {
      const int k = static_cast<int>(rng.uniform_int(0, budget));
      e[i] = k;
      budget -= k;
    }
    p.set_coefficient(
        e, Rational(rng.uniform_int(-9, 9), rng.uniform_int(1, 5)) +
               p.coefficient(e));
  }
  return p;
}

}  // namespace

TEST_CASE("formal derivative") {
  const PhaseSpace space(1, 2);  // variables q1,q2,p1,p2
  const Poly mu = space.q(0, 0) * space.p(0, 1) - space.q(0, 1) * space.p(0, 0);
  CHECK(mu.derivative("q1") == space.p(0, 1));
  CHECK(mu.derivative("q2") == -space.p(0, 0));
}

TEST_CASE("degree of products") {
  const PhaseSpace space(1, 2);
  const Poly qq = space.dot_qq(0, 0), pp = space.dot_pp(0, 0);
  CHECK((qq * pp).degree() == 4);
  CHECK(qq.degree() == 2);
}

TEST_CASE("distributivity on random polynomials") {
  const PhaseSpace space(1, 2);
  Rng rng(11);
  for (int n = 0; n < 30; ++n) {
    const Poly f = random_poly(space.vars(), rng, 3);
    const Poly g = random_poly(space.vars(), rng, 3);
    const Poly h = random_poly(space.vars(), rng, 3);
    CHECK((f + g) * h == f * h + g * h);
  }
}

TEST_CASE("unknown variables are rejected") {
  const PhaseSpace space(1, 2);
  const Poly f = space.q(0, 0);
  CHECK_THROWS_AS(f.derivative("z9"), std::invalid_argument);
  CHECK_THROWS_AS(space.vars()->index("nope"), std::invalid_argument);
}

TEST_CASE("canonical bracket sign convention: {q,p} = -1") {
  const PhaseSpace space(1, 2);
  const Poly br = space.canonical_bracket(space.q(0, 0), space.p(0, 0));
  CHECK(br == space.constant(-1));
}

TEST_CASE("bracket of a polynomial with itself vanishes") {
  const PhaseSpace space(2, 3);
  Rng rng(12);
  for (int n = 0; n < 10; ++n) {
    const Poly f = random_poly(space.vars(), rng, 3);
    CHECK(space.canonical_bracket(f, f).is_zero());
  }
}

TEST_CASE("Jacobi identity on random cubic triples") {
  const PhaseSpace space(1, 3);
  Rng rng(13);
  for (int n = 0; n < 15; ++n) {
    const Poly f = random_poly(space.vars(), rng, 3);
    const Poly g = random_poly(space.vars(), rng, 3);
    const Poly h = random_poly(space.vars(), rng, 3);
    const Poly jac =
        space.canonical_bracket(f, space.canonical_bracket(g, h)) +
        space.canonical_bracket(g, space.canonical_bracket(h, f)) +
        space.canonical_bracket(h, space.canonical_bracket(f, g));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("exact evaluation") {
  const PhaseSpace space(1, 2);
  const Poly f = space.dot_qq(0, 0) - space.dot_pp(0, 0);
  const std::vector<Rational> pt{Rational(3), Rational(4), Rational(1),
                                 Rational(2)};
  CHECK(f.eval(std::span<const Rational>(pt)) == Rational(20));
  const std::vector<double> ptd{3, 4, 1, 2};
  CHECK(f.eval(std::span<const double>(ptd)) == doctest::Approx(20.0));
}

TEST_CASE("canonical text form is stable") {
  const PhaseSpace space(1, 2);
  const Poly f = space.q(0, 0) * space.q(0, 0) * Rational(-4) +
                 space.p(0, 1) * Rational(1, 2);
  // ascending lexicographic exponent order: the p2 term precedes q1^2
  CHECK(f.to_string() == "1/2*p2 - 4*q1^2");
  CHECK(space.zero().to_string() == "0");
}
