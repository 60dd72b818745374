#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "repstrata/invariants.hpp"
#include "repstrata/verify.hpp"

using namespace repstrata;

TEST_CASE("planar invariants and momentum") {
  const InvariantSet inv = planar_invariants(1);
  REQUIRE(inv.generators.size() == 3);
  const Poly& x1 = inv.generators[0];
  const Poly& x2 = inv.generators[1];
  const Poly& rho = inv.generators[2];
  const Poly& mu = inv.momentum[0];

  for (const Poly& g : inv.generators)
    CHECK(inv.space.canonical_bracket(g, mu).is_zero());

  // Lagrange identity: rho^2 - x1^2 - x2^2 = 4 mu^2 exactly.
  CHECK(rho * rho - x1 * x1 - x2 * x2 == mu * mu * Rational(4));
}

TEST_CASE("planar bracket table under the pinned convention") {
  const InvariantSet inv = planar_invariants(1);
  const auto& s = inv.space;
  const Poly& x1 = inv.generators[0];
  const Poly& x2 = inv.generators[1];
  const Poly& rho = inv.generators[2];
  CHECK(s.canonical_bracket(x1, x2) == rho * Rational(-4));
  CHECK(s.canonical_bracket(x1, rho) == x2 * Rational(-4));
  CHECK(s.canonical_bracket(x2, rho) == x1 * Rational(4));
}

TEST_CASE("reference table comparison measures -1/2 and detects tampering") {
  auto gv = std::make_shared<const VarSet>(
      std::vector<std::string>{"x1", "x2", "rho"});
  const Poly x1 = Poly::variable(gv, "x1");
  const Poly x2 = Poly::variable(gv, "x2");
  const Poly rho = Poly::variable(gv, "rho");
  const std::vector<Poly> ours{rho * Rational(-4), x2 * Rational(-4),
                               x1 * Rational(4)};
  const auto c = proportionality_constant(ours, cone_reference_table(gv));
  REQUIRE(c.has_value());
  CHECK(*c == Rational(-1, 2));

  // A tampered constant in one entry breaks proportionality.
  std::vector<Poly> tampered = cone_reference_table(gv);
  tampered[2] = x1 * Rational(2);
  CHECK(!proportionality_constant(ours, tampered).has_value());
}

TEST_CASE("spatial invariants: ten generators, exact momentum commutation") {
  const InvariantSet inv = spatial_invariants(2);
  CHECK(inv.generators.size() == 10);
  CHECK(inv.momentum.size() == 3);
  for (const Poly& g : inv.generators)
    for (const Poly& mu : inv.momentum)
      CHECK(inv.space.canonical_bracket(g, mu).is_zero());
}

TEST_CASE("spatial bracket closes into the generator span") {
  const InvariantSet inv = spatial_invariants(2);
  const auto& s = inv.space;
  // {q1.q1, p1.p1} = -4 q1.p1
  const Poly qq = s.dot_qq(0, 0), pp = s.dot_pp(0, 0), qp = s.dot_qp(0, 0);
  CHECK(s.canonical_bracket(qq, pp) == qp * Rational(-4));
  const auto coeffs = express_in_span(inv.generators, s.canonical_bracket(qq, pp));
  CHECK(coeffs.has_value());
}

TEST_CASE("structure constants of the spatial set") {
  const StructureConstants sc = closure_to_lie_algebra(spatial_invariants(2));
  CHECK(sc.dim() == 10);
  CHECK(sc.antisymmetric());
  CHECK(sc.jacobi());
  const auto sig = sc.killing_signature();
  CHECK(sig.first == 6);
  CHECK(sig.second == 4);
}

TEST_CASE("planar closure is three dimensional and proportional to the reference") {
  const InvariantSet inv = planar_invariants(1);
  const StructureConstants sc = closure_to_lie_algebra(inv);
  CHECK(sc.dim() == 3);
  CHECK(sc.jacobi());
  // {x1,x2} = -4 rho in constants
  CHECK(sc.c[0][1][2] == Rational(-4));
  CHECK(sc.c[0][1][0] == 0);
}

TEST_CASE("non-closure is reported with the offending pair") {
  PhaseSpace space(1, 2);
  // qq and qp alone do not close: {qq,qp} contains pp.
  const std::vector<Poly> gens{space.dot_qq(0, 0), space.dot_qp(0, 0)};
  CHECK_THROWS_AS(
      closure_to_lie_algebra(space, {"qq", "qp"}, gens), NonClosureError);
}

TEST_CASE("unitary moment") {
  const PhaseSpace plane(1, 2);
  const int m = 2;
  std::vector<std::vector<ComplexRational>> zero(
      m, std::vector<ComplexRational>(m, ComplexRational{0, 0}));
  CHECK(unitary_moment(zero, plane).is_zero());

  // Rotation generator on C^2 reproduces the determinant invariant.
  auto xi = zero;
  xi[0][1] = ComplexRational{Rational(-1), Rational(0)};
  xi[1][0] = ComplexRational{Rational(1), Rational(0)};
  const Poly mu = unitary_moment(xi, plane);
  const Poly det = plane.q(0, 0) * plane.p(0, 1) - plane.q(0, 1) * plane.p(0, 0);
  CHECK(mu == det);

  // Hamiltonian vector field: {mu_xi, f} equals the infinitesimal action
  // df(xi.w) for linear f.
  for (int slot = 0; slot < 2; ++slot) {
    // action on coordinates: qdot = xi q, pdot = xi p with xi = [[0,-1],[1,0]]
    const Poly f_q = plane.q(0, slot);
    const Poly f_p = plane.p(0, slot);
    const Poly expected_q = slot == 0 ? -plane.q(0, 1) : plane.q(0, 0);
    const Poly expected_p = slot == 0 ? -plane.p(0, 1) : plane.p(0, 0);
    CHECK(plane.canonical_bracket(mu, f_q) == expected_q);
    CHECK(plane.canonical_bracket(mu, f_p) == expected_p);
  }

  auto bad = zero;
  bad[0][1] = ComplexRational{Rational(1), Rational(0)};
  bad[1][0] = ComplexRational{Rational(1), Rational(0)};
  CHECK_THROWS_AS(unitary_moment(bad, plane), std::invalid_argument);
}

namespace {
RationalVec3 rv(long a, long b, long c) {
  return {Rational(a), Rational(b), Rational(c)};
}
}  // namespace

TEST_CASE("sp4 moment map") {
  const RationalVec3 zero3 = rv(0, 0, 0);
  // zero configuration -> zero matrix
  const SpatialConfig zero_cfg{zero3, zero3, zero3, zero3};
  CHECK(is_zero(sp4_moment(zero_cfg)));

  // Reference configuration maps onto the standard rank-2 nilpotent:
  // q1, q2 orthogonal with squared length 2, momenta zero.
  SpatialConfig ref{rv(1, 1, 0), rv(1, -1, 0), zero3, zero3};
  const RationalMatrix4 m = sp4_moment(ref);
  RationalMatrix4 expected{};
  expected[0][2] = 1;
  expected[1][3] = 1;
  CHECK(m == expected);
  CHECK(is_zero(rmat_mul(m, m)));
  CHECK(rmat_rank(m) == 2);

  // Zero total angular momentum: nilpotent of rank <= 2, exactly.
  SpatialConfig cfg{rv(1, 2, 3), rv(2, 4, 6), rv(-1, -2, -3), rv(3, 6, 9)};
  CHECK(angular_momentum(cfg) == zero3);
  const RationalMatrix4 mc = sp4_moment(cfg);
  CHECK(is_zero(symplectic_defect(mc)));
  CHECK(is_zero(rmat_mul(mc, mc)));
  CHECK(rmat_rank(mc) <= 2);

  // Generic configuration: M^2 != 0, still in the symplectic algebra.
  SpatialConfig gen{rv(1, 0, 0), rv(0, 1, 0), rv(0, 0, 1), rv(1, 1, 1)};
  CHECK(angular_momentum(gen) != zero3);
  const RationalMatrix4 mg = sp4_moment(gen);
  CHECK(is_zero(symplectic_defect(mg)));
  CHECK(!is_zero(rmat_mul(mg, mg)));

  // Floating wrapper agrees with the exact route.
  Eigen::Matrix<double, 4, 3> cfgd;
  cfgd << 1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 1;
  const Eigen::Matrix4d md = sp4_moment(cfgd);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(md(i, j) == doctest::Approx(to_double(mg[i][j])));
}

TEST_CASE("kempf-ness rotation witnesses") {
  Rng rng(17);
  // Rotation invariance of the invariants, exactly in rationals.
  for (int n = 0; n < 50; ++n) {
    const PlanarZeroSample s = sample_planar_zero_locus(rng);
    const auto i1 = planar_invariant_values(s);
    const PlanarZeroSample r =
        rotate_exact(s, Rational(rng.uniform_int(-9, 9), rng.uniform_int(1, 7)));
    const auto i2 = planar_invariant_values(r);
    CHECK(i1.x1 == i2.x1);
    CHECK(i1.x2 == i2.x2);
    CHECK(i1.rho == i2.rho);
  }

  // rho^2 = x1^2 + x2^2 exactly on 1000 zero-locus samples.
  for (int n = 0; n < 1000; ++n) {
    const auto iv = planar_invariant_values(sample_planar_zero_locus(rng));
    CHECK(iv.rho * iv.rho == iv.x1 * iv.x1 + iv.x2 * iv.x2);
  }

  const KempfNessReport rep = kempf_ness_check(100, 99);
  CHECK(rep.ok);
  CHECK(rep.max_rotation_error <= 1e-9);
  CHECK(rep.rho_identity_exact);

  // Points with different invariants have no rotation witness.
  const PlanarZeroSample a{{Rational(1), Rational(0)}, {Rational(0), Rational(0)}};
  const PlanarZeroSample b{{Rational(2), Rational(0)}, {Rational(0), Rational(0)}};
  CHECK(!rotation_between(a, b).has_value());
}
