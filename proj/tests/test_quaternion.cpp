#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "repstrata/quaternion.hpp"

using namespace repstrata;

TEST_CASE("group multiplication basics") {
  Rng rng(1);
  const Quaternion g = rng.unit_quaternion();
  const Quaternion id = Quaternion::identity();
  CHECK(quat_distance(group_mul(id, g), g) < 1e-15);

  // i * j = k
  const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0};
  const Quaternion k = group_mul(i, j);
  CHECK(k.w == doctest::Approx(0));
  CHECK(k.z == doctest::Approx(1));

  // oracle: the inverse of a unit quaternion is its conjugate
  for (int n = 0; n < 100; ++n) {
    const Quaternion q = rng.unit_quaternion();
    CHECK(quat_distance(group_mul(q, q.conjugate()), id) < 1e-12);
  }
}

TEST_CASE("associativity on random triples") {
  Rng rng(2);
  for (int n = 0; n < 200; ++n) {
    const Quaternion a = rng.unit_quaternion();
    const Quaternion b = rng.unit_quaternion();
    const Quaternion c = rng.unit_quaternion();
    CHECK(quat_distance(group_mul(group_mul(a, b), c),
                        group_mul(a, group_mul(b, c))) < 1e-12);
  }
}

TEST_CASE("exponential map closed forms") {
  CHECK(quat_distance(exp_map({0, 0, 0}), Quaternion::identity()) == 0.0);

  // exp((pi/2) e1) = (cos pi/2, sin pi/2, 0, 0) = (0,1,0,0)
  const Quaternion q = exp_map({M_PI / 2, 0, 0});
  CHECK(q.w == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(q.x == doctest::Approx(1.0));

  // self-consistency: log(exp(v)) = v for |v| < pi
  Rng rng(3);
  double worst = 0;
  for (int n = 0; n < 100; ++n) {
    Vec3 v = rng.vec3();
    while (v.norm() >= 3.0) v = rng.vec3();
    const Vec3 back = log_map(exp_map(v));
    worst = std::max(worst, (back - v).norm());
  }
  CHECK(worst < 1e-10);

  // exp(log(g)) = g
  for (int n = 0; n < 100; ++n) {
    const Quaternion g = rng.unit_quaternion();
    if (g.w < -1.0 + 1e-9) continue;
    CHECK(quat_distance(exp_map(log_map(g)), g) < 1e-10);
  }
}

TEST_CASE("log at -identity is a branch error") {
  CHECK_THROWS_AS(log_map(Quaternion{-1, 0, 0, 0}), std::domain_error);
  CHECK_THROWS_AS(log_map(Quaternion{-1, 1e-14, 0, 0}), std::domain_error);
}

TEST_CASE("adjoint action") {
  Rng rng(4);
  const Vec3 v = rng.vec3();
  CHECK((adjoint(Quaternion::identity(), v) - v).norm() < 1e-15);

  // Ad(exp(theta e3)) rotates e1 by angle 2 theta in the e1-e2 plane.
  for (double theta : {0.3, 1.1, -0.7}) {
    const Vec3 r = adjoint(exp_map({0, 0, theta}), {1, 0, 0});
    CHECK(r.c1 == doctest::Approx(std::cos(2 * theta)).epsilon(1e-12));
    CHECK(r.c2 == doctest::Approx(std::sin(2 * theta)).epsilon(1e-12));
    CHECK(std::abs(r.c3) < 1e-12);
  }

  // norm preservation (rotation oracle)
  for (int n = 0; n < 100; ++n) {
    const Quaternion g = rng.unit_quaternion();
    const Vec3 u = rng.vec3();
    CHECK(std::abs(adjoint(g, u).norm() - u.norm()) < 1e-10);
  }
}

TEST_CASE("adjoint is a Lie algebra map") {
  Rng rng(5);
  for (int n = 0; n < 100; ++n) {
    const Quaternion g = rng.unit_quaternion();
    const Vec3 u = rng.vec3(), v = rng.vec3();
    const Vec3 lhs = adjoint(g, bracket(u, v));
    const Vec3 rhs = bracket(adjoint(g, u), adjoint(g, v));
    CHECK((lhs - rhs).norm() < 1e-10);
  }
}

TEST_CASE("invariant form: exact structure constant identity") {
  // <[e_i,e_j],e_k> + <e_j,[e_i,e_k]> = 0, exactly in doubles.
  const Vec3 basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const double lhs = inner(bracket(basis[i], basis[j]), basis[k]) +
                           inner(basis[j], bracket(basis[i], basis[k]));
        CHECK(lhs == 0.0);
      }
}

TEST_CASE("invariant form is Ad-invariant") {
  Rng rng(6);
  for (int n = 0; n < 100; ++n) {
    const Quaternion g = rng.unit_quaternion();
    const Vec3 u = rng.vec3(), v = rng.vec3();
    CHECK(std::abs(inner(adjoint(g, u), adjoint(g, v)) - inner(u, v)) < 1e-10);
  }
}

TEST_CASE("bracket convention [e1,e2] = 2 e3") {
  const Vec3 b = bracket({1, 0, 0}, {0, 1, 0});
  CHECK(b.c1 == 0.0);
  CHECK(b.c2 == 0.0);
  CHECK(b.c3 == 2.0);
}
