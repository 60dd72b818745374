#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "repstrata/cohomology.hpp"

using namespace repstrata;

namespace {

Eigen::VectorXd random_cocycle(const CohomologyData& data, Rng& rng) {
  Eigen::VectorXd coeff(data.z1_basis.cols());
  for (int i = 0; i < coeff.size(); ++i) coeff(i) = rng.normal();
  return data.z1_basis * coeff;
}

Eigen::VectorXd random_coboundary(const CohomologyData& data, Rng& rng) {
  Eigen::VectorXd coeff(data.b1_basis.cols());
  for (int i = 0; i < coeff.size(); ++i) coeff(i) = rng.normal();
  return data.b1_basis * coeff;
}

}  // namespace

TEST_CASE("h0 dimensions per stratum") {
  CHECK(compute_cohomology(solve_flat(2, Stratum::G, 1)).h0_dim == 3);
  CHECK(compute_cohomology(solve_flat(2, Stratum::T, 1)).h0_dim == 1);
  CHECK(compute_cohomology(solve_flat(2, Stratum::Z, 1)).h0_dim == 0);
}

TEST_CASE("cocycle and coboundary dimensions at genus 2") {
  const CohomologyData central = compute_cohomology(solve_flat(2, Stratum::G, 1));
  CHECK(central.z1_basis.cols() == 12);
  CHECK(central.b1_basis.cols() == 0);
  CHECK(central.h1_dim == 12);

  const CohomologyData torus = compute_cohomology(solve_flat(2, Stratum::T, 1));
  CHECK(torus.z1_basis.cols() == 10);
  CHECK(torus.b1_basis.cols() == 2);
  CHECK(torus.h1_dim == 8);

  const CohomologyData irr = compute_cohomology(solve_flat(2, Stratum::Z, 1));
  CHECK(irr.z1_basis.cols() == 9);
  CHECK(irr.b1_basis.cols() == 3);
  CHECK(irr.h1_dim == 6);
}

TEST_CASE("inconsistent representations are rejected") {
  Rng rng(41);
  Representation bad;
  bad.genus = 2;
  for (int i = 0; i < 4; ++i) bad.images.push_back(rng.unit_quaternion());
  // a random point is far from the relator variety
  CHECK(relator_residual(bad) > 1e-3);
  CHECK_THROWS_AS(compute_cohomology(bad), std::invalid_argument);
}

TEST_CASE("duality and Euler characteristic") {
  for (int genus = 2; genus <= 4; ++genus) {
    for (const Stratum s : {Stratum::Z, Stratum::T, Stratum::G}) {
      const CohomologyData d = compute_cohomology(solve_flat(genus, s, 2));
      CHECK(d.h2_dim == d.h0_dim);
      CHECK(d.h0_dim - d.h1_dim + d.h2_dim == 3 * (2 - 2 * genus));
    }
  }
}

TEST_CASE("pairing reduces to the intersection form at a central point") {
  const Representation rep = solve_flat(2, Stratum::G, 5);
  Rng rng(42);
  for (int n = 0; n < 20; ++n) {
    Eigen::VectorXd u(12), v(12);
    for (int i = 0; i < 12; ++i) {
      u(i) = rng.normal();
      v(i) = rng.normal();
    }
    // sum_i <u_{a_i}, v_{b_i}> - <u_{b_i}, v_{a_i}> over the two handles
    double expected = 0;
    for (int handle = 0; handle < 2; ++handle) {
      const int a = 6 * handle, b = 6 * handle + 3;
      expected += u.segment<3>(a).dot(v.segment<3>(b)) -
                  u.segment<3>(b).dot(v.segment<3>(a));
    }
    CHECK(symplectic_pairing(rep, u, v) ==
          doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("pairing is skew and kills coboundaries") {
  Rng rng(43);
  for (const Stratum s : {Stratum::Z, Stratum::T}) {
    const Representation rep = solve_flat(2, s, 4);
    const CohomologyData data = compute_cohomology(rep);
    for (int n = 0; n < 20; ++n) {
      const Eigen::VectorXd u = random_cocycle(data, rng);
      const Eigen::VectorXd v = random_cocycle(data, rng);
      CHECK(std::abs(symplectic_pairing(rep, u, v) +
                     symplectic_pairing(rep, v, u)) < 1e-8);
      const Eigen::VectorXd b = random_coboundary(data, rng);
      CHECK(std::abs(symplectic_pairing(rep, b, v)) < 1e-8);
      CHECK(std::abs(symplectic_pairing(rep, u, b)) < 1e-8);
    }
  }
}

TEST_CASE("non-cocycles are rejected by the pairing") {
  const Representation rep = solve_flat(2, Stratum::Z, 4);
  const CohomologyData data = compute_cohomology(rep);
  // build a vector with a large component along the row space of dr
  const Matrix dr = relator_derivative(rep);
  Eigen::VectorXd bad = dr.row(0).transpose();
  CHECK_THROWS_AS(
      symplectic_pairing(rep, bad, Eigen::VectorXd(data.z1_basis.col(0))),
      std::invalid_argument);
}

TEST_CASE("induced pairing is nondegenerate on H^1") {
  for (const Stratum s : {Stratum::Z, Stratum::T, Stratum::G}) {
    const Representation rep = solve_flat(2, s, 6);
    const CohomologyData data = compute_cohomology(rep);
    const Matrix p = pairing_matrix(rep, data);
    CHECK(numeric_rank(p).rank == data.h1_dim);
  }
}

TEST_CASE("theta at a central point is the total angular momentum shape") {
  const Representation rep = solve_flat(2, Stratum::G, 7);
  const CohomologyData data = compute_cohomology(rep);
  Rng rng(44);
  for (int n = 0; n < 20; ++n) {
    Eigen::VectorXd u(12);
    for (int i = 0; i < 12; ++i) u(i) = rng.normal();
    const Vec3 t = theta(rep, data, u);
    Vec3 expected{};
    for (int handle = 0; handle < 2; ++handle) {
      const Vec3 ua = Vec3::from_eigen(u.segment<3>(6 * handle));
      const Vec3 ub = Vec3::from_eigen(u.segment<3>(6 * handle + 3));
      expected = expected + bracket(ua, ub);
    }
    CHECK((t - expected).norm() < 1e-10);
  }
}

TEST_CASE("theta vanishes on coboundaries and scales quadratically") {
  Rng rng(45);
  for (const Stratum s : {Stratum::Z, Stratum::T}) {
    const Representation rep = solve_flat(2, s, 8);
    const CohomologyData data = compute_cohomology(rep);
    for (int n = 0; n < 10; ++n) {
      const Eigen::VectorXd b = random_coboundary(data, rng);
      CHECK(theta(rep, data, b).norm() < 1e-8);
      const Eigen::VectorXd u = random_cocycle(data, rng);
      const Vec3 t1 = theta(rep, data, u);
      const Vec3 t2 = theta(rep, data, 2.0 * u);
      CHECK((t2 - 4.0 * t1).norm() < 1e-8);
    }
  }
}

TEST_CASE("theta is equivariant under the stabilizer") {
  const Representation rep = solve_flat(2, Stratum::G, 9);
  const CohomologyData data = compute_cohomology(rep);
  Rng rng(46);
  for (int n = 0; n < 10; ++n) {
    const Quaternion x = rng.unit_quaternion();  // stabilizer is all of G
    Eigen::VectorXd u(12);
    for (int i = 0; i < 12; ++i) u(i) = rng.normal();
    Eigen::VectorXd xu(12);
    for (int i = 0; i < 4; ++i)
      xu.segment<3>(3 * i) =
          adjoint(x, Vec3::from_eigen(u.segment<3>(3 * i))).as_eigen();
    const Vec3 lhs = theta(rep, data, xu);
    const Vec3 rhs = adjoint(x, theta(rep, data, u));
    CHECK((lhs - rhs).norm() < 1e-8);
  }
}

TEST_CASE("lambda analysis per stratum at genus 2") {
  const Representation irr = solve_flat(2, Stratum::Z, 1);
  const LambdaAnalysis lz = lambda_analysis(irr, compute_cohomology(irr));
  CHECK(lz.kernel_dim == 0);
  CHECK(lz.image_dim == 6);
  CHECK(lz.is_isomorphism);

  const Representation torus = solve_flat(2, Stratum::T, 1);
  const LambdaAnalysis lt = lambda_analysis(torus, compute_cohomology(torus));
  CHECK(lt.kernel_dim == 4);
  CHECK(lt.image_dim == 4);
  CHECK(!lt.is_isomorphism);

  const Representation central = solve_flat(2, Stratum::G, 1);
  const LambdaAnalysis lg = lambda_analysis(central, compute_cohomology(central));
  CHECK(lg.kernel_dim == 12);
  CHECK(lg.image_dim == 0);
  CHECK(!lg.is_isomorphism);
}

TEST_CASE("dimensions and pairing rank are conjugation invariant") {
  Rng rng(47);
  for (const Stratum s : {Stratum::Z, Stratum::T, Stratum::G}) {
    const Representation rep = solve_flat(2, s, 3);
    const CohomologyData base = compute_cohomology(rep);
    const int base_rank = numeric_rank(pairing_matrix(rep, base)).rank;
    for (int n = 0; n < 5; ++n) {
      const Representation c = conjugate(rep, rng.unit_quaternion());
      const CohomologyData d = compute_cohomology(c);
      CHECK(d.h0_dim == base.h0_dim);
      CHECK(d.h1_dim == base.h1_dim);
      CHECK(d.h2_dim == base.h2_dim);
      CHECK(numeric_rank(pairing_matrix(c, d)).rank == base_rank);
    }
  }
}
