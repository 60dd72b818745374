#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "repstrata/phase_space.hpp"
#include "repstrata/quaternion.hpp"

namespace repstrata {

/// A generating set of invariant polynomials together with the momentum
/// polynomial(s) of the acting group.  Every generator Poisson-commutes
/// with every momentum component exactly.
struct InvariantSet {
  PhaseSpace space;
  std::string group;  // "SO(2)" or "O(3)"
  std::vector<std::string> names;
  std::vector<Poly> generators;
  std::vector<std::string> momentum_names;
  std::vector<Poly> momentum;
};

/// SO(2)-invariants of n particles in the plane.  For n = 1 these are the
/// classical coordinates x1 = qq - pp, x2 = 2qp, rho = qq + pp with
/// momentum mu = q1 p2 - q2 p1.  For n >= 2 the generating set consists of
/// all dot products and all 2x2 determinants of the 2n plane vectors.
InvariantSet planar_invariants(int particles = 1);

/// O(3)-invariants of n particles in 3-space: the dot products of the 2n
/// vectors (q_1..q_n, p_1..p_n), with the three components of the total
/// angular momentum sum_i q_i x p_i as momentum map.
InvariantSet spatial_invariants(int particles = 2);

struct ComplexRational {
  Rational re, im;
};

/// Momentum of a unitary representation in complex coordinates
/// z_j = q_j + i p_j (j enumerates (particle, axis) slots):
///   (xi o mu)(z) = (i/2) sum xi_{jk} conj(z_j) z_k.
/// xi must be skew-hermitian; the result is a real quadratic polynomial.
Poly unitary_moment(const std::vector<std::vector<ComplexRational>>& xi,
                    const PhaseSpace& space);

using RationalMatrix4 = std::array<std::array<Rational, 4>, 4>;
using RationalVec3 = std::array<Rational, 3>;

/// One configuration of two particles in 3-space.
struct SpatialConfig {
  RationalVec3 q1, q2, p1, p2;
};

/// Total angular momentum q1 x p1 + q2 x p2.
RationalVec3 angular_momentum(const SpatialConfig& c);

/// The Sp(4,R) moment map on (T*R^3)^2, assembled from the Gram matrix S
/// of (q1, q2, p1, p2) as M = (1/2) S J.  The image satisfies
/// M^T J + J M = 0 identically, and M^2 = 0 on the zero-angular-momentum
/// locus.  The normalization is chosen so that q1, q2 orthogonal of squared
/// length 2 with p = 0 maps to the standard rank-2 nilpotent representative.
RationalMatrix4 sp4_moment(const SpatialConfig& config);

Eigen::Matrix4d sp4_moment(const Eigen::Matrix<double, 4, 3>& config);

/// The symplectic Gram matrix J used by sp4_moment (q-block first).
RationalMatrix4 sp4_form();

bool is_zero(const RationalMatrix4& m);
RationalMatrix4 rmat_mul(const RationalMatrix4& a, const RationalMatrix4& b);
/// M^T J + J M, exactly.
RationalMatrix4 symplectic_defect(const RationalMatrix4& m);
int rmat_rank(const RationalMatrix4& m);

/// Structure constants of a Lie algebra spanned by quadratic generators:
/// {g_i, g_j} = sum_k c[i][j][k] g_k.
struct StructureConstants {
  std::vector<std::string> names;
  std::vector<std::vector<std::vector<Rational>>> c;

  int dim() const { return static_cast<int>(names.size()); }
  bool antisymmetric() const;
  /// Jacobi identity on the constants, exactly.
  bool jacobi() const;
  /// Killing form K_ab = tr(ad a . ad b), exact.
  std::vector<std::vector<Rational>> killing_matrix() const;
  /// (positive, negative) inertia of the Killing form.
  std::pair<int, int> killing_signature(double tol = 1e-8) const;
};

/// Thrown when a bracket leaves the generator span.
struct NonClosureError : std::runtime_error {
  NonClosureError(std::string i, std::string j)
      : std::runtime_error("bracket {" + i + "," + j +
                           "} leaves the generator span"),
        gen_i(std::move(i)),
        gen_j(std::move(j)) {}
  std::string gen_i, gen_j;
};

/// Closes the given homogeneous quadratic generators under the canonical
/// bracket and returns the exact structure constants.  Throws
/// NonClosureError when a bracket is not in the span.
StructureConstants closure_to_lie_algebra(const PhaseSpace& space,
                                          const std::vector<std::string>& names,
                                          const std::vector<Poly>& gens);
StructureConstants closure_to_lie_algebra(const InvariantSet& inv);

/// Pairwise bracket table: each {g_i,g_j} in ambient coordinates, plus its
/// expression in the generators when the table closes linearly.
struct BracketTable {
  std::vector<std::string> names;
  std::vector<std::vector<Poly>> ambient;
  /// Entry (i,j) as a polynomial in the generator variables, when possible.
  std::vector<std::vector<std::optional<Poly>>> in_generators;
  VarSetPtr generator_vars;
};

BracketTable bracket_table(const InvariantSet& inv);

/// Writes a quadratic polynomial as a linear combination of the given
/// quadratics; nullopt when impossible.
std::optional<std::vector<Rational>> express_in_span(
    const std::vector<Poly>& gens, const Poly& target);

/// A point of the planar single-particle zero momentum locus (p parallel
/// to q), kept exact so invariant identities can be checked over Q.
struct PlanarZeroSample {
  std::array<Rational, 2> q, p;
};

struct PlanarInvariantValues {
  Rational x1, x2, rho;
};

PlanarInvariantValues planar_invariant_values(const PlanarZeroSample& s);

/// Random rational sample with q1 p2 - q2 p1 = 0 exactly.
PlanarZeroSample sample_planar_zero_locus(Rng& rng);

/// Exact rotation by the rational point (cos,sin) = ((1-t^2), 2t)/(1+t^2).
PlanarZeroSample rotate_exact(const PlanarZeroSample& s, const Rational& t);

/// Numerical rotation carrying a to b (equal invariants assumed); returns
/// the residual max-norm error of the best rotation, or nullopt when the
/// invariants of a and b disagree beyond tol.
std::optional<double> rotation_between(const PlanarZeroSample& a,
                                       const PlanarZeroSample& b,
                                       double tol = 1e-10);

struct KempfNessReport {
  int pairs = 0;
  double max_rotation_error = 0.0;
  bool rho_identity_exact = false;
  bool ok = false;
};

/// Injectivity witness for the Hilbert map on the planar zero locus:
/// samples pairs with equal (x1,x2), finds the rotation carrying one to
/// the other, and checks rho^2 = x1^2 + x2^2 exactly on every sample.
KempfNessReport kempf_ness_check(int pairs, std::uint64_t seed);

}  // namespace repstrata
