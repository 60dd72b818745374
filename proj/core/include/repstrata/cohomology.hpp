#pragma once

#include "repstrata/linalg.hpp"
#include "repstrata/surface_group.hpp"

namespace repstrata {

/// Dimensions and bases of the group cohomology H*(pi, g_phi) at a
/// representation.  Columns of z1/b1/h1 live in R^{6l}; the H^1 basis is
/// the orthogonal complement of B^1 inside Z^1.  H^2 is carried through
/// the duality with (H^0)^*, so h2 = h0.
struct CohomologyData {
  int genus = 0;
  Stratum stratum = Stratum::Z;
  int h0_dim = 0, h1_dim = 0, h2_dim = 0;
  Matrix h0_basis;  // 3 x h0
  Matrix z1_basis;  // 6l x z1
  Matrix b1_basis;  // 6l x b1
  Matrix h1_basis;  // 6l x h1
  /// Rank decisions behind the dimensions, with their spectral gaps.
  RankReport h0_report, z1_report, b1_report;
};

/// Computes H^0 as the common fixed space of Ad(phi(x_i)), Z^1 as the
/// kernel of the word-map derivative, and B^1 as the image of
/// v -> (v - Ad(phi(x_i)) v)_i.  Requires residual <= residual_tol and
/// checks the inclusion B^1 in Z^1; both failures throw
/// std::invalid_argument.
CohomologyData compute_cohomology(const Representation& rep,
                                  double tol = 1e-8,
                                  double residual_tol = 1e-8);

/// The degree-1 pairing of the cohomology cup product against the
/// fundamental class, as a bilinear form on R^{6l}.  Skew on cocycles,
/// vanishes when either argument is a coboundary, and induces a symplectic
/// form on H^1.
Matrix pairing_form(const Representation& rep);

/// Pairing of two cocycles; rejects non-cocycle inputs.
double symplectic_pairing(const Representation& rep,
                          const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                          double tol = 1e-8);

/// The induced h1 x h1 matrix of the pairing in the H^1 basis.
Matrix pairing_matrix(const Representation& rep, const CohomologyData& data);

/// The quadratic momentum map Theta(u) = (1/2)[u,u] in degree 2, reported
/// through the duality H^2 = (H^0)^* as a vector in the H^0 subspace of g.
/// Zero for coboundaries and quadratic under scaling.
Vec3 theta(const Representation& rep, const CohomologyData& data,
           const Eigen::VectorXd& u, double tol = 1e-8);

struct LambdaAnalysis {
  int kernel_dim = 0;
  int image_dim = 0;
  bool is_isomorphism = false;
};

/// Kernel and image dimensions of the comparison map from H^1 to the
/// Zariski tangent space: the kernel is the span of x.w - w over the
/// stabilizer, computed as the complement of the stabilizer-fixed subspace
/// of H^1.
LambdaAnalysis lambda_analysis(const Representation& rep,
                               const CohomologyData& data, double tol = 1e-8);

}  // namespace repstrata
