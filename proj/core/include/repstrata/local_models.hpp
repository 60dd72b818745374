#pragma once

#include <cstdint>
#include <vector>

#include "repstrata/cohomology.hpp"
#include "repstrata/invariants.hpp"
#include "repstrata/poisson_model.hpp"
#include "repstrata/surface_group.hpp"

namespace repstrata {

/// Local model of the representation space near a point of the given
/// stratum: a trivial symplectic factor of dimension `free_dim` together
/// with a reduced particle-system factor presented as a PoissonModel.
/// The base point (the image of the representation class) is the origin
/// of the reduced coordinates.
struct LocalModelSpec {
  int genus = 0;
  Stratum stratum = Stratum::Z;
  PoissonModel model;
  int free_dim = 0;        // dimension of the Darboux factor
  int ambient_h1_dim = 0;  // dim H^1 feeding the model
  std::vector<double> base_point;
};

/// The reduced single particle in the plane: generators {x1,x2,rho} with
/// the defining relation x1^2 + x2^2 = rho^2, the half-cone constraint
/// rho >= 0, and the bracket table computed from the canonical bracket of
/// the planar invariants.
PoissonModel cone_model();

/// Assembles the per-stratum local model:
///   Z: 6(l-1) Darboux generators, constant symplectic table, no relations;
///   T: 2l Darboux generators x reduced planar system of l-1 particles;
///   G: reduced spatial system of l particles (dot-product generators,
///      Gram rank conditions and zero-angular-momentum identities).
/// Requires genus >= 2.
LocalModelSpec local_model(int genus, Stratum stratum);

struct StratumRow {
  int genus = 0;
  Stratum stratum = Stratum::Z;
  int h0 = 0, h1 = 0, h2 = 0;
  int lambda_kernel = 0, lambda_image = 0;
  int poisson_rank = 0;
  int tangent_dim = 0;
};

/// Per-stratum summary at one genus: cohomology dimensions and lambda
/// analysis at solved witness representations, Poisson rank and Zariski
/// tangent dimension at the base point of the local model.
std::vector<StratumRow> stratum_report(int genus, std::uint64_t seed = 0,
                                       double tol = 1e-8);

}  // namespace repstrata
