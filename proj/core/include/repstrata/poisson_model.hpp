#pragma once

#include <span>
#include <string>
#include <vector>

#include "repstrata/linalg.hpp"
#include "repstrata/polynomial.hpp"

namespace repstrata {

/// A smooth structure with Poisson algebra presented by generators: a cut
/// locus (relation polynomials in the generators), optional semi-algebraic
/// inequalities, and the pairwise bracket table, also expressed in the
/// generators.  Points are assignments of reals to the generators.
struct PoissonModel {
  VarSetPtr generators;
  std::vector<Poly> relations;
  std::vector<Poly> inequalities;  // constraints poly >= 0
  std::vector<std::vector<Poly>> table;

  int generator_count() const { return generators->size(); }

  /// All relations hold to feasibility_tol at the point.
  bool relations_hold(std::span<const double> point, double tol = 1e-10) const;

  /// Bracket of two polynomials in the generators, extended from the table
  /// by the derivation rule.
  Poly model_bracket(const Poly& f, const Poly& h) const;
};

/// Rank of the Poisson bivector at a feasible point, as a bilinear form on
/// the Zariski cotangent space: the bracket matrix Pi(point) restricted to
/// the complement of the row space of the relations' Jacobian.  Rejects
/// infeasible points.
int poisson_rank_at(const PoissonModel& model, std::span<const double> point,
                    double tol = 1e-8, double feasibility_tol = 1e-10);

/// Zariski tangent dimension at a feasible point:
/// (#generators) - rank(Jacobian of the relations).
int zariski_tangent_dim(const PoissonModel& model,
                        std::span<const double> point, double tol = 1e-8,
                        double feasibility_tol = 1e-10);

/// Semi-algebraic membership: relations hold to tol and all inequality
/// constraints are satisfied.
bool semialgebraic_member(const PoissonModel& model,
                          std::span<const double> point, double tol = 1e-10);

}  // namespace repstrata
