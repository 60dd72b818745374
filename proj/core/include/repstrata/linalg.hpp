#pragma once

#include <Eigen/Dense>

namespace repstrata {

using Matrix = Eigen::MatrixXd;

/// Outcome of a rank decision.  `gap` is the ratio between the smallest
/// kept singular value and the largest dropped one; an infinite gap means
/// nothing was dropped (or the matrix is exactly zero).  Dimension reports
/// keep the gap around so borderline ranks are visible.
struct RankReport {
  int rank = 0;
  double sigma_max = 0.0;
  double sigma_min_kept = 0.0;
  double sigma_max_dropped = 0.0;
  double gap = 0.0;
};

/// Rank with relative singular-value threshold: sigma > tol * sigma_max.
/// Rejects empty matrices.
RankReport numeric_rank(const Matrix& m, double tol = 1e-8);

/// Orthonormal basis of the kernel, columns in R^cols.
Matrix kernel_basis(const Matrix& m, double tol = 1e-8);

/// Orthonormal basis of the column space.
Matrix column_space_basis(const Matrix& m, double tol = 1e-8);

/// Orthonormal basis of the orthogonal complement of span(inner) inside
/// span(outer).  Both arguments must have orthonormal columns.
Matrix complement_within(const Matrix& inner, const Matrix& outer,
                         double tol = 1e-8);

}  // namespace repstrata
