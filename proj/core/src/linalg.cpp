#include "repstrata/linalg.hpp"

#include <limits>
#include <stdexcept>

namespace repstrata {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_nonempty(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0)
    throw std::invalid_argument("rank computation on empty matrix");
}
}  // namespace

RankReport numeric_rank(const Matrix& m, double tol) {
  check_nonempty(m);
  if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  RankReport rep;
  rep.sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  const double cut = tol * rep.sigma_max;
  int rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;
  rep.rank = rank;
  rep.sigma_min_kept = rank > 0 ? sv(rank - 1) : 0.0;
  rep.sigma_max_dropped = rank < sv.size() ? sv(rank) : 0.0;
  if (rank == 0 || rep.sigma_max_dropped <= 0.0)
    rep.gap = kInf;  // nothing kept, or the dropped block is exactly zero
  else
    rep.gap = rep.sigma_min_kept / rep.sigma_max_dropped;
  return rep;
}

Matrix kernel_basis(const Matrix& m, double tol) {
  check_nonempty(m);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double cut = tol * smax;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) rank = i + 1;
  return svd.matrixV().rightCols(m.cols() - rank);
}

Matrix column_space_basis(const Matrix& m, double tol) {
  check_nonempty(m);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double cut = tol * smax;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) rank = i + 1;
  return svd.matrixU().leftCols(rank);
}

Matrix complement_within(const Matrix& inner, const Matrix& outer, double tol) {
  if (outer.cols() == 0) return outer;
  if (inner.cols() == 0) return outer;
  // Project the inner span out of the outer basis, then re-orthonormalize.
  Matrix proj = outer - inner * (inner.transpose() * outer);
  return column_space_basis(proj, tol);
}

}  // namespace repstrata
