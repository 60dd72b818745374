#include "repstrata/poisson_model.hpp"

#include <cmath>
#include <stdexcept>

namespace repstrata {

bool PoissonModel::relations_hold(std::span<const double> point,
                                  double tol) const {
  for (const auto& rel : relations)
    if (std::abs(rel.eval(point)) > tol) return false;
  return true;
}

Poly PoissonModel::model_bracket(const Poly& f, const Poly& h) const {
  const int n = generator_count();
  Poly acc(generators);
  for (int i = 0; i < n; ++i) {
    const Poly fi = f.derivative(i);
    if (fi.is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      const Poly hj = h.derivative(j);
      if (hj.is_zero() || table[i][j].is_zero()) continue;
      acc += fi * hj * table[i][j];
    }
  }
  return acc;
}

namespace {

void check_feasible(const PoissonModel& model, std::span<const double> point,
                    double feasibility_tol) {
  if (static_cast<int>(point.size()) != model.generator_count())
    throw std::invalid_argument("point dimension != generator count");
  if (!model.relations_hold(point, feasibility_tol))
    throw std::invalid_argument("point does not satisfy the relations");
  for (const auto& ineq : model.inequalities)
    if (ineq.eval(point) < -feasibility_tol)
      throw std::invalid_argument("point violates an inequality constraint");
}

Matrix relation_jacobian(const PoissonModel& model,
                         std::span<const double> point) {
  const int n = model.generator_count();
  const int r = static_cast<int>(model.relations.size());
  Matrix jac = Matrix::Zero(r, n);
  for (int k = 0; k < r; ++k)
    for (int i = 0; i < n; ++i)
      jac(k, i) = model.relations[k].derivative(i).eval(point);
  return jac;
}

}  // namespace

int poisson_rank_at(const PoissonModel& model, std::span<const double> point,
                    double tol, double feasibility_tol) {
  check_feasible(model, point, feasibility_tol);
  const int n = model.generator_count();
  Matrix pi(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pi(i, j) = model.table[i][j].eval(point);

  if (model.relations.empty()) return numeric_rank(pi, tol).rank;

  const Matrix jac = relation_jacobian(model, point);
  const Matrix cotangent = kernel_basis(jac, tol);  // complement of row space
  if (cotangent.cols() == 0) return 0;
  const Matrix restricted = cotangent.transpose() * pi * cotangent;
  if (restricted.cwiseAbs().maxCoeff() == 0.0) return 0;
  return numeric_rank(restricted, tol).rank;
}

int zariski_tangent_dim(const PoissonModel& model,
                        std::span<const double> point, double tol,
                        double feasibility_tol) {
  check_feasible(model, point, feasibility_tol);
  const int n = model.generator_count();
  if (model.relations.empty()) return n;
  const Matrix jac = relation_jacobian(model, point);
  if (jac.cwiseAbs().maxCoeff() == 0.0) return n;
  return n - numeric_rank(jac, tol).rank;
}

bool semialgebraic_member(const PoissonModel& model,
                          std::span<const double> point, double tol) {
  if (static_cast<int>(point.size()) != model.generator_count()) return false;
  if (!model.relations_hold(point, tol)) return false;
  for (const auto& ineq : model.inequalities)
    if (ineq.eval(point) < -tol) return false;
  return true;
}

}  // namespace repstrata
