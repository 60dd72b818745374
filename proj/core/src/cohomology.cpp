#include "repstrata/cohomology.hpp"

#include <stdexcept>

namespace repstrata {

namespace {

// Stacked coboundary map g -> g^{2l}, v |-> (v - Ad(phi(x_i)) v)_i.
Matrix coboundary_map(const Representation& rep) {
  const int n = rep.generator_count();
  Matrix d0(3 * n, 3);
  for (int i = 0; i < n; ++i)
    d0.block<3, 3>(3 * i, 0) =
        Eigen::Matrix3d::Identity() - adjoint_matrix(rep.images[i]);
  return d0;
}

}  // namespace

CohomologyData compute_cohomology(const Representation& rep, double tol,
                                  double residual_tol) {
  const double res = relator_residual(rep);
  if (res > residual_tol)
    throw std::invalid_argument("representation residual too large: " +
                                std::to_string(res));

  CohomologyData data;
  data.genus = rep.genus;
  data.stratum = orbit_type(rep, tol);

  const Matrix d0 = coboundary_map(rep);
  // H^0 = ker d0: the Lie algebra of the stabilizer.
  data.h0_report = numeric_rank(d0, tol);
  data.h0_basis = kernel_basis(d0, tol);
  data.h0_dim = static_cast<int>(data.h0_basis.cols());

  const Matrix dr = relator_derivative(rep);
  data.z1_report = numeric_rank(dr, tol);
  data.z1_basis = kernel_basis(dr, tol);

  data.b1_report = numeric_rank(d0, tol);
  data.b1_basis = column_space_basis(d0, tol);
  const int b1 = static_cast<int>(data.b1_basis.cols());
  const int z1 = static_cast<int>(data.z1_basis.cols());

  // B^1 must sit inside Z^1 = ker dr; the defect scales with the residual.
  if (b1 > 0) {
    const double scale = std::max(1.0, data.z1_report.sigma_max);
    const double incl = (dr * data.b1_basis).cwiseAbs().maxCoeff();
    if (incl > 10.0 * std::max(res, 1e-9) * scale)
      throw std::invalid_argument(
          "coboundaries are not cocycles: inconsistent representation");
  }

  data.h1_basis = complement_within(data.b1_basis, data.z1_basis, tol);
  data.h1_dim = static_cast<int>(data.h1_basis.cols());
  if (data.h1_dim != z1 - b1)
    throw std::logic_error("H^1 dimension mismatch against Z^1 - B^1");
  data.h2_dim = data.h0_dim;  // duality through the degree-(0,2) pairing
  return data;
}

Matrix pairing_form(const Representation& rep) {
  const RelatorFrame f = relator_frame(rep);
  const int n = rep.generator_count();
  const int m = static_cast<int>(f.gen.size());
  Matrix s = Matrix::Zero(3 * n, 3 * n);
  // Evaluation of the cup product on the fundamental 2-cycle of the
  // presentation: sum over ordered letter pairs of the frame-translated
  // values, plus the diagonal correction from the inverse letters.
  for (int k = 0; k < m; ++k)
    for (int j = k + 1; j < m; ++j)
      s.block<3, 3>(3 * f.gen[k], 3 * f.gen[j]) +=
          f.frame[k].transpose() * f.frame[j];
  for (int i = 0; i < n; ++i)
    s.block<3, 3>(3 * i, 3 * i) += Eigen::Matrix3d::Identity();
  // Exactly skew on cocycle pairs; antisymmetrize to make that a matrix
  // identity as well.
  return 0.5 * (s - s.transpose());
}

double symplectic_pairing(const Representation& rep, const Eigen::VectorXd& u,
                          const Eigen::VectorXd& v, double tol) {
  const Matrix dr = relator_derivative(rep);
  const double scale = std::max(1.0, dr.cwiseAbs().maxCoeff());
  auto is_cocycle = [&](const Eigen::VectorXd& w) {
    if (w.size() != dr.cols()) return false;
    return (dr * w).cwiseAbs().maxCoeff() <= tol * scale * std::max(1.0, w.norm());
  };
  if (!is_cocycle(u) || !is_cocycle(v))
    throw std::invalid_argument("symplectic_pairing: input is not a 1-cocycle");
  return u.dot(pairing_form(rep) * v);
}

Matrix pairing_matrix(const Representation& rep, const CohomologyData& data) {
  const Matrix s = pairing_form(rep);
  return data.h1_basis.transpose() * s * data.h1_basis;
}

Vec3 theta(const Representation& rep, const CohomologyData& data,
           const Eigen::VectorXd& u, double tol) {
  const Matrix dr = relator_derivative(rep);
  const double scale = std::max(1.0, dr.cwiseAbs().maxCoeff());
  if (u.size() != dr.cols() ||
      (dr * u).cwiseAbs().maxCoeff() > tol * scale * std::max(1.0, u.norm()))
    throw std::invalid_argument("theta: input is not a 1-cocycle");

  const RelatorFrame f = relator_frame(rep);
  const int m = static_cast<int>(f.gen.size());
  std::vector<Vec3> letter_values(m);
  for (int j = 0; j < m; ++j)
    letter_values[j] =
        Vec3::from_eigen(f.frame[j] * u.segment<3>(3 * f.gen[j]));

  // (1/2) sum_{k<j} [c_k(u), c_j(u)], accumulated through prefix sums.
  Vec3 acc{}, prefix{};
  for (int j = 0; j < m; ++j) {
    acc = acc + bracket(prefix, letter_values[j]);
    prefix = prefix + letter_values[j];
  }
  const Vec3 total = 0.5 * acc;

  // Report in the H^2 = (H^0)^* identification: project onto H^0.
  Eigen::Vector3d projected = Eigen::Vector3d::Zero();
  if (data.h0_dim > 0)
    projected = data.h0_basis * (data.h0_basis.transpose() * total.as_eigen());
  return Vec3::from_eigen(projected);
}

LambdaAnalysis lambda_analysis(const Representation& rep,
                               const CohomologyData& data, double tol) {
  LambdaAnalysis out;
  const int h1 = data.h1_dim;
  if (data.h0_dim == 0) {
    // Discrete stabilizer acting through Ad(+-1): everything is fixed.
    out.kernel_dim = 0;
    out.image_dim = h1;
    out.is_isomorphism = true;
    return out;
  }
  // The fixed subspace of H^1 under the connected stabilizer is the common
  // kernel of the induced ad(xi) operators, xi running over an H^0 basis.
  const int n = rep.generator_count();
  Matrix stacked(data.h0_dim * h1, h1);
  for (int s = 0; s < data.h0_dim; ++s) {
    const Vec3 xi = Vec3::from_eigen(data.h0_basis.col(s));
    Matrix action = Matrix::Zero(3 * n, h1);
    for (int col = 0; col < h1; ++col) {
      for (int i = 0; i < n; ++i) {
        const Vec3 block =
            Vec3::from_eigen(data.h1_basis.col(col).segment<3>(3 * i));
        action.col(col).segment<3>(3 * i) = bracket(xi, block).as_eigen();
      }
    }
    stacked.middleRows(s * h1, h1) = data.h1_basis.transpose() * action;
  }
  const int fixed_dim =
      h1 == 0 ? 0 : static_cast<int>(kernel_basis(stacked, tol).cols());
  out.kernel_dim = h1 - fixed_dim;
  out.image_dim = fixed_dim;
  out.is_isomorphism = (out.kernel_dim == 0);
  return out;
}

}  // namespace repstrata
