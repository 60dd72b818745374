#include "repstrata/surface_group.hpp"

#include <cmath>

namespace repstrata {

std::string to_string(Stratum s) {
  switch (s) {
    case Stratum::Z: return "Z";
    case Stratum::T: return "T";
    case Stratum::G: return "G";
  }
  return "?";
}

Stratum stratum_from_string(const std::string& s) {
  if (s == "Z") return Stratum::Z;
  if (s == "T") return Stratum::T;
  if (s == "G") return Stratum::G;
  throw std::invalid_argument("unknown stratum label: " + s);
}

Presentation::Presentation(int genus) : genus_(genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  letters_.reserve(4 * genus);
  for (int k = 0; k < genus; ++k) {
    const int a = 2 * k, b = 2 * k + 1;
    letters_.push_back({a, +1});
    letters_.push_back({b, +1});
    letters_.push_back({a, -1});
    letters_.push_back({b, -1});
  }
}

Quaternion evaluate_relator(const Representation& rep) {
  const Presentation pres(rep.genus);
  Quaternion r = Quaternion::identity();
  for (const auto& [gen, sign] : pres.relator()) {
    const Quaternion& g = rep.images[gen];
    r = quat_mul_raw(r, sign > 0 ? g : g.inverse());
  }
  return r;
}

double relator_residual(const Representation& rep) {
  return quat_distance(evaluate_relator(rep), Quaternion::identity());
}

RelatorFrame relator_frame(const Representation& rep) {
  const Presentation pres(rep.genus);
  RelatorFrame f;
  const auto& letters = pres.relator();
  f.gen.reserve(letters.size());
  f.sign.reserve(letters.size());
  f.frame.reserve(letters.size());
  Quaternion prefix = Quaternion::identity();
  for (const auto& [gen, sign] : letters) {
    const Quaternion& g = rep.images[gen];
    // For a positive letter the frame is Ad(prefix); for an inverse letter
    // it is -Ad(prefix g^{-1}), matching the Fox derivative expansion.
    const Quaternion q = sign > 0 ? prefix : quat_mul_raw(prefix, g.inverse());
    f.gen.push_back(gen);
    f.sign.push_back(sign);
    f.frame.push_back(static_cast<double>(sign) * adjoint_matrix(q));
    prefix = quat_mul_raw(prefix, sign > 0 ? g : g.inverse());
  }
  return f;
}

Matrix relator_derivative(const Representation& rep) {
  const RelatorFrame f = relator_frame(rep);
  Matrix d = Matrix::Zero(3, 6 * rep.genus);
  for (std::size_t j = 0; j < f.gen.size(); ++j)
    d.block<3, 3>(0, 3 * f.gen[j]) += f.frame[j];
  return d;
}

Representation conjugate(const Representation& rep, const Quaternion& g) {
  Representation out = rep;
  const Quaternion gi = g.inverse();
  for (auto& img : out.images)
    img = quat_mul_raw(quat_mul_raw(g, img), gi).normalized();
  return out;
}

std::vector<Representation> enumerate_central(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  const int n = 2 * genus;
  std::vector<Representation> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Representation rep;
    rep.genus = genus;
    rep.images.reserve(n);
    for (int i = 0; i < n; ++i)
      rep.images.push_back(
          (mask >> i) & 1 ? Quaternion{-1, 0, 0, 0} : Quaternion::identity());
    out.push_back(std::move(rep));
  }
  return out;
}

Stratum orbit_type(const Representation& rep, double tol) {
  bool all_central = true;
  for (const auto& g : rep.images)
    if (distance_to_center(g) > tol) all_central = false;
  if (all_central) return Stratum::G;

  const int n = rep.generator_count();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Quaternion& a = rep.images[i];
      const Quaternion& b = rep.images[j];
      const Quaternion comm = quat_mul_raw(
          quat_mul_raw(quat_mul_raw(a, b), a.inverse()), b.inverse());
      if (quat_distance(comm, Quaternion::identity()) > tol) return Stratum::Z;
    }
  }
  return Stratum::T;
}

namespace {

// Objective 0.5 |r(phi) - e|^2 and its gradient in the right-trivialized
// frame (one 3-vector per generator).
double objective_and_gradient(const Representation& rep,
                              std::vector<Vec3>* grad) {
  const Quaternion r = evaluate_relator(rep);
  const Eigen::Vector4d diff(r.w - 1.0, r.x, r.y, r.z);
  if (grad) {
    // d/dt r = X * r for the pure quaternion X = dr(u); assemble
    // d(objective) = diff . (X r) = (R_r^T diff) . X.
    Eigen::Matrix<double, 4, 3> right_mul;  // columns: e_i * r
    const Quaternion ex = quat_mul_raw({0, 1, 0, 0}, r);
    const Quaternion ey = quat_mul_raw({0, 0, 1, 0}, r);
    const Quaternion ez = quat_mul_raw({0, 0, 0, 1}, r);
    right_mul << ex.w, ey.w, ez.w, ex.x, ey.x, ez.x, ex.y, ey.y, ez.y, ex.z,
        ey.z, ez.z;
    const Eigen::Vector3d pull = right_mul.transpose() * diff;

    const RelatorFrame f = relator_frame(rep);
    grad->assign(rep.generator_count(), Vec3{});
    for (std::size_t j = 0; j < f.gen.size(); ++j) {
      const Eigen::Vector3d g = f.frame[j].transpose() * pull;
      Vec3& acc = (*grad)[f.gen[j]];
      acc = acc + Vec3::from_eigen(g);
    }
  }
  return 0.5 * diff.squaredNorm();
}

Representation random_start(int genus, Rng& rng) {
  Representation rep;
  rep.genus = genus;
  rep.images.reserve(2 * genus);
  for (int i = 0; i < 2 * genus; ++i)
    rep.images.push_back(rng.unit_quaternion());
  return rep;
}

Representation step(const Representation& rep, const std::vector<Vec3>& dir,
                    double eta) {
  Representation out = rep;
  for (int i = 0; i < rep.generator_count(); ++i)
    out.images[i] =
        quat_mul_raw(exp_map(eta * dir[i]), rep.images[i]).normalized();
  return out;
}

Representation solve_irreducible(int genus, std::uint64_t seed,
                                 const SolveOptions& opts) {
  Rng rng(seed);
  Representation rep = random_start(genus, rng);
  std::vector<Vec3> grad;
  double f = objective_and_gradient(rep, &grad);
  double eta = 0.25;
  int steps = 0;
  auto restart = [&] {
    rep = random_start(genus, rng);
    f = objective_and_gradient(rep, &grad);
    eta = 0.25;
  };
  while (steps < opts.max_steps) {
    if (relator_residual(rep) <= opts.residual_tol) {
      if (orbit_type(rep) == Stratum::Z) return rep;
      restart();  // landed on a reducible solution; generic starts avoid this
    }
    double gnorm2 = 0.0;
    for (const auto& g : grad) gnorm2 += inner(g, g);
    if (gnorm2 < 1e-300) {
      restart();  // stationary point that is not a solution
      ++steps;
      continue;
    }
    std::vector<Vec3> dir(grad.size());
    for (std::size_t i = 0; i < grad.size(); ++i) dir[i] = -grad[i];
    // Backtracking line search on the retraction.
    double trial_eta = std::min(eta * 2.0, 4.0);
    bool accepted = false;
    for (int bt = 0; bt < 40; ++bt) {
      Representation cand = step(rep, dir, trial_eta);
      const double fc = objective_and_gradient(cand, nullptr);
      if (fc <= f - 1e-4 * trial_eta * gnorm2) {
        rep = std::move(cand);
        f = objective_and_gradient(rep, &grad);
        eta = trial_eta;
        accepted = true;
        break;
      }
      trial_eta *= 0.5;
    }
    if (!accepted) restart();
    ++steps;
  }
  throw SolverFailure("solver exhausted step budget", relator_residual(rep));
}

}  // namespace

Representation solve_flat(int genus, Stratum target, std::uint64_t seed,
                          const SolveOptions& opts) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  if (genus < 2 && target != Stratum::G)
    throw std::invalid_argument("targets T and Z require genus >= 2");

  Rng rng(seed);
  switch (target) {
    case Stratum::G: {
      Representation rep;
      rep.genus = genus;
      for (int i = 0; i < 2 * genus; ++i)
        rep.images.push_back(rng.uniform_int(0, 1)
                                 ? Quaternion{-1, 0, 0, 0}
                                 : Quaternion::identity());
      return rep;
    }
    case Stratum::T: {
      // Any images in a fixed maximal torus solve r = e exactly; draw
      // angles and make sure at least one image is non-central.
      Representation rep;
      rep.genus = genus;
      for (int i = 0; i < 2 * genus; ++i) {
        double theta = rng.uniform(-M_PI, M_PI);
        if (i == 0) {
          while (std::abs(std::sin(theta)) < 0.1)
            theta = rng.uniform(-M_PI, M_PI);
        }
        rep.images.push_back(exp_map({0, 0, theta}));
      }
      return rep;
    }
    case Stratum::Z:
      return solve_irreducible(genus, seed, opts);
  }
  throw std::logic_error("unreachable");
}

}  // namespace repstrata
