#include "repstrata/quaternion.hpp"

#include <cmath>
#include <stdexcept>

namespace repstrata {

double Vec3::norm() const { return std::sqrt(c1 * c1 + c2 * c2 + c3 * c3); }

double inner(const Vec3& u, const Vec3& v) {
  return u.c1 * v.c1 + u.c2 * v.c2 + u.c3 * v.c3;
}

Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u.c2 * v.c3 - u.c3 * v.c2,
          u.c3 * v.c1 - u.c1 * v.c3,
          u.c1 * v.c2 - u.c2 * v.c1};
}

Vec3 bracket(const Vec3& u, const Vec3& v) { return 2.0 * cross(u, v); }

double Quaternion::norm() const {
  return std::sqrt(w * w + x * x + y * y + z * z);
}

Quaternion Quaternion::normalized() const {
  const double n = norm();
  return {w / n, x / n, y / n, z / n};
}

Quaternion quat_mul_raw(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quaternion group_mul(const Quaternion& a, const Quaternion& b) {
  return quat_mul_raw(a, b).normalized();
}

double quat_distance(const Quaternion& a, const Quaternion& b) {
  const double dw = a.w - b.w, dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return std::sqrt(dw * dw + dx * dx + dy * dy + dz * dz);
}

double distance_to_center(const Quaternion& g) {
  const Quaternion minus_id{-1.0, 0.0, 0.0, 0.0};
  return std::min(quat_distance(g, Quaternion::identity()),
                  quat_distance(g, minus_id));
}

Quaternion exp_map(const Vec3& v) {
  const double theta = v.norm();
  if (theta < 1e-300) return Quaternion::identity();
  const double s = std::sin(theta) / theta;
  return {std::cos(theta), s * v.c1, s * v.c2, s * v.c3};
}

Vec3 log_map(const Quaternion& g) {
  const double vn = std::sqrt(g.x * g.x + g.y * g.y + g.z * g.z);
  if (vn < 1e-12) {
    if (g.w < 0.0)
      throw std::domain_error("log_map: branch undefined at -identity");
    return {0.0, 0.0, 0.0};
  }
  const double theta = std::atan2(vn, g.w);
  const double s = theta / vn;
  return {s * g.x, s * g.y, s * g.z};
}

Vec3 adjoint(const Quaternion& g, const Vec3& v) {
  const Quaternion pv{0.0, v.c1, v.c2, v.c3};
  const Quaternion r = quat_mul_raw(quat_mul_raw(g, pv), g.conjugate());
  return {r.x, r.y, r.z};
}

Eigen::Matrix3d adjoint_matrix(const Quaternion& g) {
  Eigen::Matrix3d m;
  const Vec3 a = adjoint(g, {1, 0, 0});
  const Vec3 b = adjoint(g, {0, 1, 0});
  const Vec3 c = adjoint(g, {0, 0, 1});
  m.col(0) = a.as_eigen();
  m.col(1) = b.as_eigen();
  m.col(2) = c.as_eigen();
  return m;
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform(), u2 = uniform();
  while (u1 <= 1e-16) u1 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Vec3 Rng::vec3(double scale) {
  return {scale * normal(), scale * normal(), scale * normal()};
}

Quaternion Rng::unit_quaternion() {
  Quaternion q{normal(), normal(), normal(), normal()};
  while (q.norm() < 1e-6) q = {normal(), normal(), normal(), normal()};
  return q.normalized();
}

}  // namespace repstrata
