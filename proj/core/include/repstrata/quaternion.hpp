#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace repstrata {

/// Element of su(2) in the basis {e1,e2,e3} of imaginary quaternion units.
/// The bracket is the quaternion commutator, [e_i,e_j] = 2 eps_{ijk} e_k,
/// and the invariant form makes {e1,e2,e3} orthonormal.
struct Vec3 {
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double a, double b, double c) : c1(a), c2(b), c3(c) {}

  Vec3 operator+(const Vec3& o) const { return {c1 + o.c1, c2 + o.c2, c3 + o.c3}; }
  Vec3 operator-(const Vec3& o) const { return {c1 - o.c1, c2 - o.c2, c3 - o.c3}; }
  Vec3 operator-() const { return {-c1, -c2, -c3}; }
  Vec3 operator*(double s) const { return {c1 * s, c2 * s, c3 * s}; }

  double norm() const;
  Eigen::Vector3d as_eigen() const { return {c1, c2, c3}; }
  static Vec3 from_eigen(const Eigen::Vector3d& v) { return {v[0], v[1], v[2]}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Ad-invariant form <u,v> = c1 c1' + c2 c2' + c3 c3'.
double inner(const Vec3& u, const Vec3& v);

Vec3 cross(const Vec3& u, const Vec3& v);

/// Lie bracket [u,v] = uv - vu = 2 u x v.
Vec3 bracket(const Vec3& u, const Vec3& v);

/// Unit quaternion, i.e. an element of SU(2).
struct Quaternion {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion identity() { return {1.0, 0.0, 0.0, 0.0}; }

  Quaternion conjugate() const { return {w, -x, -y, -z}; }
  double norm() const;
  Quaternion normalized() const;
  /// Inverse of a unit quaternion (the conjugate).
  Quaternion inverse() const { return conjugate(); }

  Vec3 imag() const { return {x, y, z}; }
};

/// Hamilton product, renormalized to stay on the unit sphere.
Quaternion group_mul(const Quaternion& a, const Quaternion& b);

/// Raw Hamilton product without renormalization.
Quaternion quat_mul_raw(const Quaternion& a, const Quaternion& b);

/// Euclidean distance |a-b| in R^4; used for residuals and classification.
double quat_distance(const Quaternion& a, const Quaternion& b);

/// Distance to the nearest central element +-1.
double distance_to_center(const Quaternion& g);

/// exp of a pure quaternion: exp(v) = cos|v| + sin|v| v/|v|.
Quaternion exp_map(const Vec3& v);

/// Inverse of exp_map on |v| < pi.  Throws std::domain_error at -identity,
/// where the branch is ambiguous.
Vec3 log_map(const Quaternion& g);

/// Ad(g) v = imaginary part of g v g^-1 (a rotation of the 3-vector).
Vec3 adjoint(const Quaternion& g, const Vec3& v);

/// The 3x3 rotation matrix of Ad(g) in the basis {e1,e2,e3}.
Eigen::Matrix3d adjoint_matrix(const Quaternion& g);

/// Deterministic RNG used throughout.  Wraps mt19937_64 with hand-rolled
/// uniform/normal draws so streams do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0,1).
  double uniform();
  /// Uniform in [lo,hi).
  double uniform(double lo, double hi);
  /// Standard normal via Box-Muller.
  double normal();
  /// Uniform integer in [lo,hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  Vec3 vec3(double scale = 1.0);
  Quaternion unit_quaternion();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace repstrata
