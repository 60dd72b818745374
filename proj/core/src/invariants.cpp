#include "repstrata/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace repstrata {

namespace {

// Vector slot names q1..qn, p1..pn used for dot/det generator labels.
std::string vec_name(int idx, int n) {
  if (idx < n) return "q" + std::to_string(idx + 1);
  return "p" + std::to_string(idx - n + 1);
}

// Coordinate polynomial of plane/space vector `idx`, component a.
Poly vec_coord(const PhaseSpace& space, int idx, int a) {
  const int n = space.particles();
  return idx < n ? space.q(idx, a) : space.p(idx - n, a);
}

Poly dot(const PhaseSpace& space, int i, int j) {
  Poly s = space.zero();
  for (int a = 0; a < space.dim(); ++a)
    s += vec_coord(space, i, a) * vec_coord(space, j, a);
  return s;
}

Poly det2(const PhaseSpace& space, int i, int j) {
  return vec_coord(space, i, 0) * vec_coord(space, j, 1) -
         vec_coord(space, i, 1) * vec_coord(space, j, 0);
}

}  // namespace

InvariantSet planar_invariants(int particles) {
  PhaseSpace space(particles, 2);
  InvariantSet inv{space, "SO(2)", {}, {}, {}, {}};
  if (particles == 1) {
    const Poly qq = space.dot_qq(0, 0), qp = space.dot_qp(0, 0),
               pp = space.dot_pp(0, 0);
    inv.names = {"x1", "x2", "rho"};
    inv.generators = {qq - pp, qp + qp, qq + pp};
    inv.momentum_names = {"mu"};
    inv.momentum = {det2(space, 0, 1)};
    return inv;
  }
  const int m = 2 * particles;
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      inv.names.push_back(vec_name(i, particles) + "." + vec_name(j, particles));
      inv.generators.push_back(dot(space, i, j));
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      inv.names.push_back("det(" + vec_name(i, particles) + "," +
                          vec_name(j, particles) + ")");
      inv.generators.push_back(det2(space, i, j));
    }
  }
  Poly mu = space.zero();
  for (int i = 0; i < particles; ++i) mu += det2(space, i, particles + i);
  inv.momentum_names = {"mu"};
  inv.momentum = {mu};
  return inv;
}

InvariantSet spatial_invariants(int particles) {
  PhaseSpace space(particles, 3);
  InvariantSet inv{space, "O(3)", {}, {}, {}, {}};
  const int m = 2 * particles;
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      inv.names.push_back(vec_name(i, particles) + "." + vec_name(j, particles));
      inv.generators.push_back(dot(space, i, j));
    }
  }
  // Components of sum_i q_i x p_i.
  for (int c = 0; c < 3; ++c) {
    const int a = (c + 1) % 3, b = (c + 2) % 3;
    Poly mu = space.zero();
    for (int i = 0; i < particles; ++i)
      mu += space.q(i, a) * space.p(i, b) - space.q(i, b) * space.p(i, a);
    inv.momentum_names.push_back("mu_" + std::to_string(c + 1));
    inv.momentum.push_back(mu);
  }
  return inv;
}

Poly unitary_moment(const std::vector<std::vector<ComplexRational>>& xi,
                    const PhaseSpace& space) {
  const int m = space.particles() * space.dim();
  if (static_cast<int>(xi.size()) != m)
    throw std::invalid_argument("unitary_moment: matrix size != slot count");
  for (const auto& row : xi)
    if (static_cast<int>(row.size()) != m)
      throw std::invalid_argument("unitary_moment: matrix not square");
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k)
      if (xi[j][k].re != -xi[k][j].re || xi[j][k].im != xi[k][j].im)
        throw std::invalid_argument("unitary_moment: matrix not skew-hermitian");

  auto slot_q = [&](int s) { return space.q(s / space.dim(), s % space.dim()); };
  auto slot_p = [&](int s) { return space.p(s / space.dim(), s % space.dim()); };

  Poly real = space.zero(), imag = space.zero();
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) {
      const Rational& a = xi[j][k].re;
      const Rational& b = xi[j][k].im;
      if (a == 0 && b == 0) continue;
      // conj(z_j) z_k = X + iY with X = qj qk + pj pk, Y = qj pk - pj qk.
      const Poly X = slot_q(j) * slot_q(k) + slot_p(j) * slot_p(k);
      const Poly Y = slot_q(j) * slot_p(k) - slot_p(j) * slot_q(k);
      // (i/2)(a + ib)(X + iY)
      real += (X * (-b) - Y * a) * Rational(1, 2);
      imag += (X * a - Y * b) * Rational(1, 2);
    }
  }
  if (!imag.is_zero())
    throw std::logic_error("unitary_moment: residual imaginary part");
  return real;
}

RationalMatrix4 sp4_form() {
  RationalMatrix4 j{};
  j[0][2] = 1;
  j[1][3] = 1;
  j[2][0] = -1;
  j[3][1] = -1;
  return j;
}

RationalVec3 angular_momentum(const SpatialConfig& c) {
  auto cross3 = [](const RationalVec3& u, const RationalVec3& v) {
    return RationalVec3{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                        u[0] * v[1] - u[1] * v[0]};
  };
  const RationalVec3 a = cross3(c.q1, c.p1), b = cross3(c.q2, c.p2);
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

RationalMatrix4 rmat_mul(const RationalMatrix4& a, const RationalMatrix4& b) {
  RationalMatrix4 r{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

bool is_zero(const RationalMatrix4& m) {
  for (const auto& row : m)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

RationalMatrix4 symplectic_defect(const RationalMatrix4& m) {
  const RationalMatrix4 j = sp4_form();
  RationalMatrix4 mt{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) mt[i][k] = m[k][i];
  const RationalMatrix4 a = rmat_mul(mt, j), b = rmat_mul(j, m);
  RationalMatrix4 r{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) r[i][k] = a[i][k] + b[i][k];
  return r;
}

int rmat_rank(const RationalMatrix4& m) {
  RationalMatrix4 a = m;
  int rank = 0;
  for (int col = 0; col < 4 && rank < 4; ++col) {
    int pivot = -1;
    for (int r = rank; r < 4; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    for (int r = 0; r < 4; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[rank][col];
      for (int c2 = 0; c2 < 4; ++c2) a[r][c2] -= f * a[rank][c2];
    }
    ++rank;
  }
  return rank;
}

RationalMatrix4 sp4_moment(const SpatialConfig& config) {
  const std::array<const RationalVec3*, 4> rows{&config.q1, &config.q2,
                                                &config.p1, &config.p2};
  RationalMatrix4 gram{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int a = 0; a < 3; ++a) gram[i][j] += (*rows[i])[a] * (*rows[j])[a];
  const RationalMatrix4 j = sp4_form();
  RationalMatrix4 m = rmat_mul(gram, j);
  for (auto& row : m)
    for (auto& v : row) v /= 2;
  return m;
}

Eigen::Matrix4d sp4_moment(const Eigen::Matrix<double, 4, 3>& config) {
  Eigen::Matrix4d j = Eigen::Matrix4d::Zero();
  j(0, 2) = 1;
  j(1, 3) = 1;
  j(2, 0) = -1;
  j(3, 1) = -1;
  const Eigen::Matrix4d gram = config * config.transpose();
  Eigen::Matrix4d m = gram * j;
  m *= 0.5;
  return m;
}

std::optional<std::vector<Rational>> express_in_span(
    const std::vector<Poly>& gens, const Poly& target) {
  // Index every monomial that occurs.
  std::map<Poly::Exponents, int> mono;
  auto note = [&](const Poly& p) {
    for (const auto& [e, c] : p.terms())
      if (!mono.count(e)) mono.emplace(e, static_cast<int>(mono.size()));
  };
  for (const auto& g : gens) note(g);
  note(target);

  const int rows = static_cast<int>(mono.size());
  const int cols = static_cast<int>(gens.size());
  std::vector<std::vector<Rational>> a(rows,
                                       std::vector<Rational>(cols + 1, 0));
  for (int g = 0; g < cols; ++g)
    for (const auto& [e, c] : gens[g].terms()) a[mono.at(e)][g] = c;
  for (const auto& [e, c] : target.terms()) a[mono.at(e)][cols] = c;

  // Exact Gaussian elimination on [A | b].
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[rank][col];
      for (int c2 = col; c2 <= cols; ++c2) a[r][c2] -= f * a[rank][c2];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (int r = rank; r < rows; ++r)
    if (a[r][cols] != 0) return std::nullopt;

  std::vector<Rational> x(cols, 0);
  for (int r = 0; r < rank; ++r) x[pivot_col[r]] = a[r][cols] / a[r][pivot_col[r]];
  return x;
}

StructureConstants closure_to_lie_algebra(const PhaseSpace& space,
                                          const std::vector<std::string>& names,
                                          const std::vector<Poly>& gens) {
  const int n = static_cast<int>(gens.size());
  StructureConstants sc;
  sc.names = names;
  sc.c.assign(n, std::vector<std::vector<Rational>>(
                     n, std::vector<Rational>(n, Rational(0))));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Poly br = space.canonical_bracket(gens[i], gens[j]);
      auto coeffs = express_in_span(gens, br);
      if (!coeffs) throw NonClosureError(names[i], names[j]);
      for (int k = 0; k < n; ++k) {
        sc.c[i][j][k] = (*coeffs)[k];
        sc.c[j][i][k] = -(*coeffs)[k];
      }
    }
  }
  return sc;
}

StructureConstants closure_to_lie_algebra(const InvariantSet& inv) {
  return closure_to_lie_algebra(inv.space, inv.names, inv.generators);
}

bool StructureConstants::antisymmetric() const {
  const int n = dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (c[i][j][k] != -c[j][i][k]) return false;
  return true;
}

bool StructureConstants::jacobi() const {
  const int n = dim();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          Rational s = 0;
          for (int m = 0; m < n; ++m)
            s += c[i][j][m] * c[m][k][l] + c[j][k][m] * c[m][i][l] +
                 c[k][i][m] * c[m][j][l];
          if (s != 0) return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<Rational>> StructureConstants::killing_matrix() const {
  const int n = dim();
  std::vector<std::vector<Rational>> k(n, std::vector<Rational>(n, Rational(0)));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      Rational s = 0;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) s += c[a][x][y] * c[b][y][x];
      k[a][b] = s;
      k[b][a] = s;
    }
  return k;
}

std::pair<int, int> StructureConstants::killing_signature(double tol) const {
  const auto k = killing_matrix();
  const int n = dim();
  Eigen::MatrixXd kd(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) kd(i, j) = to_double(k[i][j]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(kd);
  const double scale = es.eigenvalues().cwiseAbs().maxCoeff();
  int pos = 0, neg = 0;
  for (int i = 0; i < n; ++i) {
    if (es.eigenvalues()(i) > tol * scale) ++pos;
    if (es.eigenvalues()(i) < -tol * scale) ++neg;
  }
  return {pos, neg};
}

BracketTable bracket_table(const InvariantSet& inv) {
  const int n = static_cast<int>(inv.generators.size());
  BracketTable t;
  t.names = inv.names;
  t.generator_vars = std::make_shared<const VarSet>(inv.names);
  t.ambient.assign(n, std::vector<Poly>(n, inv.space.zero()));
  t.in_generators.assign(n, std::vector<std::optional<Poly>>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      t.ambient[i][j] =
          inv.space.canonical_bracket(inv.generators[i], inv.generators[j]);
      auto coeffs = express_in_span(inv.generators, t.ambient[i][j]);
      if (coeffs) {
        Poly expr(t.generator_vars);
        for (int k = 0; k < n; ++k)
          if ((*coeffs)[k] != 0)
            expr += Poly::variable(t.generator_vars, k) * (*coeffs)[k];
        t.in_generators[i][j] = expr;
      }
    }
  }
  return t;
}

PlanarInvariantValues planar_invariant_values(const PlanarZeroSample& s) {
  const Rational qq = s.q[0] * s.q[0] + s.q[1] * s.q[1];
  const Rational pp = s.p[0] * s.p[0] + s.p[1] * s.p[1];
  const Rational qp = s.q[0] * s.p[0] + s.q[1] * s.p[1];
  return {qq - pp, qp + qp, qq + pp};
}

PlanarZeroSample sample_planar_zero_locus(Rng& rng) {
  const int mode = static_cast<int>(rng.uniform_int(0, 9));
  auto small = [&](int lo, int hi) { return Rational(rng.uniform_int(lo, hi)); };
  PlanarZeroSample s{};
  if (mode == 0) {  // q = 0
    s.p = {small(-5, 5), small(-5, 5)};
    return s;
  }
  if (mode == 1) {  // p = 0
    s.q = {small(-5, 5), small(-5, 5)};
    return s;
  }
  s.q = {small(-5, 5), small(-5, 5)};
  const Rational t(rng.uniform_int(-6, 6), rng.uniform_int(1, 4));
  s.p = {t * s.q[0], t * s.q[1]};
  return s;
}

PlanarZeroSample rotate_exact(const PlanarZeroSample& s, const Rational& t) {
  const Rational den = 1 + t * t;
  const Rational c = (1 - t * t) / den, sn = (t + t) / den;
  auto rot = [&](const std::array<Rational, 2>& v) {
    return std::array<Rational, 2>{c * v[0] - sn * v[1], sn * v[0] + c * v[1]};
  };
  return {rot(s.q), rot(s.p)};
}

std::optional<double> rotation_between(const PlanarZeroSample& a,
                                       const PlanarZeroSample& b, double tol) {
  const auto ia = planar_invariant_values(a), ib = planar_invariant_values(b);
  if (std::abs(to_double(ia.x1 - ib.x1)) > tol ||
      std::abs(to_double(ia.x2 - ib.x2)) > tol)
    return std::nullopt;

  auto as_xy = [](const std::array<Rational, 2>& v) {
    return std::array<double, 2>{to_double(v[0]), to_double(v[1])};
  };
  const auto qa = as_xy(a.q), pa = as_xy(a.p), qb = as_xy(b.q), pb = as_xy(b.p);
  const double qn = std::hypot(qa[0], qa[1]), pn = std::hypot(pa[0], pa[1]);

  double angle = 0.0;
  if (qn > pn && qn > 0)
    angle = std::atan2(qb[1], qb[0]) - std::atan2(qa[1], qa[0]);
  else if (pn > 0)
    angle = std::atan2(pb[1], pb[0]) - std::atan2(pa[1], pa[0]);

  const double c = std::cos(angle), s = std::sin(angle);
  auto err = [&](const std::array<double, 2>& u, const std::array<double, 2>& v) {
    return std::max(std::abs(c * u[0] - s * u[1] - v[0]),
                    std::abs(s * u[0] + c * u[1] - v[1]));
  };
  return std::max(err(qa, qb), err(pa, pb));
}

KempfNessReport kempf_ness_check(int pairs, std::uint64_t seed) {
  Rng rng(seed);
  KempfNessReport rep;
  rep.pairs = pairs;
  rep.rho_identity_exact = true;
  bool all_found = true;
  for (int i = 0; i < pairs; ++i) {
    const PlanarZeroSample a = sample_planar_zero_locus(rng);
    const Rational t(rng.uniform_int(-8, 8), rng.uniform_int(1, 5));
    const PlanarZeroSample b = rotate_exact(a, t);
    const auto iv = planar_invariant_values(a);
    if (iv.rho * iv.rho != iv.x1 * iv.x1 + iv.x2 * iv.x2)
      rep.rho_identity_exact = false;
    const auto e = rotation_between(a, b);
    if (!e)
      all_found = false;
    else
      rep.max_rotation_error = std::max(rep.max_rotation_error, *e);
  }
  rep.ok = all_found && rep.rho_identity_exact && rep.max_rotation_error <= 1e-9;
  return rep;
}

}  // namespace repstrata
