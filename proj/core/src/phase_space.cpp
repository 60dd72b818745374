#include "repstrata/phase_space.hpp"

#include <stdexcept>

namespace repstrata {

namespace {
std::string coord_name(char kind, int i, int a, int n, int d) {
  // Single particle in the plane keeps the classical names q1,q2,p1,p2.
  if (n == 1 && d == 2) return std::string(1, kind) + std::to_string(a + 1);
  return std::string(1, kind) + std::to_string(i + 1) + "_" +
         std::to_string(a + 1);
}
}  // namespace

PhaseSpace::PhaseSpace(int particles, int dim) : n_(particles), d_(dim) {
  if (particles < 1) throw std::invalid_argument("particle count must be >= 1");
  if (dim != 2 && dim != 3)
    throw std::invalid_argument("ambient dimension must be 2 or 3");
  std::vector<std::string> names;
  names.reserve(2 * n_ * d_);
  for (int i = 0; i < n_; ++i)
    for (int a = 0; a < d_; ++a) names.push_back(coord_name('q', i, a, n_, d_));
  for (int i = 0; i < n_; ++i)
    for (int a = 0; a < d_; ++a) names.push_back(coord_name('p', i, a, n_, d_));
  vars_ = std::make_shared<const VarSet>(std::move(names));
}

int PhaseSpace::q_index(int i, int a) const { return i * d_ + a; }
int PhaseSpace::p_index(int i, int a) const { return n_ * d_ + i * d_ + a; }

Poly PhaseSpace::q(int i, int a) const {
  return Poly::variable(vars_, q_index(i, a));
}

Poly PhaseSpace::p(int i, int a) const {
  return Poly::variable(vars_, p_index(i, a));
}

Poly PhaseSpace::dot_qq(int i, int j) const {
  Poly s = zero();
  for (int a = 0; a < d_; ++a) s += q(i, a) * q(j, a);
  return s;
}

Poly PhaseSpace::dot_qp(int i, int j) const {
  Poly s = zero();
  for (int a = 0; a < d_; ++a) s += q(i, a) * p(j, a);
  return s;
}

Poly PhaseSpace::dot_pp(int i, int j) const {
  Poly s = zero();
  for (int a = 0; a < d_; ++a) s += p(i, a) * p(j, a);
  return s;
}

Poly PhaseSpace::canonical_bracket(const Poly& f, const Poly& h) const {
  Poly acc = zero();
  for (int i = 0; i < n_; ++i) {
    for (int a = 0; a < d_; ++a) {
      const int qi = q_index(i, a), pi = p_index(i, a);
      acc += f.derivative(pi) * h.derivative(qi);
      acc -= f.derivative(qi) * h.derivative(pi);
    }
  }
  return acc;
}

}  // namespace repstrata
