#pragma once

#include "repstrata/polynomial.hpp"

namespace repstrata {

/// Phase space of n particles in R^d with canonical coordinates q_{i,a},
/// p_{i,a}.  The bracket convention is pinned as
///   {f,h} = sum_{i,a} (df/dp_{i,a} dh/dq_{i,a} - df/dq_{i,a} dh/dp_{i,a}),
/// which makes {q,p} = -1.  Every table reported downstream carries this
/// convention.
class PhaseSpace {
 public:
  PhaseSpace(int particles, int dim);

  int particles() const { return n_; }
  int dim() const { return d_; }
  const VarSetPtr& vars() const { return vars_; }

  /// Coordinate polynomials; i in [0,n), a in [0,d).
  Poly q(int i, int a) const;
  Poly p(int i, int a) const;

  int q_index(int i, int a) const;
  int p_index(int i, int a) const;

  Poly zero() const { return Poly(vars_); }
  Poly constant(const Rational& c) const { return Poly::constant(vars_, c); }

  /// Dot product q_i . q_j etc. of two coordinate triples.
  Poly dot_qq(int i, int j) const;
  Poly dot_qp(int i, int j) const;
  Poly dot_pp(int i, int j) const;

  Poly canonical_bracket(const Poly& f, const Poly& h) const;

 private:
  int n_, d_;
  VarSetPtr vars_;
};

}  // namespace repstrata
