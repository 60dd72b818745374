#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "repstrata/rational.hpp"

namespace repstrata {

/// Ordered, named variable set shared by all polynomials of one ring.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of a named variable; throws std::invalid_argument if unknown.
  int index(const std::string& name) const;

  bool operator==(const VarSet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

/// Exact multivariate polynomial over the rationals.  Terms map exponent
/// vectors to nonzero coefficients; the variable set is fixed per ring.
class Poly {
 public:
  using Exponents = std::vector<std::uint32_t>;

  Poly() = default;
  explicit Poly(VarSetPtr vars) : vars_(std::move(vars)) {}

  static Poly constant(VarSetPtr vars, const Rational& c);
  static Poly variable(VarSetPtr vars, int index);
  static Poly variable(VarSetPtr vars, const std::string& name);

  const VarSetPtr& vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& s) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  bool operator==(const Poly& o) const;

  friend Poly operator*(const Rational& s, const Poly& p) { return p * s; }

  /// Formal partial derivative with respect to variable `index`.
  Poly derivative(int index) const;
  Poly derivative(const std::string& name) const;

  /// Exact evaluation at a rational point (one value per variable).
  Rational eval(std::span<const Rational> point) const;
  /// Floating evaluation.
  double eval(std::span<const double> point) const;

  /// Coefficient of a monomial (zero if absent).
  Rational coefficient(const Exponents& e) const;
  void set_coefficient(const Exponents& e, const Rational& c);

  /// Canonical text form: monomials in ascending lexicographic exponent
  /// order, rational coefficients, '*' and '^' separators.  Stable, so it
  /// can be used in golden files.
  std::string to_string() const;

 private:
  void check_compatible(const Poly& o) const;

  VarSetPtr vars_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace repstrata
