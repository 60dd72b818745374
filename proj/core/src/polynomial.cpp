#include "repstrata/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace repstrata {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    if (!index_.emplace(names_[i], i).second)
      throw std::invalid_argument("duplicate variable name: " + names_[i]);
  }
}

int VarSet::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw std::invalid_argument("unknown variable: " + name);
  return it->second;
}

Poly Poly::constant(VarSetPtr vars, const Rational& c) {
  Poly p(std::move(vars));
  if (c != 0) p.terms_.emplace(Exponents(p.vars_->size(), 0), c);
  return p;
}

Poly Poly::variable(VarSetPtr vars, int index) {
  Poly p(std::move(vars));
  if (index < 0 || index >= p.vars_->size())
    throw std::invalid_argument("variable index out of range");
  Exponents e(p.vars_->size(), 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

Poly Poly::variable(VarSetPtr vars, const std::string& name) {
  int i = vars->index(name);
  return variable(std::move(vars), i);
}

void Poly::check_compatible(const Poly& o) const {
  if (!vars_ || !o.vars_ || !(*vars_ == *o.vars_))
    throw std::invalid_argument("polynomials over different variable sets");
}

int Poly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (auto k : e) t += static_cast<int>(k);
    d = std::max(d, t);
  }
  return d;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly& Poly::operator-=(const Poly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_compatible(o);
  Poly r(vars_);
  const int n = vars_->size();
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(n);
      for (int i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_.emplace(std::move(e), ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Poly Poly::operator*(const Rational& s) const {
  Poly r(vars_);
  if (s == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
  return r;
}

bool Poly::operator==(const Poly& o) const {
  return terms_ == o.terms_;
}

Poly Poly::derivative(int index) const {
  if (index < 0 || index >= vars_->size())
    throw std::invalid_argument("derivative: variable index out of range");
  Poly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents d = e;
    d[index] -= 1;
    r.terms_.emplace(std::move(d), c * Rational(e[index]));
  }
  return r;
}

Poly Poly::derivative(const std::string& name) const {
  return derivative(vars_->index(name));
}

Rational Poly::eval(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != vars_->size())
    throw std::invalid_argument("eval: wrong point dimension");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < vars_->size(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

double Poly::eval(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != vars_->size())
    throw std::invalid_argument("eval: wrong point dimension");
  double acc = 0;
  for (const auto& [e, c] : terms_) {
    double t = to_double(c);
    for (int i = 0; i < vars_->size(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

Rational Poly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::set_coefficient(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != vars_->size())
    throw std::invalid_argument("set_coefficient: wrong exponent size");
  if (c == 0)
    terms_.erase(e);
  else
    terms_[e] = c;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool has_var = false;
    for (auto k : e)
      if (k > 0) has_var = true;
    if (mag != 1 || !has_var) out << repstrata::to_string(mag);
    bool printed = (mag != 1 || !has_var);
    for (int i = 0; i < vars_->size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) out << "*";
      out << vars_->name(i);
      if (e[i] > 1) out << "^" << e[i];
      printed = true;
    }
  }
  return out.str();
}

}  // namespace repstrata
