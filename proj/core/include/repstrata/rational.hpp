#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace repstrata {

/// Exact rational scalar.  All symbolic identities are carried over Q.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace repstrata
