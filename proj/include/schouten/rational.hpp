#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace schouten {

// Exact arbitrary-precision scalars. cpp_rational keeps values in lowest
// terms with a positive denominator, which is exactly the canonical form
// the rest of the library assumes.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational rational_from_string(const std::string& s) { return Rational(s); }

}  // namespace schouten
