#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace skeinforge {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Malformed input text, bad flags, unsupported parameters.  CLI exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Failures inside a computation (memo capacity, empty link, division by
// zero during evaluation).  CLI exit code 3.
struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

}  // namespace skeinforge
