#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qgraph {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact conversion; every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
    return Rational(x);
}

}  // namespace qgraph
