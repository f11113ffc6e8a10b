#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mutflow {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

}  // namespace mutflow
