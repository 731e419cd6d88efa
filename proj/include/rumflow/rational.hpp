#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace rumflow {

// Exact rational scalar. Every probability, polynomial value and flow in this
// library is a Rational; no floating point is used anywhere in the core.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Lowest-terms rendering: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

}  // namespace rumflow
