#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cqsf {

// Exact arithmetic everywhere; no floating point in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Canonical form: "3", "-3", "3/7" (lowest terms, denominator > 0).
std::string rat_to_string(const Rat& r);

// Accepts the forms produced by rat_to_string. Throws InvalidInputError.
Rat rat_from_string(const std::string& s);

Int factorial(int n);
Int binomial(int n, int k);

}  // namespace cqsf
