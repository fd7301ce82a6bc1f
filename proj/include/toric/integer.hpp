#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace toric {

/// Arbitrary-precision integer used for every quantity in the library.
using Integer = boost::multiprecision::cpp_int;

/// A point of M or N, always in the standard basis of Z^n.
using LatticeVector = std::vector<Integer>;

Integer dot(const LatticeVector& a, const LatticeVector& b);

LatticeVector add(const LatticeVector& a, const LatticeVector& b);
LatticeVector subtract(const LatticeVector& a, const LatticeVector& b);
LatticeVector negate(const LatticeVector& a);
LatticeVector scale(const Integer& s, const LatticeVector& a);

bool is_zero(const LatticeVector& v);

/// Nonnegative gcd of all entries (0 for the zero vector).
Integer content(const LatticeVector& v);

/// v / gcd(v). Throws InvalidArgument for the zero vector.
LatticeVector primitive_vector(const LatticeVector& v);

/// Floor and ceiling of a / b for b != 0.
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

int sign(const Integer& x);

LatticeVector make_vector(std::initializer_list<std::int64_t> entries);

/// "(a,b,c)"
std::string to_string(const LatticeVector& v);

} // namespace toric
