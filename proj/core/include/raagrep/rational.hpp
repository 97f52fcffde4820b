#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace raagrep {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign_of(const Rational& q) { return q.sign(); }

bool is_prime(const Integer& n);

/// Decompose x > 0 as s^2 * p_1 * ... * p_m with distinct primes p_i.
/// Returns (s, sorted prime list). Throws NonFactorable when a composite
/// cofactor survives trial division and primality testing.
std::pair<Integer, std::vector<Integer>> squarefree_decompose(Integer x);

Integer parse_integer(const std::string& text);
Rational parse_rational(const std::string& text); // "num" or "num/den"

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

} // namespace raagrep
