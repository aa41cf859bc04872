#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace latdef {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A lattice point; its length is the ambient dimension of whatever owns it.
using Point = std::vector<Integer>;

Integer dot(const Point& a, const Point& b);
Point add(const Point& a, const Point& b);
Point sub(const Point& a, const Point& b);
Point scaled(const Integer& c, const Point& a);
Point negated(const Point& a);
bool is_zero(const Point& a);

int lex_compare(const Point& a, const Point& b);
bool lex_less(const Point& a, const Point& b);

// gcd of absolute values of the entries; 0 for the zero vector
Integer content(const Point& a);
// entries divided by the content; the zero vector is returned unchanged
Point primitive(const Point& a);
// primitive with the first nonzero entry positive, so that {w, -w} collapse
Point primitive_signed(const Point& a);

// round toward minus / plus infinity; q must be nonzero
Integer floor_div(const Integer& p, const Integer& q);
Integer ceil_div(const Integer& p, const Integer& q);

// g = gcd(a, b) >= 0 together with x, y such that a*x + b*y = g
struct ExtendedGcd {
  Integer g, x, y;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

std::string to_string(const Point& a);

}  // namespace latdef
