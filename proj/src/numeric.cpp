#include "latdef/numeric.hpp"

#include "latdef/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <sstream>

namespace latdef {

Integer dot(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw input_error("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Point add(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw input_error("add: length mismatch");
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point sub(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw input_error("sub: length mismatch");
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Point scaled(const Integer& c, const Point& a) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Point negated(const Point& a) { return scaled(-1, a); }

bool is_zero(const Point& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

int lex_compare(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw input_error("lex_compare: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

bool lex_less(const Point& a, const Point& b) { return lex_compare(a, b) < 0; }

Integer content(const Point& a) {
  Integer g = 0;
  for (const auto& x : a) g = boost::multiprecision::gcd(g, x);
  return g < 0 ? Integer(-g) : g;
}

Point primitive(const Point& a) {
  Integer g = content(a);
  if (g <= 1) return a;
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
  return r;
}

Point primitive_signed(const Point& a) {
  Point r = primitive(a);
  for (const auto& x : r) {
    if (x > 0) return r;
    if (x < 0) return negated(r);
  }
  return r;
}

Integer floor_div(const Integer& p, const Integer& q) {
  if (q == 0) throw input_error("floor_div: zero divisor");
  Integer d = p / q, r = p % q;
  if (r != 0 && ((r < 0) != (q < 0))) d -= 1;
  return d;
}

Integer ceil_div(const Integer& p, const Integer& q) { return -floor_div(-p, q); }

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  // invariant: r0 = x0*a + y0*b and r1 = x1*a + y1*b
  Integer r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer t;
    t = r0 - q * r1; r0 = r1; r1 = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
    t = y0 - q * y1; y0 = y1; y1 = t;
  }
  if (r0 < 0) { r0 = -r0; x0 = -x0; y0 = -y0; }
  return {r0, x0, y0};
}

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer b = 1;
  for (unsigned i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

std::string to_string(const Point& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ", ";
    os << a[i];
  }
  os << ")";
  return os.str();
}

}  // namespace latdef
