#ifndef SJ_RATIONAL_HPP
#define SJ_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace sj {

// Exact rational scalar. Arbitrary-precision integers underneath; always in
// lowest terms with positive denominator (maintained by the backend).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline Rational rational_of(long long num, long long den = 1) {
  if (den == 0) throw parse_error("zero denominator");
  return Rational(num, den);
}

// Parses "p/q" or "n"; whitespace is not accepted.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational literal");
  for (char c : s)
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
      throw parse_error("bad rational literal: " + s);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator: " + s);
    return Rational(num, den);
  } catch (const std::exception&) {
    throw parse_error("bad rational literal: " + s);
  }
}

// Canonical form: "n" for integers, "p/q" otherwise, lowest terms.
inline std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace sj

#endif
