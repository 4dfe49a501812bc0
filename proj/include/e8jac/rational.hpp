#ifndef E8JAC_RATIONAL_HPP
#define E8JAC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace e8jac {

/// Exact rational number. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact division would have produced a pole (or a non-integral quotient).
class NotDivisibleError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured element budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

/// A truncated expansion is too short for the requested operation.
class InsufficientOrderError : public Error {
 public:
  InsufficientOrderError(const std::string& what, int required)
      : Error(what), required_(required) {}
  int required() const noexcept { return required_; }

 private:
  int required_;
};

/// n/d in lowest terms. (Constructing mpq_class from two integers does not
/// reduce, so every two-argument construction goes through here.)
inline Rational ratio(const Integer& n, const Integer& d) {
  if (d == 0) throw std::domain_error("zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline Rational ratio(long n, long d) { return ratio(Integer(n), Integer(d)); }

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (s.front() == '+') s.erase(s.begin());
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + std::string(text));
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  r.canonicalize();
  return r;
}

/// True if r is stored canonically (re-reduction leaves it unchanged).
inline bool is_canonical(const Rational& r) {
  if (sgn(r.get_den()) <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return g == 1;
}

inline Rational pow_rational(const Rational& base, long exponent) {
  Rational result = 1;
  Rational b = exponent >= 0 ? base : Rational(1) / base;
  unsigned long e = exponent >= 0 ? static_cast<unsigned long>(exponent)
                                  : static_cast<unsigned long>(-exponent);
  while (e > 0) {
    if (e & 1UL) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

}  // namespace e8jac

#endif  // E8JAC_RATIONAL_HPP
