#ifndef POLYMUX_EXACT_HPP
#define POLYMUX_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "polymux/errors.hpp"

namespace polymux {

/**
 * Arbitrary-precision exact arithmetic used everywhere in the library.
 * No floating point is allowed anywhere in face counting.
 *
 * Rational is always kept in lowest terms with a positive denominator;
 * that is guaranteed by the backend and re-checked in the test suite.
 */
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Decimal rendering. Rationals print as "p/q", or just "p" when q == 1.
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// True iff x has denominator 1.
bool is_integral(const Rational& x);

/// Numerator of an integral rational. Throws NonIntegral otherwise.
Integer to_integer(const Rational& x);

/**
 * Binomial coefficient with the zero-extension convention used throughout:
 * C(n,k) = 0 whenever k < 0, k > n, or n < 0. In particular C(0,0) = 1
 * and C(-1,0) = 0.
 */
Integer binomial(const Integer& n, const Integer& k);
Integer binomial(long long n, long long k);

/**
 * Multinomial coefficient n! / (parts[0]! * ... * parts[r-1]!).
 * Parts must be nonnegative and sum to n, otherwise BadParams.
 */
Integer multinomial(long long n, const std::vector<long long>& parts);

/// n! for n >= 0, BadParams for negative n.
Integer factorial(long long n);

/**
 * Dense univariate polynomial with Integer coefficients, index = power of t.
 * The zero polynomial is stored with an empty coefficient vector; all other
 * representations are trimmed so the leading coefficient is nonzero.
 */
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  static IntPolynomial constant(const Integer& c);
  /// (t - 1)^k expanded by the binomial theorem, k >= 0.
  static IntPolynomial t_minus_one_pow(int k);

  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of t^k; zero outside the stored range.
  const Integer& coefficient(int k) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator*(const Integer& c) const;
  /// Multiply by t^k (shift coefficients up).
  IntPolynomial shifted(int k) const;
  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

  std::string str() const;

 private:
  std::vector<Integer> coeffs_;
  void trim();
};

/**
 * Dense matrix of rationals supporting exact rank computation.
 * Row and column counts are fixed at construction.
 */
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c);
  const Rational& at(std::size_t r, std::size_t c) const;

  /// Rank over the rationals by exact Gaussian elimination.
  std::size_t rank() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

}  // namespace polymux

#endif
