#include "polymux/exact.hpp"

#include <sstream>
#include <utility>

namespace polymux {

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

bool is_integral(const Rational& x) { return denominator(x) == 1; }

Integer to_integer(const Rational& x) {
  if (!is_integral(x)) throw NonIntegral("expected integer, got " + to_string(x));
  return numerator(x);
}

Integer binomial(const Integer& n, const Integer& k) {
  if (k < 0 || n < 0 || k > n) return 0;
  // C(n,k) = prod_{j=1..k} (n-k+j)/j, each prefix is itself a binomial
  // coefficient, so the division below is always exact.
  Integer kk = n - k < k ? n - k : k;
  Integer result = 1;
  for (Integer j = 1; j <= kk; ++j) {
    result *= n - kk + j;
    result /= j;
  }
  return result;
}

Integer binomial(long long n, long long k) { return binomial(Integer(n), Integer(k)); }

Integer factorial(long long n) {
  if (n < 0) throw BadParams("factorial of negative argument");
  Integer result = 1;
  for (long long j = 2; j <= n; ++j) result *= j;
  return result;
}

Integer multinomial(long long n, const std::vector<long long>& parts) {
  long long sum = 0;
  for (long long p : parts) {
    if (p < 0) throw BadParams("multinomial part is negative");
    sum += p;
  }
  if (sum != n) throw BadParams("multinomial parts do not sum to n");
  Integer result = 1;
  long long remaining = n;
  for (long long p : parts) {
    result *= binomial(remaining, p);
    remaining -= p;
  }
  return result;
}

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(const Integer& c) {
  return IntPolynomial(std::vector<Integer>{c});
}

IntPolynomial IntPolynomial::t_minus_one_pow(int k) {
  if (k < 0) throw BadParams("negative exponent");
  std::vector<Integer> c(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    c[static_cast<std::size_t>(j)] = binomial(k, j);
    if ((k - j) % 2 != 0) c[static_cast<std::size_t>(j)] = -c[static_cast<std::size_t>(j)];
  }
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPolynomial::coefficient(int k) const {
  static const Integer zero = 0;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[static_cast<std::size_t>(k)];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<Integer> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j < coeffs_.size()) c[j] += coeffs_[j];
    if (j < o.coeffs_.size()) c[j] += o.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<Integer> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j < coeffs_.size()) c[j] += coeffs_[j];
    if (j < o.coeffs_.size()) c[j] -= o.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial();
  std::vector<Integer> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a)
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) c[a + b] += coeffs_[a] * o.coeffs_[b];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const Integer& k) const {
  std::vector<Integer> c(coeffs_);
  for (auto& x : c) x *= k;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::shifted(int k) const {
  if (k < 0) throw BadParams("negative shift");
  if (is_zero()) return IntPolynomial();
  std::vector<Integer> c(coeffs_.size() + static_cast<std::size_t>(k));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j + static_cast<std::size_t>(k)] = coeffs_[j];
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = coefficient(k);
    if (c == 0) continue;
    if (out.tellp() > 0) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    Integer a = abs(c);
    if (a != 1 || k == 0) out << a.str();
    if (k > 0) out << "t";
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Rational& RationalMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw BadParams("matrix index out of range");
  return data_[r * cols_ + c];
}

const Rational& RationalMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw BadParams("matrix index out of range");
  return data_[r * cols_ + c];
}

std::size_t RationalMatrix::rank() const {
  std::vector<Rational> m(data_);
  auto at = [&](std::size_t r, std::size_t c) -> Rational& { return m[r * cols_ + c]; };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank)
      for (std::size_t c = col; c < cols_; ++c) std::swap(at(pivot, c), at(rank, c));
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (at(r, col) == 0) continue;
      Rational factor = at(r, col) / at(rank, col);
      for (std::size_t c = col; c < cols_; ++c) at(r, c) -= factor * at(rank, c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace polymux
