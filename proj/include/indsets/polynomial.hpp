#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "indsets/bigint.hpp"

namespace indsets {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients; coefficient k multiplies x^k. Trailing zeros are always
/// stripped, so the zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k; zero past the degree.
  BigInt operator[](int k) const;
  const BigInt& leading() const { return coeffs_.back(); }

  /// Remainder modulo x^n.
  IntPolynomial truncated(int n) const;
  /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  BigInt content() const;
  IntPolynomial primitive_part() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const BigInt& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    return a += b;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    return a -= b;
  }
  friend IntPolynomial operator-(IntPolynomial a) {
    a *= BigInt(-1);
    return a;
  }
  friend IntPolynomial operator*(const IntPolynomial& a,
                                 const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) {
    return a *= c;
  }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Human form with increasing powers: "1-4x+2x^2". Zero prints as "0".
  std::string to_string(std::string_view var = "x") const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// Parses the to_string() form. Throws InvalidArgument on malformed input.
IntPolynomial parse_polynomial(std::string_view text, char var = 'x');

/// Exact quotient a / b in Z[x]; throws InvalidArgument if b does not divide
/// a with integer quotient.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Pseudo-remainder of a by b: the remainder of lc(b)^(deg a - deg b + 1) * a.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd over Q[x] (equivalently Z[x] up to content), with positive
/// leading coefficient. gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace indsets
