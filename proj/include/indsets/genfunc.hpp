#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "indsets/bigint.hpp"
#include "indsets/family.hpp"
#include "indsets/polynomial.hpp"

namespace indsets {

/// Quotient of integer polynomials with ordinary (unnormalized) arithmetic.
/// Equality is cross-multiplication, so it holds for equal functions in any
/// representation.
struct RationalFunction {
  IntPolynomial num;
  IntPolynomial den{1};

  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);
};

/// Generating function num/den in canonical form: num and den are coprime
/// over Q, share no integer content, and den(0) = +1. Two RationalGF values
/// compare equal iff they denote the same power series.
class RationalGF {
 public:
  /// Reduces to canonical form. Throws InvalidArgument when den is zero or
  /// the reduced denominator has constant term other than +-1.
  RationalGF(IntPolynomial num, IntPolynomial den);

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }

  /// "(1+2x)/(1-2x-2x^2)"
  std::string to_string() const;

  friend bool operator==(const RationalGF&, const RationalGF&) = default;

 private:
  IntPolynomial num_;
  IntPolynomial den_;
};

/// Inverse of RationalGF::to_string().
RationalGF parse_gf(std::string_view text);

/// First n_max + 1 power-series coefficients of num/den. Throws
/// InvalidArgument unless den(0) = 1.
std::vector<BigInt> series_of(const IntPolynomial& num,
                              const IntPolynomial& den, int n_max);
std::vector<BigInt> series_of(const RationalGF& gf, int n_max);

/// Characteristic polynomial c(x), c(0) = 1, of the shortest linear
/// recurrence satisfied by the whole prefix, as a primitive integer
/// polynomial. Runs Berlekamp-Massey over exact rationals. Throws
/// NoCertifiedRecurrence when fewer than 4 terms are given or the prefix is
/// shorter than 2 * order + 2.
IntPolynomial min_recurrence(std::span<const BigInt> seq);

/// Generating function of count(f, ell, n) extracted from 2 * dim + 8
/// series terms and certified against all of them.
RationalGF gf_from_transfer(Family f, int ell);

/// Closed-form generating functions from the literature: G, R and K for
/// ell in 3..6, P for every ell >= 3. Throws NotInTable otherwise.
RationalGF paper_gf(Family f, int ell);

/// (1 + 2x) / (1 - (ell - 1)x - 2x^2).
RationalGF p_gf(int ell);

/// Checks the first-column solution of (I - xP) e = (1, 0, ..., 0)^T with
/// e_1 = (1 - (ell-2)x) / D, e_j = x / D, D = 1 - (ell-1)x - 2x^2, and that
/// the e_i sum to p_gf(ell). Exact rational-function arithmetic.
bool verify_p_first_column(int ell);

}  // namespace indsets
