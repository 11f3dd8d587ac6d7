#pragma once

#include <span>
#include <vector>

#include "indsets/bigint.hpp"

namespace indsets {

/// Exact a + b*sqrt(2) over the rationals.
struct QuadIrrational {
  BigRational a;
  BigRational b;

  friend QuadIrrational operator+(const QuadIrrational& x,
                                  const QuadIrrational& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend QuadIrrational operator-(const QuadIrrational& x,
                                  const QuadIrrational& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend QuadIrrational operator*(const QuadIrrational& x,
                                  const QuadIrrational& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const QuadIrrational&,
                         const QuadIrrational&) = default;

  QuadIrrational pow(unsigned e) const;
};

/// g_3(n) from ((2+sqrt2)^(n+1) - (2-sqrt2)^(n+1)) / (2 sqrt2).
BigInt g3_closed_form(int n);
/// g(n) = 2g(n-1) + 6g(n-2) - 4g(n-3), seeds 1, 4, 14.
BigInt g3_via_eq1(int n);
/// g(n) = 4g(n-1) - 2g(n-2), seeds 1, 4.
BigInt g3_via_eq2(int n);

/// Running state of the outer-triangle decomposition
/// g(n) = g(n-1) + 3a_n + 3b_n + c_n, a_n = g(n-2) + a_{n-1},
/// b_n = c_n = g(n-2).
struct Aux3State {
  int n = 1;
  BigInt a = 1;  // one outer vertex chosen
  BigInt b = 0;  // two outer vertices
  BigInt c = 0;  // all three
  BigInt g_prev = 4;   // g(n)
  BigInt g_prev2 = 1;  // g(n-1)

  Aux3State next() const;
};

BigInt g3_via_aux(int n);

/// P_0 = 0, P_1 = 1, P_m = 2P_{m-1} + P_{m-2}.
BigInt pell(int n);
/// L_0 = 2, L_1 = 1, L_2 = 3, L_m = L_{m-1} + L_{m-2}.
BigInt lucas(int n);
/// b_m = sum_k C(m, k) s_k.
std::vector<BigInt> binomial_transform(std::span<const BigInt> seq);

}  // namespace indsets
