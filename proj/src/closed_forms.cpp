#include "indsets/closed_forms.hpp"

#include <stdexcept>
#include <string>

#include "indsets/errors.hpp"

namespace indsets {

namespace {

void require_nonnegative(int n) {
  if (n < 0) throw InvalidArgument("index must be nonnegative");
}

}  // namespace

QuadIrrational QuadIrrational::pow(unsigned e) const {
  QuadIrrational result{1, 0};
  QuadIrrational base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

BigInt g3_closed_form(int n) {
  require_nonnegative(n);
  const unsigned e = static_cast<unsigned>(n) + 1;
  const QuadIrrational diff =
      QuadIrrational{2, 1}.pow(e) - QuadIrrational{2, -1}.pow(e);
  // diff = 2 b sqrt2, so dividing by 2 sqrt2 leaves b.
  const BigRational value = diff.b / 2;
  if (diff.a != 0 || denominator(value) != 1)
    throw std::logic_error("closed form did not produce an integer");
  return numerator(value);
}

BigInt g3_via_eq1(int n) {
  require_nonnegative(n);
  BigInt g0 = 1, g1 = 4, g2 = 14;
  if (n == 0) return g0;
  if (n == 1) return g1;
  for (int k = 3; k <= n; ++k) {
    BigInt next = 2 * g2 + 6 * g1 - 4 * g0;
    g0 = std::move(g1);
    g1 = std::move(g2);
    g2 = std::move(next);
  }
  return g2;
}

BigInt g3_via_eq2(int n) {
  require_nonnegative(n);
  BigInt g0 = 1, g1 = 4;
  if (n == 0) return g0;
  for (int k = 2; k <= n; ++k) {
    BigInt next = 4 * g1 - 2 * g0;
    g0 = std::move(g1);
    g1 = std::move(next);
  }
  return g1;
}

Aux3State Aux3State::next() const {
  Aux3State s;
  s.n = n + 1;
  s.a = g_prev2 + a;
  s.b = g_prev2;
  s.c = g_prev2;
  s.g_prev = g_prev + 3 * s.a + 3 * s.b + s.c;
  s.g_prev2 = g_prev;
  return s;
}

BigInt g3_via_aux(int n) {
  require_nonnegative(n);
  if (n == 0) return 1;
  Aux3State s;
  while (s.n < n) s = s.next();
  return s.g_prev;
}

BigInt pell(int n) {
  require_nonnegative(n);
  BigInt p0 = 0, p1 = 1;
  for (int k = 0; k < n; ++k) {
    BigInt next = 2 * p1 + p0;
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  return p0;
}

BigInt lucas(int n) {
  require_nonnegative(n);
  BigInt l0 = 2, l1 = 1;
  for (int k = 0; k < n; ++k) {
    BigInt next = l1 + l0;
    l0 = std::move(l1);
    l1 = std::move(next);
  }
  return l0;
}

std::vector<BigInt> binomial_transform(std::span<const BigInt> seq) {
  std::vector<BigInt> out;
  out.reserve(seq.size());
  std::vector<BigInt> row{1};
  for (std::size_t m = 0; m < seq.size(); ++m) {
    BigInt sum = 0;
    for (std::size_t k = 0; k <= m; ++k) sum += row[k] * seq[k];
    out.push_back(std::move(sum));
    std::vector<BigInt> next(row.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t k = 1; k < row.size(); ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  return out;
}

}  // namespace indsets
