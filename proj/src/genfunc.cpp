#include "indsets/genfunc.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "indsets/errors.hpp"
#include "indsets/transfer.hpp"

namespace indsets {

RationalFunction operator+(const RationalFunction& a,
                           const RationalFunction& b) {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RationalFunction operator-(const RationalFunction& a,
                           const RationalFunction& b) {
  return {a.num * b.den - b.num * a.den, a.den * b.den};
}

RationalFunction operator*(const RationalFunction& a,
                           const RationalFunction& b) {
  return {a.num * b.num, a.den * b.den};
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num * b.den == b.num * a.den;
}

RationalGF::RationalGF(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw InvalidArgument("generating function with zero denominator");
  const IntPolynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  const BigInt joint = boost::multiprecision::gcd(num_.content(), den_.content());
  if (joint > 1) {
    num_ = divide_exact(num_, IntPolynomial::constant(joint));
    den_ = divide_exact(den_, IntPolynomial::constant(joint));
  }
  if (den_[0] < 0) {
    num_ *= BigInt(-1);
    den_ *= BigInt(-1);
  }
  if (den_[0] != 1)
    throw InvalidArgument("denominator constant term is not a unit: " +
                          den_.to_string());
}

std::string RationalGF::to_string() const {
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalGF parse_gf(std::string_view text) {
  const auto split = text.find(")/(");
  if (text.size() < 7 || text.front() != '(' || text.back() != ')' ||
      split == std::string_view::npos)
    throw InvalidArgument("expected \"(<num>)/(<den>)\", got \"" +
                          std::string(text) + "\"");
  return RationalGF(parse_polynomial(text.substr(1, split - 1)),
                    parse_polynomial(text.substr(split + 3,
                                                 text.size() - split - 4)));
}

std::vector<BigInt> series_of(const IntPolynomial& num,
                              const IntPolynomial& den, int n_max) {
  if (den[0] != 1)
    throw InvalidArgument("series expansion needs den(0) = 1, got " +
                          den.to_string());
  std::vector<BigInt> s(n_max + 1);
  for (int k = 0; k <= n_max; ++k) {
    BigInt v = num[k];
    for (int j = 1; j <= std::min(k, den.degree()); ++j)
      v -= den.coeffs()[j] * s[k - j];
    s[k] = std::move(v);
  }
  return s;
}

std::vector<BigInt> series_of(const RationalGF& gf, int n_max) {
  return series_of(gf.num(), gf.den(), n_max);
}

IntPolynomial min_recurrence(std::span<const BigInt> seq) {
  const int len = static_cast<int>(seq.size());
  if (len < 4)
    throw NoCertifiedRecurrence("need at least 4 terms, got " +
                                std::to_string(len));

  // Berlekamp-Massey: c is the current connection polynomial, prev the one
  // before the last length change.
  std::vector<BigRational> c{1}, prev{1};
  int order = 0;
  int shift = 1;
  BigRational prev_disc = 1;
  for (int n = 0; n < len; ++n) {
    BigRational disc = seq[n];
    for (int i = 1; i <= order && i < static_cast<int>(c.size()); ++i)
      disc += c[i] * seq[n - i];
    if (disc == 0) {
      ++shift;
      continue;
    }
    const BigRational factor = disc / prev_disc;
    std::vector<BigRational> next = c;
    if (next.size() < prev.size() + shift) next.resize(prev.size() + shift);
    for (std::size_t i = 0; i < prev.size(); ++i)
      next[i + shift] -= factor * prev[i];
    if (2 * order <= n) {
      prev = std::move(c);
      order = n + 1 - order;
      prev_disc = disc;
      shift = 1;
    } else {
      ++shift;
    }
    c = std::move(next);
  }
  c.resize(order + 1);

  if (len < 2 * order + 2)
    throw NoCertifiedRecurrence(
        "prefix of " + std::to_string(len) + " terms cannot certify order " +
        std::to_string(order) + " (need " + std::to_string(2 * order + 2) +
        ")");
  for (int n = order; n < len; ++n) {
    BigRational acc = 0;
    for (int i = 0; i <= order; ++i) acc += c[i] * seq[n - i];
    if (acc != 0)
      throw NoCertifiedRecurrence("recurrence fails at term " +
                                  std::to_string(n));
  }

  BigInt lcm = 1;
  for (const auto& q : c) {
    const BigInt d = denominator(q);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<BigInt> ints;
  ints.reserve(c.size());
  for (const auto& q : c) ints.push_back(numerator(q) * (lcm / denominator(q)));
  IntPolynomial poly = IntPolynomial(std::move(ints)).primitive_part();
  if (poly[0] < 0) poly *= BigInt(-1);
  return poly;
}

RationalGF gf_from_transfer(Family f, int ell) {
  const std::size_t dim = level_vectors(f, ell).size();
  const int terms = static_cast<int>(2 * dim + 8);
  const std::vector<BigInt> series = count_series(f, ell, terms - 1);
  const IntPolynomial den = min_recurrence(series);
  const IntPolynomial num = (den * IntPolynomial(series)).truncated(terms);
  RationalGF gf(num, den);
  if (series_of(gf, terms - 1) != series)
    throw std::logic_error("reconstructed generating function does not "
                           "reproduce the count series");
  return gf;
}

RationalGF p_gf(int ell) {
  if (ell < 3) throw InvalidSpec("cycle size must be at least 3");
  return RationalGF(IntPolynomial{1, 2}, IntPolynomial{1, -(ell - 1), -2});
}

namespace {

const IntPolynomial kDen4{1, -3, -14, 15, 7};
const IntPolynomial kDen5{1, -5, -30, 69, 31, -22};
const IntPolynomial kDen6{1, -8, -66, 280, 178, -532, -84, 108};

}  // namespace

RationalGF paper_gf(Family f, int ell) {
  if (f == Family::P) return p_gf(ell);
  auto missing = [&]() {
    return NotInTable("no tabulated generating function for family " +
                      std::string(family_name(f)) + ", ell = " +
                      std::to_string(ell));
  };
  switch (f) {
    case Family::G:
    case Family::K:
      if (ell == 3) return RationalGF({1}, {1, -4, 2});
      break;
    case Family::R:
      if (ell == 3) return RationalGF({1, 2}, {1, -2, -2});
      break;
    case Family::P:
      break;
  }
  if (f == Family::G) {
    switch (ell) {
      case 4: return RationalGF({1, 4, -1, -2}, kDen4);
      case 5: return RationalGF(IntPolynomial{1, 1} * IntPolynomial{1, 5, -8}, kDen5);
      case 6: return RationalGF({1, 10, -12, -50, 10, 20, -12}, kDen6);
    }
  } else if (f == Family::R) {
    switch (ell) {
      case 4: return RationalGF({1, 4, -4}, {1, -3, -4, 4});
      case 5: return RationalGF({1, 7, -6}, {1, -4, -8, 6});
      case 6:
        return RationalGF({1, 12, -24, 0, 8},
                          IntPolynomial{1, -8, 4, 4} * IntPolynomial{1, 2, -2});
    }
  } else if (f == Family::K) {
    switch (ell) {
      case 4: return RationalGF({1, 2, 3}, kDen4);
      case 5: return RationalGF({1, 1, 12, -8}, kDen5);
      case 6: return RationalGF({1, -1, 38, -72, -8, 30}, kDen6);
    }
  }
  throw missing();
}

bool verify_p_first_column(int ell) {
  const TransferMatrix p = build_transfer(Family::P, ell);
  const IntPolynomial den{1, -(ell - 1), -2};
  std::vector<RationalFunction> e(p.dim(), RationalFunction{{0, 1}, den});
  e[0] = RationalFunction{{1, -(ell - 2)}, den};

  const IntPolynomial x{0, 1};
  for (std::size_t i = 0; i < p.dim(); ++i) {
    RationalFunction row{{}, {1}};
    for (std::size_t j = 0; j < p.dim(); ++j) {
      IntPolynomial coeff = (i == j) ? IntPolynomial{1} : IntPolynomial{};
      if (p.entry(i, j)) coeff -= x;
      row = row + RationalFunction{coeff, {1}} * e[j];
    }
    const RationalFunction expected{i == 0 ? IntPolynomial{1} : IntPolynomial{},
                                    {1}};
    if (!(row == expected)) return false;
  }

  RationalFunction sum{{}, {1}};
  for (const auto& term : e) sum = sum + term;
  const RationalGF target = p_gf(ell);
  return sum == RationalFunction{target.num(), target.den()};
}

}  // namespace indsets
