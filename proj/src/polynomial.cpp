#include "indsets/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "indsets/errors.hpp"

namespace indsets {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) {
  return IntPolynomial(std::vector<BigInt>{c});
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

IntPolynomial IntPolynomial::truncated(int n) const {
  if (n >= static_cast<int>(coeffs_.size())) return *this;
  return IntPolynomial(std::vector<BigInt>(coeffs_.begin(),
                                           coeffs_.begin() + std::max(n, 0)));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
  return boost::multiprecision::abs(g);
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  const BigInt c = content();
  std::vector<BigInt> v = coeffs_;
  for (auto& x : v) x /= c;
  return IntPolynomial(std::move(v));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    if (c < 0)
      s += '-';
    else if (!s.empty())
      s += '+';
    const BigInt mag = boost::multiprecision::abs(c);
    if (k == 0 || mag != 1) s += mag.str();
    if (k >= 1) s += var;
    if (k >= 2) s += '^' + std::to_string(k);
  }
  return s;
}

IntPolynomial parse_polynomial(std::string_view text, char var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*') s += ch;
  if (s.empty()) throw InvalidArgument("empty polynomial");

  std::vector<BigInt> coeffs;
  std::size_t pos = 0;
  auto fail = [&](const char* what) {
    throw InvalidArgument(std::string("malformed polynomial \"") +
                          std::string(text) + "\": " + what);
  };
  auto digits = [&]() {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    return s.substr(start, pos - start);
  };
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    const std::string mag = digits();
    BigInt c = mag.empty() ? BigInt(1) : BigInt(mag);
    int degree = 0;
    if (pos < s.size() && s[pos] == var) {
      ++pos;
      degree = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const std::string e = digits();
        if (e.empty() || e.size() > 6) fail("bad exponent");
        degree = std::stoi(e);
      }
    } else if (mag.empty()) {
      fail("expected a coefficient or variable");
    }
    if (static_cast<int>(coeffs.size()) <= degree) coeffs.resize(degree + 1);
    coeffs[degree] += sign * c;
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree())
    throw InvalidArgument("polynomial division is not exact");
  std::vector<BigInt> rem = a.coeffs();
  std::vector<BigInt> quot(a.degree() - b.degree() + 1);
  const BigInt& lead = b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const BigInt& top = rem[k + b.degree()];
    if (top % lead != 0)
      throw InvalidArgument("polynomial division is not exact");
    const BigInt q = top / lead;
    quot[k] = q;
    for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= q * b.coeffs()[j];
  }
  if (!IntPolynomial(std::move(rem)).is_zero())
    throw InvalidArgument("polynomial division is not exact");
  return IntPolynomial(std::move(quot));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  IntPolynomial r = a;
  const BigInt& lead = b.leading();
  int steps = a.degree() - b.degree() + 1;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const IntPolynomial shift =
        IntPolynomial::monomial(r.leading(), r.degree() - b.degree());
    r *= lead;
    r -= shift * b;
    --steps;
  }
  for (; steps > 0; --steps) r *= lead;
  return r;
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.is_zero() && x.leading() < 0) x *= BigInt(-1);
  return x;
}

}  // namespace indsets
