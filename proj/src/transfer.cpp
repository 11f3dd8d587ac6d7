#include "indsets/transfer.hpp"

#include <string>

#include "indsets/errors.hpp"

namespace indsets {

TransferMatrix::TransferMatrix(Family f, int ell)
    : family_(f), ell_(ell), order_(level_vectors(f, ell)) {}

int TransferMatrix::entry(std::size_t row, std::size_t col) const {
  return compatible(order_.at(row), order_.at(col)) ? 1 : 0;
}

std::vector<std::vector<int>> TransferMatrix::dense() const {
  if (dim() > 4096)
    throw ResourceError("dense transfer matrix too large: dim " +
                        std::to_string(dim()));
  std::vector<std::vector<int>> m(dim(), std::vector<int>(dim()));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) m[i][j] = entry(i, j);
  return m;
}

std::vector<BigInt> TransferMatrix::apply(std::span<const BigInt> x) const {
  if (x.size() != dim())
    throw InvalidArgument("vector length does not match transfer matrix");
  return family_ == Family::P ? apply_rows(x) : apply_subset_sum(x);
}

std::vector<BigInt> TransferMatrix::apply_rows(
    std::span<const BigInt> x) const {
  std::vector<BigInt> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    const std::uint32_t blocked = blocked_mask(ell_, order_[i].code());
    for (std::size_t j = 0; j < dim(); ++j)
      if ((blocked & order_[j].code()) == 0) out[i] += x[j];
  }
  return out;
}

// (Mx)_v is the sum of x_w over all w inside the complement of v's blocked
// positions, i.e. a subset sum over the cube of codes.
std::vector<BigInt> TransferMatrix::apply_subset_sum(
    std::span<const BigInt> x) const {
  const std::uint32_t size = 1u << ell_;
  const std::uint32_t full = size - 1;
  std::vector<BigInt> cube(size);
  for (std::size_t i = 0; i < dim(); ++i) cube[order_[i].code()] = x[i];
  for (int b = 0; b < ell_; ++b) {
    const std::uint32_t bit = 1u << b;
    for (std::uint32_t m = 0; m < size; ++m)
      if (m & bit) cube[m] += cube[m ^ bit];
  }
  std::vector<BigInt> out(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    out[i] = cube[full & ~blocked_mask(ell_, order_[i].code())];
  return out;
}

TransferMatrix build_transfer(Family f, int ell) {
  return TransferMatrix(f, ell);
}

std::vector<BigInt> count_series(Family f, int ell, int n_max) {
  if (n_max < 0) throw InvalidArgument("n_max must be nonnegative");
  const TransferMatrix m(f, ell);
  std::vector<BigInt> state;
  state.reserve(m.dim());
  for (const auto& v : m.index_order()) state.emplace_back(accepts(f, v) ? 1 : 0);

  std::vector<BigInt> out;
  out.reserve(n_max + 1);
  out.push_back(state.front());
  for (int n = 1; n <= n_max; ++n) {
    state = m.apply(state);
    out.push_back(state.front());
  }
  return out;
}

BigInt count(const FamilySpec& spec) {
  spec.validate();
  return count_series(spec.family, spec.ell, spec.n).back();
}

}  // namespace indsets
