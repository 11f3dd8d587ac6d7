#pragma once

#include <span>
#include <vector>

#include "indsets/bigint.hpp"
#include "indsets/family.hpp"

namespace indsets {

/// 0/1 transfer matrix over the ordered level-vector collection of a family.
/// Entry (v, w) is compatible(v, w). Entries are evaluated on demand; the
/// matrix-vector product uses a subset-sum transform over the 2^ell cube for
/// G, K and R, so the dense matrix is never materialized.
class TransferMatrix {
 public:
  /// Throws ResourceError when ell exceeds max_ell(f), InvalidSpec when
  /// ell < 3.
  TransferMatrix(Family f, int ell);

  Family family() const { return family_; }
  int ell() const { return ell_; }
  std::size_t dim() const { return order_.size(); }
  const std::vector<LevelVector>& index_order() const { return order_; }

  int entry(std::size_t row, std::size_t col) const;
  /// Dense copy, for inspection of small matrices.
  std::vector<std::vector<int>> dense() const;

  /// Returns M * x.
  std::vector<BigInt> apply(std::span<const BigInt> x) const;

 private:
  std::vector<BigInt> apply_subset_sum(std::span<const BigInt> x) const;
  std::vector<BigInt> apply_rows(std::span<const BigInt> x) const;

  Family family_;
  int ell_;
  std::vector<LevelVector> order_;
};

TransferMatrix build_transfer(Family f, int ell);

/// Number of independent sets: first entry of M^n u.
BigInt count(const FamilySpec& spec);

/// [count(0), ..., count(n_max)] from a single sweep of iterates.
std::vector<BigInt> count_series(Family f, int ell, int n_max);

}  // namespace indsets
