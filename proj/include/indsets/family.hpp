#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace indsets {

/// The four graph families: G (iterated line graphs of a cycle), R (G with
/// the base cycle doubled), K (complete-graph base) and P (K with the base
/// cycle doubled).
enum class Family { G, R, K, P };

inline constexpr Family kAllFamilies[] = {Family::G, Family::R, Family::K,
                                          Family::P};

/// Lower-case single letter: "g", "r", "k", "p".
std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Largest supported cycle size for a family's level-vector collection.
/// G and K enumerate all 2^ell vectors; R and P collections are much smaller.
int max_ell(Family f);

struct FamilySpec {
  Family family;
  int ell;  ///< cycle size, >= 3
  int n;    ///< number of levels, >= 0 (0 is the empty graph)

  /// Throws InvalidSpec when ell < 3 or n < 0.
  void validate() const;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// A cyclic 0/1 vector of length ell. Stored as an integer whose binary
/// digits, most significant first, are (v_1, ..., v_ell); position p is
/// 0-based, so v_{p+1} is bit (ell - 1 - p).
class LevelVector {
 public:
  LevelVector(int ell, std::uint32_t code);
  static LevelVector from_bits(const std::vector<int>& bits);

  int ell() const { return ell_; }
  std::uint32_t code() const { return code_; }
  /// Value at 0-based position p, taken cyclically.
  int at(int p) const;
  int popcount() const;
  bool has_adjacent_ones() const;
  std::vector<int> bits() const;
  std::string to_string() const;  // "(0,1,0)"

  friend bool operator==(const LevelVector&, const LevelVector&) = default;

 private:
  int ell_;
  std::uint32_t code_;
};

/// Mask (same bit convention as LevelVector::code) of the positions i that a
/// following level must leave empty: v_i = 1 or v_{i+1} = 1.
std::uint32_t blocked_mask(int ell, std::uint32_t code);

/// Ordered collection of admissible level vectors, ascending by code; the
/// zero vector is always first.
std::vector<LevelVector> level_vectors(Family f, int ell);

/// Whether w may follow v (v outer, w inner): for every i,
/// (v_i = v_{i+1} = 0) or w_i = 0, with v_{ell+1} = v_1.
bool compatible(const LevelVector& v, const LevelVector& w);

/// Innermost-level predicate of a family.
bool accepts(Family f, const LevelVector& v);

/// Indicator of accepts() over level_vectors(f, ell).
std::vector<int> acceptance(Family f, int ell);

}  // namespace indsets
