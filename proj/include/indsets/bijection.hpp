#pragma once

#include <optional>
#include <string>
#include <vector>

namespace indsets {

/// Vertex label of P_4^n. A label on level n - i (i = 0 innermost) has core
/// 2i + 2, optional bracket 2i + 1 in front and optional trail 2i + 3. On
/// the innermost level the bracketed value is 1 and is written without
/// brackets: 2, 23, 12, 123.
struct VertexLabel {
  int level;
  int core;
  bool bracket;
  bool trail;

  int bracket_value() const { return core - 1; }
  int trail_value() const { return core + 1; }
  bool innermost() const { return core == 2; }
  /// "[5]67", "45", "12"; multi-digit members are joined with '.'.
  std::string to_string() const;

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

/// Absent (epsilon) or one vertex of a level.
using LevelChoice = std::optional<VertexLabel>;

/// One choice per level, innermost first: choices[i] is level n - i.
struct Selection {
  int n = 0;
  std::vector<LevelChoice> choices;

  /// Tuple form, innermost first: "(12,ε,[5]6)" with "ε" for epsilon.
  std::string to_tuple_string() const;
  /// Set form in increasing label order: "{12,[5]6}".
  std::string to_set_string() const;

  friend bool operator==(const Selection&, const Selection&) = default;
};

/// Strictly increasing subsequence of 1..2n+1.
using OddEvenSeq = std::vector<int>;

inline constexpr int kBijectionMaxN = 9;

/// Every odd member m has m - 1 or m + 1 in the sequence.
bool has_even_neighbors(const OddEvenSeq& s);

/// All such subsequences of 1..2n+1, lexicographic. n in 1..kBijectionMaxN.
std::vector<OddEvenSeq> valid_sequences(int n);

/// The four labels of a level in order: core, core+trail, bracket+core,
/// bracket+core+trail.
std::vector<VertexLabel> labels_at_level(int n, int level);

/// Whether `outer` may sit on the level just outside `inner`.
/// Throws InvalidArgument if both are present and not on adjacent levels.
bool compatible_outer(const LevelChoice& inner, const LevelChoice& outer);

/// All compatible chains of level choices. n in 1..kBijectionMaxN.
std::vector<Selection> independent_selections(int n);

/// Merge labels, drop each bracketed odd m when m - 1 or an unbracketed m
/// is present, then erase brackets.
OddEvenSeq to_sequence(const Selection& sel);

/// Inverse of to_sequence. Throws MalformedSequence if s is not valid for n.
Selection from_sequence(const OddEvenSeq& s, int n);

/// Digits concatenated when every member is a single digit, comma separated
/// otherwise; "ε" for the empty sequence.
std::string format_sequence(const OddEvenSeq& s);
/// Accepts both forms produced by format_sequence.
OddEvenSeq parse_sequence(const std::string& text);

}  // namespace indsets
