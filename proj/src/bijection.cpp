#include "indsets/bijection.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <utility>

#include "indsets/errors.hpp"

namespace indsets {

namespace {

struct Member {
  int value;
  bool bracketed;
};

void require_n(int n) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  if (n > kBijectionMaxN)
    throw ResourceError("bijection enumeration limited to n <= " +
                        std::to_string(kBijectionMaxN));
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// A label's own members; the innermost "1" is written without brackets.
std::vector<Member> members_of(const VertexLabel& l) {
  std::vector<Member> m;
  if (l.bracket) m.push_back({l.bracket_value(), !l.innermost()});
  m.push_back({l.core, false});
  if (l.trail) m.push_back({l.trail_value(), false});
  return m;
}

void extend(Selection& partial, std::vector<Selection>& out) {
  const int depth = static_cast<int>(partial.choices.size());
  if (depth == partial.n) {
    out.push_back(partial);
    return;
  }
  const LevelChoice inner =
      depth == 0 ? LevelChoice{} : partial.choices.back();
  partial.choices.push_back(std::nullopt);
  extend(partial, out);
  partial.choices.pop_back();
  for (const auto& label : labels_at_level(partial.n, partial.n - depth)) {
    if (!compatible_outer(inner, label)) continue;
    partial.choices.push_back(label);
    extend(partial, out);
    partial.choices.pop_back();
  }
}

}  // namespace

std::string VertexLabel::to_string() const {
  const auto ms = members_of(*this);
  const bool wide =
      std::any_of(ms.begin(), ms.end(), [](const Member& m) { return m.value >= 10; });
  std::vector<std::string> parts;
  for (const auto& m : ms)
    parts.push_back(m.bracketed ? "[" + std::to_string(m.value) + "]"
                                : std::to_string(m.value));
  return join(parts, wide ? "." : "");
}

std::string Selection::to_tuple_string() const {
  std::vector<std::string> parts;
  for (const auto& c : choices) parts.push_back(c ? c->to_string() : "ε");
  return "(" + join(parts, ",") + ")";
}

std::string Selection::to_set_string() const {
  std::vector<std::string> parts;
  for (const auto& c : choices)
    if (c) parts.push_back(c->to_string());
  return "{" + join(parts, ",") + "}";
}

bool has_even_neighbors(const OddEvenSeq& s) {
  const std::set<int> present(s.begin(), s.end());
  for (int m : s)
    if (m % 2 != 0 && !present.count(m - 1) && !present.count(m + 1))
      return false;
  return true;
}

std::vector<OddEvenSeq> valid_sequences(int n) {
  require_n(n);
  const int width = 2 * n + 1;
  std::vector<OddEvenSeq> out;
  for (std::uint32_t mask = 0; mask < (1u << width); ++mask) {
    OddEvenSeq s;
    for (int b = 0; b < width; ++b)
      if (mask & (1u << b)) s.push_back(b + 1);
    if (has_even_neighbors(s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexLabel> labels_at_level(int n, int level) {
  if (n < 1 || level < 1 || level > n)
    throw InvalidArgument("level " + std::to_string(level) +
                          " outside 1.." + std::to_string(n));
  const int core = 2 * (n - level) + 2;
  return {{level, core, false, false},
          {level, core, false, true},
          {level, core, true, false},
          {level, core, true, true}};
}

bool compatible_outer(const LevelChoice& inner, const LevelChoice& outer) {
  if (!inner || !outer) return true;
  if (outer->level != inner->level - 1 || outer->core != inner->core + 2)
    throw InvalidArgument("labels " + inner->to_string() + " and " +
                          outer->to_string() + " are not on adjacent levels");
  if (!inner->bracket && !inner->trail) return outer->bracket;
  if (!inner->bracket && inner->trail) return outer->bracket == outer->trail;
  if (inner->bracket && !inner->trail) return !outer->bracket;
  return outer->bracket != outer->trail;
}

std::vector<Selection> independent_selections(int n) {
  require_n(n);
  std::vector<Selection> out;
  Selection partial{n, {}};
  partial.choices.reserve(n);
  extend(partial, out);
  return out;
}

OddEvenSeq to_sequence(const Selection& sel) {
  if (static_cast<int>(sel.choices.size()) != sel.n)
    throw InvalidArgument("selection must have one choice per level");
  std::vector<Member> merged;
  for (std::size_t i = 0; i < sel.choices.size(); ++i) {
    const auto& c = sel.choices[i];
    if (!c) continue;
    if (c->level != sel.n - static_cast<int>(i))
      throw InvalidArgument("selection choice on the wrong level");
    if (i > 0 && !compatible_outer(sel.choices[i - 1], c))
      throw InvalidArgument("selection is not independent");
    for (const auto& m : members_of(*c)) merged.push_back(m);
  }

  std::set<int> plain;
  for (const auto& m : merged)
    if (!m.bracketed) plain.insert(m.value);
  std::set<int> result = plain;
  for (const auto& m : merged)
    if (m.bracketed && !plain.count(m.value - 1) && !plain.count(m.value))
      result.insert(m.value);
  return {result.begin(), result.end()};
}

Selection from_sequence(const OddEvenSeq& s, int n) {
  require_n(n);
  if (!std::is_sorted(s.begin(), s.end()) ||
      std::adjacent_find(s.begin(), s.end()) != s.end())
    throw MalformedSequence("sequence is not strictly increasing");
  if (!s.empty() && (s.front() < 1 || s.back() > 2 * n + 1))
    throw MalformedSequence("sequence members must lie in 1.." +
                            std::to_string(2 * n + 1));
  if (!has_even_neighbors(s))
    throw MalformedSequence("an odd member has no even neighbor");

  const std::set<int> present(s.begin(), s.end());
  Selection sel{n, {}};
  for (int depth = 0; depth < n; ++depth) {
    const int level = n - depth;
    const int core = 2 * depth + 2;
    if (!present.count(core)) {
      sel.choices.push_back(std::nullopt);
      continue;
    }
    const bool trail = present.count(core + 1) > 0;
    const LevelChoice inner =
        depth == 0 ? LevelChoice{} : sel.choices.back();
    LevelChoice chosen;
    if (!inner) {
      // Nothing inside to absorb the bracket, so it shows.
      chosen = VertexLabel{level, core, present.count(core - 1) > 0, trail};
    } else {
      for (bool bracket : {false, true}) {
        const VertexLabel candidate{level, core, bracket, trail};
        if (compatible_outer(inner, candidate)) {
          if (chosen)
            throw MalformedSequence("ambiguous label at level " +
                                    std::to_string(level));
          chosen = candidate;
        }
      }
      if (!chosen)
        throw MalformedSequence("no compatible label at level " +
                                std::to_string(level));
    }
    sel.choices.push_back(chosen);
  }
  if (to_sequence(sel) != s)
    throw MalformedSequence("sequence " + format_sequence(s) +
                            " has no consistent selection");
  return sel;
}

std::string format_sequence(const OddEvenSeq& s) {
  if (s.empty()) return "ε";
  const bool wide = std::any_of(s.begin(), s.end(), [](int m) { return m >= 10; });
  std::vector<std::string> parts;
  for (int m : s) parts.push_back(std::to_string(m));
  return join(parts, wide ? "," : "");
}

OddEvenSeq parse_sequence(const std::string& text) {
  if (text.empty() || text == "ε" || text == "e") return {};
  OddEvenSeq out;
  if (text.find(',') != std::string::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      const std::string tok = text.substr(start, end - start);
      if (tok.empty() ||
          !std::all_of(tok.begin(), tok.end(),
                       [](unsigned char c) { return std::isdigit(c); }))
        throw InvalidArgument("malformed sequence \"" + text + "\"");
      out.push_back(std::stoi(tok));
      start = end + 1;
    }
  } else {
    for (unsigned char c : text) {
      if (!std::isdigit(c))
        throw InvalidArgument("malformed sequence \"" + text + "\"");
      out.push_back(c - '0');
    }
  }
  return out;
}

}  // namespace indsets
