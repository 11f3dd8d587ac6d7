#include "indsets/family.hpp"

#include <bit>
#include <string>

#include "indsets/errors.hpp"

namespace indsets {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::G: return "g";
    case Family::R: return "r";
    case Family::K: return "k";
    case Family::P: return "p";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "g" || name == "G") return Family::G;
  if (name == "r" || name == "R") return Family::R;
  if (name == "k" || name == "K") return Family::K;
  if (name == "p" || name == "P") return Family::P;
  return std::nullopt;
}

int max_ell(Family f) {
  return (f == Family::G || f == Family::K) ? 16 : 24;
}

void FamilySpec::validate() const {
  if (ell < 3)
    throw InvalidSpec("cycle size must be at least 3, got " +
                      std::to_string(ell));
  if (n < 0)
    throw InvalidSpec("level count must be nonnegative, got " +
                      std::to_string(n));
}

LevelVector::LevelVector(int ell, std::uint32_t code) : ell_(ell), code_(code) {
  if (ell < 1 || ell > 31)
    throw InvalidArgument("level vector length out of range");
  if (code >> ell)
    throw InvalidArgument("level vector code has bits beyond its length");
}

LevelVector LevelVector::from_bits(const std::vector<int>& bits) {
  std::uint32_t code = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw InvalidArgument("level vector entries are 0/1");
    code = (code << 1) | static_cast<std::uint32_t>(b);
  }
  return LevelVector(static_cast<int>(bits.size()), code);
}

int LevelVector::at(int p) const {
  p %= ell_;
  if (p < 0) p += ell_;
  return static_cast<int>((code_ >> (ell_ - 1 - p)) & 1u);
}

int LevelVector::popcount() const { return std::popcount(code_); }

bool LevelVector::has_adjacent_ones() const {
  for (int p = 0; p < ell_; ++p)
    if (at(p) && at(p + 1)) return true;
  return false;
}

std::vector<int> LevelVector::bits() const {
  std::vector<int> out(ell_);
  for (int p = 0; p < ell_; ++p) out[p] = at(p);
  return out;
}

std::string LevelVector::to_string() const {
  std::string s = "(";
  for (int p = 0; p < ell_; ++p) {
    if (p) s += ',';
    s += static_cast<char>('0' + at(p));
  }
  return s + ")";
}

std::uint32_t blocked_mask(int ell, std::uint32_t code) {
  const std::uint32_t full = (ell >= 32) ? ~0u : ((1u << ell) - 1u);
  // Bit b of the rotated code holds v at the next position (bit b - 1).
  const std::uint32_t next = ((code << 1) | (code >> (ell - 1))) & full;
  return (code | next) & full;
}

std::vector<LevelVector> level_vectors(Family f, int ell) {
  if (ell < 3)
    throw InvalidSpec("cycle size must be at least 3, got " +
                      std::to_string(ell));
  if (ell > max_ell(f))
    throw ResourceError("cycle size " + std::to_string(ell) +
                        " exceeds the cap for family " +
                        std::string(family_name(f)));
  std::vector<LevelVector> out;
  const std::uint32_t count = 1u << ell;
  switch (f) {
    case Family::G:
    case Family::K:
      out.reserve(count);
      for (std::uint32_t c = 0; c < count; ++c) out.emplace_back(ell, c);
      break;
    case Family::R:
      for (std::uint32_t c = 0; c < count; ++c) {
        // no two cyclically consecutive ones
        const std::uint32_t rot = ((c << 1) | (c >> (ell - 1))) & (count - 1);
        if ((c & rot) == 0) out.emplace_back(ell, c);
      }
      break;
    case Family::P:
      out.emplace_back(ell, 0u);
      for (int b = 0; b < ell; ++b) out.emplace_back(ell, 1u << b);
      break;
  }
  return out;
}

bool compatible(const LevelVector& v, const LevelVector& w) {
  if (v.ell() != w.ell())
    throw InvalidArgument("level vectors of different lengths");
  return (blocked_mask(v.ell(), v.code()) & w.code()) == 0;
}

bool accepts(Family f, const LevelVector& v) {
  switch (f) {
    case Family::G: return !v.has_adjacent_ones();
    case Family::K: return v.popcount() <= 1;
    case Family::R:
    case Family::P: return true;
  }
  return false;
}

std::vector<int> acceptance(Family f, int ell) {
  std::vector<int> u;
  for (const auto& v : level_vectors(f, ell)) u.push_back(accepts(f, v) ? 1 : 0);
  return u;
}

}  // namespace indsets
