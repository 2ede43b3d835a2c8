#ifndef S1S_OMEGA_ALPHABET_HPP
#define S1S_OMEGA_ALPHABET_HPP

#include "s1s/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace s1s::omega {

/// A letter is a bitvector: bit i carries the value of track i.
using letter_t = std::uint64_t;
using state_t = std::uint32_t;

inline constexpr unsigned max_tracks = 64;
/// Widths above this are refused by operations that enumerate letters.
inline constexpr unsigned max_explicit_width = 16;

class track_alphabet {
public:
  track_alphabet() = default;
  explicit track_alphabet(std::vector<std::string> tracks) : tracks_(std::move(tracks)) {
    if (tracks_.size() > max_tracks)
      throw capacity_exceeded("alphabet wider than 64 tracks");
    for (std::size_t i = 0; i < tracks_.size(); ++i)
      for (std::size_t j = i + 1; j < tracks_.size(); ++j)
        if (tracks_[i] == tracks_[j])
          throw precondition_violation("duplicate track name '" + tracks_[i] + "'");
  }

  unsigned width() const { return static_cast<unsigned>(tracks_.size()); }
  const std::vector<std::string>& tracks() const { return tracks_; }
  const std::string& name(unsigned i) const { return tracks_.at(i); }

  std::optional<unsigned> index_of(const std::string& name) const {
    auto it = std::find(tracks_.begin(), tracks_.end(), name);
    if (it == tracks_.end()) return std::nullopt;
    return static_cast<unsigned>(it - tracks_.begin());
  }

  std::uint64_t letter_count() const {
    if (width() > max_explicit_width)
      throw capacity_exceeded("alphabet of width " + std::to_string(width()) +
                              " is too wide to enumerate");
    return std::uint64_t{1} << width();
  }

  bool operator==(const track_alphabet&) const = default;

private:
  std::vector<std::string> tracks_;
};

inline void require_same_alphabet(const track_alphabet& a, const track_alphabet& b) {
  if (!(a == b)) throw alphabet_mismatch("automata are over different track alphabets");
}

/// Letters are ordered track by track: track 0 is the most significant
/// position and 0 < 1. `letter_key` maps a letter to an integer with the
/// same order.
inline std::uint64_t letter_key(letter_t l, unsigned width) {
  std::uint64_t k = 0;
  for (unsigned i = 0; i < width; ++i)
    if (l >> i & 1) k |= std::uint64_t{1} << (width - 1 - i);
  return k;
}

inline letter_t letter_from_key(std::uint64_t key, unsigned width) {
  return letter_key(key, width);
}

/// Set of letters fixing the tracks in `mask` to the bits in `value`.
struct cube {
  letter_t mask = 0;
  letter_t value = 0;

  bool matches(letter_t l) const { return (l & mask) == value; }
  bool subsumes(const cube& o) const {
    return (mask & o.mask) == mask && (o.value & mask) == value;
  }
  /// Least letter of the cube in track order: free tracks are 0.
  letter_t least_letter() const { return value; }

  auto operator<=>(const cube&) const = default;
};

inline std::optional<cube> intersect(const cube& a, const cube& b) {
  letter_t common = a.mask & b.mask;
  if ((a.value & common) != (b.value & common)) return std::nullopt;
  return cube{a.mask | b.mask, a.value | b.value};
}

/// Letter predicate in disjunctive normal form over track-bit tests.
/// An empty cube list is `false`; a cube with empty mask is `true`.
class guard {
public:
  guard() = default;
  explicit guard(std::vector<cube> cubes) : cubes_(std::move(cubes)) { normalize(); }

  static guard top() { return guard(std::vector<cube>{cube{}}); }
  static guard bottom() { return guard(); }
  static guard literal(unsigned track, bool value) {
    letter_t bit = letter_t{1} << track;
    return guard(std::vector<cube>{cube{bit, value ? bit : 0}});
  }
  static guard exactly(letter_t l, unsigned width) {
    letter_t mask = width == 64 ? ~letter_t{0} : (letter_t{1} << width) - 1;
    return guard(std::vector<cube>{cube{mask, l & mask}});
  }

  const std::vector<cube>& cubes() const { return cubes_; }
  bool is_false() const { return cubes_.empty(); }
  bool is_true() const { return cubes_.size() == 1 && cubes_[0].mask == 0; }

  bool matches(letter_t l) const {
    return std::any_of(cubes_.begin(), cubes_.end(),
                       [l](const cube& c) { return c.matches(l); });
  }

  std::optional<letter_t> least_letter(unsigned width) const {
    std::optional<letter_t> best;
    for (const auto& c : cubes_) {
      letter_t l = c.least_letter();
      if (!best || letter_key(l, width) < letter_key(*best, width)) best = l;
    }
    return best;
  }

  friend guard operator&(const guard& a, const guard& b) {
    std::vector<cube> out;
    for (const auto& x : a.cubes_)
      for (const auto& y : b.cubes_)
        if (auto c = intersect(x, y)) out.push_back(*c);
    return guard(std::move(out));
  }

  friend guard operator|(const guard& a, const guard& b) {
    std::vector<cube> out = a.cubes_;
    out.insert(out.end(), b.cubes_.begin(), b.cubes_.end());
    return guard(std::move(out));
  }

  /// Complement within a letter space of the given width.
  guard negate(unsigned width) const {
    guard acc = top();
    for (const auto& c : cubes_) {
      std::vector<cube> lits;
      for (unsigned t = 0; t < width; ++t) {
        letter_t bit = letter_t{1} << t;
        if (c.mask & bit) lits.push_back(cube{bit, (c.value & bit) ? 0 : bit});
      }
      acc = acc & guard(std::move(lits));
      if (acc.is_false()) break;
    }
    return acc;
  }

  /// Existentially drop `track` and shift higher tracks down by one.
  guard project(unsigned track) const {
    std::vector<cube> out;
    out.reserve(cubes_.size());
    for (const auto& c : cubes_)
      out.push_back(cube{drop_bit(c.mask, track), drop_bit(c.value, track)});
    return guard(std::move(out));
  }

  /// Move track i to position `map[i]`.
  guard remap(const std::vector<unsigned>& map) const {
    std::vector<cube> out;
    out.reserve(cubes_.size());
    for (const auto& c : cubes_) {
      cube r;
      for (unsigned i = 0; i < map.size(); ++i) {
        letter_t bit = letter_t{1} << i;
        if (c.mask & bit) {
          r.mask |= letter_t{1} << map[i];
          if (c.value & bit) r.value |= letter_t{1} << map[i];
        }
      }
      out.push_back(r);
    }
    return guard(std::move(out));
  }

  bool operator==(const guard&) const = default;

private:
  static letter_t drop_bit(letter_t x, unsigned track) {
    letter_t low = x & ((letter_t{1} << track) - 1);
    letter_t high = track + 1 >= 64 ? 0 : (x >> (track + 1)) << track;
    return low | high;
  }

  // Merge cubes that differ in one fixed bit until no merge applies, then
  // drop cubes subsumed by another one.
  void normalize() {
    std::sort(cubes_.begin(), cubes_.end());
    cubes_.erase(std::unique(cubes_.begin(), cubes_.end()), cubes_.end());
    if (cubes_.size() < 2) return;
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<cube> next;
      next.reserve(cubes_.size());
      std::vector<bool> used(cubes_.size(), false);
      for (std::size_t i = 0; i < cubes_.size(); ++i) {
        const cube& c = cubes_[i];
        for (letter_t m = c.mask; m; m &= m - 1) {
          letter_t bit = m & (~m + 1);
          if (c.value & bit) continue;
          cube partner{c.mask, c.value | bit};
          auto it = std::lower_bound(cubes_.begin(), cubes_.end(), partner);
          if (it != cubes_.end() && *it == partner) {
            next.push_back(cube{c.mask & ~bit, c.value});
            used[i] = true;
            used[static_cast<std::size_t>(it - cubes_.begin())] = true;
          }
        }
      }
      if (!next.empty()) {
        changed = true;
        for (std::size_t i = 0; i < cubes_.size(); ++i)
          if (!used[i]) next.push_back(cubes_[i]);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        cubes_ = std::move(next);
      }
    }
    std::vector<cube> kept;
    kept.reserve(cubes_.size());
    for (std::size_t i = 0; i < cubes_.size(); ++i) {
      bool subsumed = false;
      for (std::size_t j = 0; j < cubes_.size() && !subsumed; ++j)
        subsumed = j != i && cubes_[j].subsumes(cubes_[i]);
      if (!subsumed) kept.push_back(cubes_[i]);
    }
    cubes_ = std::move(kept);
  }

  std::vector<cube> cubes_;
};

/// Guard matching exactly the given letters of a width-`width` alphabet.
inline guard guard_of_letters(const std::vector<letter_t>& letters, unsigned width) {
  std::vector<cube> cubes;
  cubes.reserve(letters.size());
  letter_t mask = width >= 64 ? ~letter_t{0} : (letter_t{1} << width) - 1;
  for (letter_t l : letters) cubes.push_back(cube{mask, l & mask});
  return guard(std::move(cubes));
}

} // namespace s1s::omega

#endif
