#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclelab/vertex_set.hpp"

namespace cyclelab {

/// Forward: the arc runs u_i -> u_{i+1}. Backward: u_{i+1} -> u_i.
enum class Direction : std::uint8_t { Forward, Backward };

constexpr Direction flip(Direction d) {
  return d == Direction::Forward ? Direction::Backward : Direction::Forward;
}

/// Parse a word over {+,-} or {F,B}; throws InvalidPattern.
std::vector<Direction> parse_word(std::string_view text);
/// Render with '+' for Forward and '-' for Backward.
std::string format_word(std::span<const Direction> word);

/// Orientation of a path u_0 ... u_L; the word may be empty (one vertex).
class PathPattern {
 public:
  PathPattern() = default;
  explicit PathPattern(std::vector<Direction> steps) : steps_(std::move(steps)) {}
  static PathPattern parse(std::string_view text) { return PathPattern(parse_word(text)); }

  std::size_t arc_count() const { return steps_.size(); }
  std::size_t vertex_count() const { return steps_.size() + 1; }
  std::span<const Direction> steps() const { return steps_; }
  Direction operator[](std::size_t i) const { return steps_[i]; }
  std::string word() const { return format_word(steps_); }

  friend bool operator==(const PathPattern&, const PathPattern&) = default;

 private:
  std::vector<Direction> steps_;
};

/**
 * Orientation of a k-cycle as a cyclic word; symbol i relates u_i and
 * u_{(i+1) mod k}.
 *
 * k >= 2. For k = 2 the only admissible word is the directed 2-cycle ++
 * (or its mirror --); +- would need two parallel arcs.
 */
class CyclePattern {
 public:
  explicit CyclePattern(std::vector<Direction> word);
  static CyclePattern parse(std::string_view text) { return CyclePattern(parse_word(text)); }

  std::size_t length() const { return word_.size(); }
  std::span<const Direction> symbols() const { return word_; }
  Direction operator[](std::size_t i) const { return word_[i % word_.size()]; }
  std::string word() const { return format_word(word_); }

  CyclePattern rotated(std::size_t offset) const;
  /// Traverse the cycle backwards: reverses the word and flips every symbol.
  CyclePattern reflected() const;
  CyclePattern canonical() const;
  bool is_canonical() const { return canonical() == *this; }

  friend bool operator==(const CyclePattern&, const CyclePattern&) = default;
  friend auto operator<=>(const CyclePattern& a, const CyclePattern& b) { return a.word() <=> b.word(); }

 private:
  std::vector<Direction> word_;
};

/**
 * A relabelling of the cycle: optionally reflect, then rotate by `offset`.
 * Position i of the transformed pattern is position original_position(i)
 * of the source pattern.
 */
struct PatternTransform {
  bool reflected = false;
  std::size_t offset = 0;

  CyclePattern apply(const CyclePattern& p) const;
  std::size_t original_position(std::size_t i, std::size_t k) const;
  /// Re-index an embedding of the transformed pattern to the source pattern.
  std::vector<Vertex> map_back(std::span<const Vertex> transformed_map) const;
};

/// All 2k relabellings, reflections last.
std::vector<PatternTransform> all_transforms(std::size_t k);
/// Transform taking p to its canonical form (first in all_transforms order).
PatternTransform canonical_transform(const CyclePattern& p);

struct BlockDecomposition {
  std::vector<std::size_t> lengths;  // cyclic, starting at `start`
  std::size_t start = 0;             // first position of the first block
  std::size_t count() const { return lengths.size(); }
};

/// Maximal runs of the cyclic word, wraparound runs merged. A directed
/// cycle is one block starting at position 0.
BlockDecomposition blocks(const CyclePattern& p);

enum class PatternClass { AlwaysAppears, DirectedCycle, SingleFlip };

PatternClass classify(const CyclePattern& p);
std::string_view to_string(PatternClass c);

/**
 * Remove the cyclically consecutive vertex positions `positions`; the
 * remaining path starts at the position after the segment and follows the
 * cycle order. Throws InvalidSegment if the positions are empty, cover the
 * whole cycle, are out of range or are not consecutive.
 */
PathPattern delete_segment(const CyclePattern& p, std::span<const std::size_t> positions);

/// A transform under which the pattern's word begins with `motif`, if any.
std::optional<PatternTransform> find_motif(const CyclePattern& p, const PathPattern& motif);
bool contains_motif(const CyclePattern& p, const PathPattern& motif);

/// Directed cycles of length 2..k and single-flip cycles of length 3..k,
/// canonical and deduplicated, ordered by length then word.
std::vector<CyclePattern> forbidden_family(std::size_t k);

/// Every canonical orientation of a k-cycle.
std::vector<CyclePattern> canonical_patterns(std::size_t k);

inline const PathPattern& motif_rlrl() {
  static const PathPattern m = PathPattern::parse("+-+-");
  return m;
}

inline const PathPattern& motif_rrll() {
  static const PathPattern m = PathPattern::parse("++--");
  return m;
}

}  // namespace cyclelab
