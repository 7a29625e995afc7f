#include "cyclelab/cycle_pattern.hpp"

#include <algorithm>
#include <set>

#include "cyclelab/errors.hpp"

namespace cyclelab {

std::vector<Direction> parse_word(std::string_view text) {
  std::vector<Direction> word;
  word.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '+':
      case 'F':
      case 'f':
        word.push_back(Direction::Forward);
        break;
      case '-':
      case 'B':
      case 'b':
        word.push_back(Direction::Backward);
        break;
      default:
        throw InvalidPattern("unexpected character '" + std::string(1, c) + "' in pattern word `" +
                             std::string(text) + "` (use + and -)");
    }
  }
  return word;
}

std::string format_word(std::span<const Direction> word) {
  std::string s;
  s.reserve(word.size());
  for (auto d : word) s += d == Direction::Forward ? '+' : '-';
  return s;
}

CyclePattern::CyclePattern(std::vector<Direction> word) : word_(std::move(word)) {
  if (word_.size() < 2) throw InvalidPattern("a cycle pattern needs at least 2 arcs");
  if (word_.size() == 2 && word_[0] != word_[1]) {
    throw InvalidPattern("pattern `" + format_word(word_) +
                         "` needs two parallel arcs; the only 2-cycle orientation is `++`");
  }
}

CyclePattern CyclePattern::rotated(std::size_t offset) const {
  const std::size_t k = word_.size();
  std::vector<Direction> w(k);
  for (std::size_t i = 0; i < k; ++i) w[i] = word_[(i + offset) % k];
  return CyclePattern(std::move(w));
}

CyclePattern CyclePattern::reflected() const {
  const std::size_t k = word_.size();
  std::vector<Direction> w(k);
  for (std::size_t i = 0; i < k; ++i) w[i] = flip(word_[k - 1 - i]);
  return CyclePattern(std::move(w));
}

CyclePattern CyclePattern::canonical() const {
  return canonical_transform(*this).apply(*this);
}

CyclePattern PatternTransform::apply(const CyclePattern& p) const {
  return (reflected ? p.reflected() : p).rotated(offset);
}

std::size_t PatternTransform::original_position(std::size_t i, std::size_t k) const {
  const std::size_t j = (i + offset) % k;
  // Reflection maps vertex u_j of the reflected word to u_{-j}.
  return reflected ? (k - j) % k : j;
}

std::vector<Vertex> PatternTransform::map_back(std::span<const Vertex> transformed_map) const {
  const std::size_t k = transformed_map.size();
  std::vector<Vertex> map(k);
  for (std::size_t i = 0; i < k; ++i) map[original_position(i, k)] = transformed_map[i];
  return map;
}

std::vector<PatternTransform> all_transforms(std::size_t k) {
  std::vector<PatternTransform> ts;
  ts.reserve(2 * k);
  for (bool r : {false, true}) {
    for (std::size_t o = 0; o < k; ++o) ts.push_back({r, o});
  }
  return ts;
}

PatternTransform canonical_transform(const CyclePattern& p) {
  PatternTransform best;
  std::string best_word = p.word();
  for (const auto& t : all_transforms(p.length())) {
    std::string w = t.apply(p).word();
    if (w < best_word) {
      best_word = std::move(w);
      best = t;
    }
  }
  return best;
}

BlockDecomposition blocks(const CyclePattern& p) {
  const std::size_t k = p.length();
  BlockDecomposition b;
  std::size_t start = k;
  for (std::size_t i = 0; i < k; ++i) {
    if (p[i] != p[(i + k - 1) % k]) {
      start = i;
      break;
    }
  }
  if (start == k) {
    b.lengths = {k};
    return b;
  }
  b.start = start;
  std::size_t run = 1;
  for (std::size_t s = 1; s < k; ++s) {
    const std::size_t i = (start + s) % k;
    if (p[i] == p[(i + k - 1) % k]) {
      ++run;
    } else {
      b.lengths.push_back(run);
      run = 1;
    }
  }
  b.lengths.push_back(run);
  return b;
}

PatternClass classify(const CyclePattern& p) {
  const auto b = blocks(p);
  if (b.count() == 1) return PatternClass::DirectedCycle;
  if (b.count() == 2 && std::min(b.lengths[0], b.lengths[1]) == 1) return PatternClass::SingleFlip;
  return PatternClass::AlwaysAppears;
}

std::string_view to_string(PatternClass c) {
  switch (c) {
    case PatternClass::AlwaysAppears:
      return "AlwaysAppears";
    case PatternClass::DirectedCycle:
      return "DirectedCycle";
    case PatternClass::SingleFlip:
      return "SingleFlip";
  }
  return "?";
}

PathPattern delete_segment(const CyclePattern& p, std::span<const std::size_t> positions) {
  const std::size_t k = p.length();
  if (positions.empty() || positions.size() >= k) {
    throw InvalidSegment("segment must be non-empty and leave at least one vertex");
  }
  std::vector<bool> in_segment(k, false);
  for (auto pos : positions) {
    if (pos >= k) throw InvalidSegment("segment position out of range");
    if (in_segment[pos]) throw InvalidSegment("repeated segment position");
    in_segment[pos] = true;
  }
  // The segment is consecutive iff exactly one member has no member before it.
  std::size_t first = k;
  std::size_t starts = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (in_segment[i] && !in_segment[(i + k - 1) % k]) {
      first = i;
      ++starts;
    }
  }
  if (starts != 1) throw InvalidSegment("segment positions are not cyclically consecutive");

  const std::size_t remaining = k - positions.size();
  const std::size_t path_start = (first + positions.size()) % k;
  std::vector<Direction> steps;
  steps.reserve(remaining - 1);
  for (std::size_t s = 0; s + 1 < remaining; ++s) steps.push_back(p[path_start + s]);
  return PathPattern(std::move(steps));
}

std::optional<PatternTransform> find_motif(const CyclePattern& p, const PathPattern& motif) {
  const std::size_t k = p.length();
  if (motif.arc_count() > k) return std::nullopt;
  for (const auto& t : all_transforms(k)) {
    const CyclePattern q = t.apply(p);
    bool match = true;
    for (std::size_t i = 0; i < motif.arc_count() && match; ++i) match = q[i] == motif[i];
    if (match) return t;
  }
  return std::nullopt;
}

bool contains_motif(const CyclePattern& p, const PathPattern& motif) {
  return find_motif(p, motif).has_value();
}

std::vector<CyclePattern> canonical_patterns(std::size_t k) {
  if (k < 2 || k > 24) throw InvalidPattern("canonical_patterns supports 2 <= k <= 24");
  std::set<std::string> seen;
  std::vector<CyclePattern> out;
  for (std::uint32_t bits = 0; bits < (1U << k); ++bits) {
    std::vector<Direction> w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = ((bits >> (k - 1 - i)) & 1U) ? Direction::Backward : Direction::Forward;
    if (k == 2 && w[0] != w[1]) continue;
    CyclePattern c = CyclePattern(std::move(w)).canonical();
    if (seen.insert(c.word()).second) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CyclePattern> forbidden_family(std::size_t k) {
  if (k < 2) throw InvalidPattern("forbidden_family needs k >= 2");
  std::vector<CyclePattern> family;
  for (std::size_t len = 2; len <= k; ++len) {
    family.emplace_back(std::vector<Direction>(len, Direction::Forward));
    if (len >= 3) {
      std::vector<Direction> w(len, Direction::Forward);
      w.back() = Direction::Backward;
      family.push_back(CyclePattern(std::move(w)).canonical());
    }
  }
  return family;
}

}  // namespace cyclelab
