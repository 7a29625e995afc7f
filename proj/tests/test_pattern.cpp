#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "cyclelab/cycle_pattern.hpp"
#include "cyclelab/errors.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cyclelab;

namespace {

CyclePattern cp(const char* w) { return CyclePattern::parse(w); }

std::vector<std::string> words(const std::vector<CyclePattern>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.word());
  return out;
}

}  // namespace

TEST_CASE("words accept +/- and F/B") {
  CHECK(cp("FFB").word() == "++-");
  CHECK(cp("+-+-") == cp("FBFB"));
  CHECK_THROWS_AS(cp("+x+"), InvalidPattern);
  CHECK_THROWS_AS(cp("+"), InvalidPattern);
  CHECK_THROWS_AS(cp("+-"), InvalidPattern);
  CHECK(cp("--").canonical() == cp("++"));
}

TEST_CASE("blocks are the maximal cyclic runs") {
  CHECK(blocks(cp("FFFF")).lengths == std::vector<std::size_t>{4});
  CHECK(blocks(cp("FFB")).lengths == std::vector<std::size_t>{2, 1});
  CHECK(blocks(cp("FFBFBB")).lengths == std::vector<std::size_t>{2, 1, 1, 2});
  const auto wrap = blocks(cp("FBBFF"));
  CHECK(wrap.count() == 2);
  CHECK(wrap.start == 1);
  CHECK(wrap.lengths == std::vector<std::size_t>{2, 3});
}

TEST_CASE("classification") {
  CHECK(classify(cp("FFFFF")) == PatternClass::DirectedCycle);
  CHECK(classify(cp("FFFFB")) == PatternClass::SingleFlip);
  CHECK(blocks(cp("FFFFB")).lengths == std::vector<std::size_t>{4, 1});
  CHECK(classify(cp("FBFB")) == PatternClass::AlwaysAppears);
  CHECK(classify(cp("FFBB")) == PatternClass::AlwaysAppears);
  CHECK(classify(cp("FFFB")) == PatternClass::SingleFlip);
  CHECK(classify(cp("++")) == PatternClass::DirectedCycle);
  CHECK(to_string(PatternClass::AlwaysAppears) == "AlwaysAppears");
}

TEST_CASE("delete_segment") {
  const std::vector<std::size_t> u3{3};
  const PathPattern p = delete_segment(cp("FBFB"), u3);
  CHECK(p.vertex_count() == 3);
  CHECK(p.word() == "+-");

  const std::vector<std::size_t> one{0};
  const PathPattern three_vertices = delete_segment(cp("FFFF"), one);
  CHECK(three_vertices.vertex_count() == 3);
  CHECK(three_vertices.word() == "++");

  const std::vector<std::size_t> three{1, 2, 3};
  const PathPattern single = delete_segment(cp("FBFB"), three);
  CHECK(single.arc_count() == 0);
  CHECK(single.vertex_count() == 1);

  const std::vector<std::size_t> wrap{3, 0};
  CHECK(delete_segment(cp("++-+"), wrap).word() == "+");

  const std::vector<std::size_t> none;
  const std::vector<std::size_t> gap{0, 2};
  const std::vector<std::size_t> all{0, 1, 2, 3};
  const std::vector<std::size_t> out_of_range{4};
  CHECK_THROWS_AS(delete_segment(cp("FBFB"), none), InvalidSegment);
  CHECK_THROWS_AS(delete_segment(cp("FBFB"), gap), InvalidSegment);
  CHECK_THROWS_AS(delete_segment(cp("FBFB"), all), InvalidSegment);
  CHECK_THROWS_AS(delete_segment(cp("FBFB"), out_of_range), InvalidSegment);
}

TEST_CASE("motif detection") {
  CHECK(contains_motif(cp("FBFBF"), motif_rlrl()));
  CHECK_FALSE(contains_motif(cp("FFFF"), motif_rlrl()));
  CHECK(contains_motif(cp("FFBBF"), motif_rrll()));
  CHECK(contains_motif(cp("FBFB"), motif_rlrl()));
  CHECK(contains_motif(cp("-+-+"), motif_rlrl()));
  CHECK_FALSE(contains_motif(cp("FFBFB"), motif_rrll()));
}

TEST_CASE("forbidden family") {
  CHECK(words(forbidden_family(2)) == std::vector<std::string>{"++"});
  CHECK(words(forbidden_family(3)) == std::vector<std::string>{"++", "+++", "++-"});
  CHECK(words(forbidden_family(4)) == std::vector<std::string>{"++", "+++", "++-", "++++", "+++-"});
  for (std::size_t k = 2; k <= 7; ++k) {
    std::set<std::string> expected;
    for (const auto& w : oracle::forbidden_words(k)) expected.insert(oracle::canonical_word(w));
    const auto got = words(forbidden_family(k));
    CHECK(std::set<std::string>(got.begin(), got.end()) == expected);
    CHECK(got.size() == expected.size());
  }
}

TEST_CASE("property: canonical form agrees with the string oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t k = gen::between(rng, 2, 12);
    const std::string w = gen::word(rng, k);
    const CyclePattern p = CyclePattern::parse(w);
    CHECK(p.canonical().word() == oracle::canonical_word(w));
    CHECK(canonical_transform(p).apply(p) == p.canonical());
    CHECK(p.reflected().reflected() == p);
    CHECK(p.rotated(k - 1).rotated(1) == p);
    CHECK(classify(p.canonical()) == classify(p));
  }
}

TEST_CASE("property: transforms re-index consistently") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = gen::between(rng, 3, 9);
    const CyclePattern p = CyclePattern::parse(gen::word(rng, k));
    for (const PatternTransform& t : all_transforms(k)) {
      const CyclePattern q = t.apply(p);
      std::vector<Vertex> image(k);
      for (std::size_t i = 0; i < k; ++i) image[i] = static_cast<Vertex>(100 + i);
      const auto back = t.map_back(image);
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = t.original_position(i, k);
        CHECK(back[j] == image[i]);
        // symbol i of q relates its positions i and i+1 in the same direction as in p
        const std::size_t a = t.original_position(i, k);
        const std::size_t b = t.original_position((i + 1) % k, k);
        const bool forward_in_p = (b == (a + 1) % k) ? p[a] == Direction::Forward : p[b] == Direction::Backward;
        CHECK((q[i] == Direction::Forward) == forward_in_p);
      }
    }
  }
}

TEST_CASE("property: find_motif returns a transform that starts with the motif") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = gen::between(rng, 4, 10);
    const CyclePattern p = CyclePattern::parse(gen::word(rng, k));
    for (const PathPattern* m : {&motif_rlrl(), &motif_rrll()}) {
      const auto t = find_motif(p, *m);
      const std::string doubled = p.word() + p.word();
      const std::string mirror = p.reflected().word() + p.reflected().word();
      const bool present = doubled.find(m->word()) != std::string::npos || mirror.find(m->word()) != std::string::npos;
      CHECK(t.has_value() == present);
      if (t) CHECK(t->apply(p).word().rfind(m->word(), 0) == 0);
    }
  }
}

TEST_CASE("canonical_patterns lists each class once") {
  for (std::size_t k = 3; k <= 10; ++k) {
    std::set<std::string> expected;
    for (std::size_t bits = 0; bits < (std::size_t{1} << k); ++bits) {
      std::string w;
      for (std::size_t i = 0; i < k; ++i) w += (bits >> i) & 1 ? '-' : '+';
      expected.insert(oracle::canonical_word(w));
    }
    const auto got = words(canonical_patterns(k));
    CHECK(std::set<std::string>(got.begin(), got.end()) == expected);
    CHECK(got.size() == expected.size());
  }
}
