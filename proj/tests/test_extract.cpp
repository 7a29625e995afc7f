#include <doctest.h>

#include <random>
#include <vector>

#include "cyclelab/construct.hpp"
#include "cyclelab/errors.hpp"
#include "cyclelab/extract.hpp"
#include "cyclelab/random_digraph.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cyclelab;

namespace {

CyclePattern cp(const char* w) { return CyclePattern::parse(w); }

ExtractionParams with_epsilon(Rational e) {
  ExtractionParams p;
  p.epsilon = e;
  return p;
}

bool found_and_valid(const Digraph& d, const CyclePattern& p, const ExtractionResult& r) {
  return r.found() && r.embedding && r.embedding->word == std::vector<Direction>(p.symbols().begin(), p.symbols().end()) &&
         verify_embedding(d, *r.embedding);
}

std::size_t dense_successes(const CyclePattern& p, ExtractionResult (*extract)(const Digraph&, const CyclePattern&,
                                                                               const ExtractionParams&)) {
  std::size_t ok = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Digraph d = random_digraph(40, 0.6, seed);
    REQUIRE(oracle::contains_cycle_word(d, p.word()));
    const auto r = extract(d, p, with_epsilon(Rational(3, 10)));
    ok += found_and_valid(d, p, r) ? 1 : 0;
  }
  return ok;
}

}  // namespace

TEST_CASE("dispatch follows the block structure") {
  CHECK(dispatch_route(cp("FBFB")) == ExtractionRoute::AlternatingMotif);
  CHECK(dispatch_route(cp("FBFBF")) == ExtractionRoute::AlternatingMotif);
  CHECK(dispatch_route(cp("FFBB")) == ExtractionRoute::TwoBlocks);
  CHECK(dispatch_route(cp("FFFBBB")) == ExtractionRoute::TwoBlocks);
  CHECK(dispatch_route(cp("FFBBF")) == ExtractionRoute::TwoBlocks);
  CHECK(dispatch_route(cp("FFBBFB")) == ExtractionRoute::OpposingMotif);
  CHECK(dispatch_route(cp("FFBFFB")) == ExtractionRoute::ThreeBlocks);
  CHECK_THROWS_AS(dispatch_route(cp("FFFF")), PatternNotGuaranteed);
  CHECK_THROWS_AS(dispatch_route(cp("FFFB")), PatternNotGuaranteed);
  CHECK(to_string(ExtractionRoute::ThreeBlocks) == "three-blocks");
}

TEST_CASE("thresholds are exact") {
  const Thresholds a = thresholds(cp("FBFB"), with_epsilon(Rational(1, 2)));
  CHECK(a.route == ExtractionRoute::AlternatingMotif);
  CHECK(a.min_n == 48);
  CHECK(a.min_chi == 32);
  const Thresholds b = thresholds(cp("FFBB"), with_epsilon(Rational(1, 2)));
  CHECK(b.min_chi == 256);
  CHECK(b.min_n == 384);
  CHECK_THROWS_AS(thresholds(cp("FFF"), {}), PatternNotGuaranteed);
  const Thresholds c = thresholds(cp("FBFB"), with_epsilon(Rational(3, 10)));
  CHECK(c.min_n_exact == Rational(12) / (Rational(3, 10) * Rational(3, 10)));
  CHECK(c.min_n == 134);
}

TEST_CASE("alternating route") {
  const Digraph k10 = complete_digraph(10);
  const auto r = extract_rlrl(k10, cp("FBFB"));
  CHECK(found_and_valid(k10, cp("FBFB"), r));
  CHECK(r.trace.route == ExtractionRoute::AlternatingMotif);
  CHECK_FALSE(r.trace.thresholds_met);
  CHECK_FALSE(extract_rlrl(directed_cycle(4), cp("FBFB")).found());
  CHECK_THROWS_AS(extract_rlrl(k10, cp("FFBB")), PatternNotGuaranteed);
  CHECK(dense_successes(cp("FBFBF"), extract_rlrl) >= 19);
}

TEST_CASE("opposing route") {
  const Digraph k12 = complete_digraph(12);
  CHECK(found_and_valid(k12, cp("FFBB"), extract_rrll(k12, cp("FFBB"))));
  const auto empty = extract_rrll(Digraph(6), cp("FFBB"));
  CHECK_FALSE(empty.found());
  CHECK(empty.trace.sequence.empty());
  CHECK(dense_successes(cp("FFBBF"), extract_rrll) >= 19);
}

TEST_CASE("two-block route") {
  const Digraph k10 = complete_digraph(10);
  CHECK(found_and_valid(k10, cp("FFBB"), extract_two_blocks(k10, cp("FFBB"))));
  CHECK_THROWS_AS(extract_two_blocks(k10, cp("FFFB")), PatternNotGuaranteed);
  CHECK(dense_successes(cp("FFFBBB"), extract_two_blocks) >= 19);
}

TEST_CASE("three-block route") {
  const Digraph k14 = complete_digraph(14);
  const CyclePattern p = cp("FFBFFB");
  CHECK(blocks(p).count() == 4);
  CHECK(found_and_valid(k14, p, extract_three_blocks(k14, p)));
  CHECK_THROWS_AS(extract_three_blocks(k14, cp("FBFB")), ParameterRejected);
  CHECK_THROWS_AS(extract_three_blocks(k14, p, with_epsilon(Rational(1, 2))), ParameterRejected);
  CHECK(dense_successes(p, extract_three_blocks) >= 19);
}

TEST_CASE("extract_any") {
  CHECK_THROWS_AS(extract_any(complete_digraph(5), cp("FFFF")), PatternNotGuaranteed);
  const Digraph k10 = complete_digraph(10);
  CHECK(found_and_valid(k10, cp("FBFB"), extract_any(k10, cp("FBFB"))));
  CHECK_THROWS_AS(extract_any(k10, cp("FBFB"), with_epsilon(Rational(0))), ParameterRejected);
}

TEST_CASE("property: extraction never returns a false embedding") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 120; ++trial) {
    const Digraph d = gen::digraph(rng, 14);
    const std::size_t k = gen::between(rng, 4, 6);
    const CyclePattern p = CyclePattern::parse(gen::word(rng, k));
    if (classify(p) != PatternClass::AlwaysAppears) continue;
    const auto r = extract_any(d, p);
    if (r.found()) {
      CHECK(found_and_valid(d, p, r));
      CHECK(oracle::contains_cycle_word(d, p.word()));
    }
  }
}

TEST_CASE("cohesive sets") {
  // blow-up of the 2-cycle with every blob completed to anti-parallel pairs
  Digraph d = blowup_cycle(2, 5);
  for (Vertex u = 0; u < d.vertex_count(); ++u) {
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
      if (u != v && u / 5 == v / 5) d.add_arc_if_absent(u, v);
    }
  }
  const auto blob = find_cohesive(d, Rational(1, 2), 2, 3);
  CHECK(blob.chain.front() == VertexSet::full(15));
  if (blob.found) CHECK(oracle::cohesive(d, blob.set.members(), Rational(1, 2), 2));

  const auto none = find_cohesive(Digraph(5), Rational(1, 2), 1, 2);
  CHECK_FALSE(none.found);
  CHECK_FALSE(none.reason.empty());
}

TEST_CASE("property: returned cohesive sets satisfy the definition") {
  std::mt19937_64 rng(62);
  int found = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Digraph d = gen::digraph(rng, 14, 0.5);
    const Rational c(gen::between(rng, 1, 4), 5);
    const std::size_t r = gen::between(rng, 1, 3);
    const std::size_t m = gen::between(rng, 2, 4);
    const auto res = find_cohesive(d, c, r, m);
    if (!res.found) continue;
    ++found;
    const auto members = res.set.members();
    CHECK(oracle::chromatic_number(d, members) >= m);
    CHECK(oracle::cohesive(d, members, c, r));
    CHECK(res.chi.upper == oracle::chromatic_number(d, members));
  }
  CHECK(found > 10);
}
