#include <doctest.h>

#include <random>

#include "cyclelab/chromatic.hpp"
#include "cyclelab/construct.hpp"
#include "cyclelab/search.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cyclelab;

namespace {

CyclePattern cp(const char* w) { return CyclePattern::parse(w); }

bool exhaustive_miss(const SearchOutcome& o) { return o.status == SearchStatus::NotFound && o.exhaustive; }

}  // namespace

TEST_CASE("cycle search on small families") {
  const auto c5 = contains_pattern(directed_cycle(5), cp("FFFFF"));
  REQUIRE(c5.found());
  CHECK(verify_embedding(directed_cycle(5), *c5.embedding));
  CHECK(exhaustive_miss(contains_pattern(blowup_cycle(4, 2), cp("FFFF"))));
  const auto k5 = contains_pattern(complete_digraph(5), cp("FBFB"));
  REQUIRE(k5.found());
  CHECK(verify_embedding(complete_digraph(5), *k5.embedding));
  CHECK(exhaustive_miss(contains_pattern(blowup_cycle(3, 3), cp("FFF"))));
}

TEST_CASE("oriented path search") {
  const Digraph c6 = directed_cycle(6);
  const auto ff = find_oriented_path(c6, PathPattern::parse("FF"), VertexSet(6));
  REQUIRE(ff.found());
  CHECK(verify_embedding(c6, *ff.embedding));
  CHECK(exhaustive_miss(find_oriented_path(Digraph(4), PathPattern::parse("F"), VertexSet(4))));
  const Digraph tt = transitive_tournament(9);
  const auto fbf = find_oriented_path(tt, PathPattern::parse("FBF"), VertexSet(9));
  REQUIRE(fbf.found());
  CHECK(verify_embedding(tt, *fbf.embedding));
  VertexSet forbidden(6, {1});
  CHECK(exhaustive_miss(find_oriented_path(c6, PathPattern::parse("FFFFF"), forbidden)));
}

TEST_CASE("verify_embedding rejects swapped positions") {
  const Digraph c5 = directed_cycle(5);
  const CyclePattern p = cp("FFFFF");
  CHECK(verify_embedding(c5, Embedding::of_cycle(p, {0, 1, 2, 3, 4})));
  CHECK_FALSE(verify_embedding(c5, Embedding::of_cycle(p, {1, 0, 2, 3, 4})));
  CHECK_FALSE(verify_embedding(c5, Embedding::of_cycle(p, {0, 1, 2, 3})));
  CHECK_FALSE(verify_embedding(c5, Embedding::of_cycle(p, {0, 1, 2, 3, 0})));
}

TEST_CASE("forbidden family is absent from the flip-free constructions") {
  for (const auto& d : {augmented_flip_free(3, 3).graph, shift_digraph(5, 3)}) {
    const FamilyReport r = forbidden_family_check(d, 3);
    CHECK(r.entries.size() == 3);
    CHECK(r.all_clear());
    CHECK_FALSE(r.any_found());
  }
  const FamilyReport c3 = forbidden_family_check(directed_cycle(3), 3);
  CHECK(c3.any_found());
}

TEST_CASE("a budget of one step is inconclusive on a hard instance") {
  const auto o = contains_pattern(blowup_cycle(5, 3), cp("FFFFF"), SearchBudget{1});
  CHECK(o.status == SearchStatus::Inconclusive);
  CHECK_FALSE(o.exhaustive);
}

TEST_CASE("property: cycle search agrees with brute force and every hit verifies") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const Digraph d = gen::digraph(rng, 7);
    const std::size_t k = gen::between(rng, 2, 5);
    const std::string w = gen::word(rng, k);
    const auto o = contains_pattern(d, CyclePattern::parse(w));
    CHECK(o.status != SearchStatus::Inconclusive);
    CHECK(o.found() == oracle::contains_cycle_word(d, w));
    if (o.found()) CHECK(verify_embedding(d, *o.embedding));
    if (!o.found()) CHECK(o.exhaustive);
  }
}

TEST_CASE("property: family check agrees with brute force") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const Digraph d = gen::digraph(rng, 7, 0.25);
    const std::size_t k = gen::between(rng, 2, 5);
    CHECK(forbidden_family_check(d, k).all_clear() == oracle::family_free(d, k));
  }
}

TEST_CASE("property: restricted search respects allowed sets and filters") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const Digraph d = gen::digraph(rng, 10, 0.6);
    const std::size_t n = d.vertex_count();
    VertexSet allowed(n);
    for (Vertex v = 0; v < n; ++v) {
      if (gen::between(rng, 0, 3) != 0) allowed.insert(v);
    }
    SearchOptions opt;
    opt.allowed = &allowed;
    opt.accept = [](std::span<const Vertex> m) { return m[0] < m[1]; };
    const auto o = find_cycle(d, CyclePattern::parse("+-+-"), opt);
    if (o.found()) {
      CHECK(verify_embedding(d, *o.embedding));
      for (Vertex v : o.embedding->map) CHECK(allowed.contains(v));
      CHECK(o.embedding->map[0] < o.embedding->map[1]);
    } else {
      CHECK(o.exhaustive);
    }
  }
}

TEST_CASE("property: paths are found once the chromatic number is large enough") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t arcs = gen::between(rng, 1, 3);
    std::string w;
    for (std::size_t i = 0; i < arcs; ++i) w += gen::between(rng, 0, 1) ? '+' : '-';
    const PathPattern p = PathPattern::parse(w);
    const Digraph d = gen::digraph(rng, 14, 0.7);
    const auto chi = chromatic_exact(d);
    const auto o = find_oriented_path(d, p, VertexSet(d.vertex_count()));
    if (chi.upper >= burr_surrogate(p.vertex_count()).surrogate_upper) CHECK(o.found());
    if (o.found()) CHECK(verify_embedding(d, *o.embedding));
  }
}
