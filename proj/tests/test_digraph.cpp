#include <doctest.h>

#include <random>
#include <sstream>

#include "cyclelab/digraph.hpp"
#include "cyclelab/digraph_io.hpp"
#include "cyclelab/errors.hpp"
#include "generators.hpp"

using namespace cyclelab;

TEST_CASE("add_arc rejects loops and parallel arcs but allows anti-parallel pairs") {
  Digraph d(3);
  d.add_arc(0, 1);
  CHECK(d.arcs() == std::vector<Arc>{{0, 1}});
  CHECK_THROWS_AS(d.add_arc(0, 1), ParallelArcRejected);
  d.add_arc(1, 0);
  CHECK(d.arcs() == std::vector<Arc>{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(d.add_arc(2, 2), LoopRejected);
  CHECK_THROWS_AS(d.add_arc(0, 3), InvalidVertex);
  CHECK_FALSE(d.add_arc_if_absent(0, 1));
  CHECK(d.add_arc_if_absent(2, 0));
  CHECK(d.arc_count() == 3);
}

TEST_CASE("clone_vertex copies both neighbourhoods and leaves the pair non-adjacent") {
  SUBCASE("directed triangle") {
    Digraph d = directed_cycle(3);
    const Vertex c = d.clone_vertex(0);
    CHECK(c == 3);
    CHECK(std::vector<Vertex>(d.in(c).begin(), d.in(c).end()) == std::vector<Vertex>{2});
    CHECK(std::vector<Vertex>(d.out(c).begin(), d.out(c).end()) == std::vector<Vertex>{1});
    CHECK_FALSE(d.adjacent(0, c));
  }
  SUBCASE("single vertex") {
    Digraph d(1);
    d.clone_vertex(0);
    CHECK(d.vertex_count() == 2);
    CHECK(d.arc_count() == 0);
  }
  SUBCASE("anti-parallel pair") {
    Digraph d = complete_digraph(2);
    const Vertex c = d.clone_vertex(0);
    CHECK(d.has_arc(c, 1));
    CHECK(d.has_arc(1, c));
    CHECK_FALSE(d.adjacent(0, c));
    CHECK(d.arc_count() == 4);
    CHECK(audit_invariants(d));
  }
  SUBCASE("labels get the suffix") {
    Digraph d;
    d.add_vertex("a");
    const Vertex c = d.clone_vertex(0, "@g1");
    CHECK(d.label(c) == "a@g1");
  }
}

TEST_CASE("r_in_dominated counts out-neighbours inside the set") {
  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(0, 2);
  const VertexSet s(3, {1, 2});
  CHECK(r_in_dominated(d, s, 2) == VertexSet(3, {0}));
  CHECK(r_in_dominated(d, s, 3).empty());

  Digraph star(6);
  for (Vertex v = 1; v <= 5; ++v) star.add_arc(0, v);
  const VertexSet t(6, {1, 2, 3});
  CHECK(r_in_dominated(star, t, 2) == VertexSet(6, {0}));
  CHECK(r_in_dominated(star, t, 4).empty());
}

TEST_CASE("minimum degrees on small digraphs") {
  CHECK(min_out_degree(directed_cycle(3)) == 1);
  CHECK(min_out_degree(transitive_tournament(4)) == 0);
  CHECK(min_in_degree(transitive_tournament(4)) == 0);
  CHECK(max_out_degree(transitive_tournament(4)) == 3);
  CHECK_THROWS_AS(min_out_degree(Digraph{}), EmptyDigraph);
  const auto h = out_degree_histogram(transitive_tournament(4));
  CHECK(h.size() == 4);
  CHECK(h.at(0) == 1);
}

TEST_CASE("induced keeps exactly the arcs inside the set") {
  const Digraph c4 = directed_cycle(4);
  const auto two = induced(c4, VertexSet(4, {0, 1}));
  CHECK(two.graph.vertex_count() == 2);
  CHECK(two.graph.arcs() == std::vector<Arc>{{0, 1}});
  CHECK(induced(c4, VertexSet(4)).graph.empty());
  const auto all = induced(c4, VertexSet::full(4));
  CHECK(all.graph == c4);
  CHECK(all.to_parent == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("property: random edits keep the invariants") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Digraph d = gen::digraph(rng, 10);
    for (int step = 0; step < 5; ++step) {
      const Vertex v = static_cast<Vertex>(gen::between(rng, 0, d.vertex_count() - 1));
      if (gen::between(rng, 0, 1) == 0) {
        d.clone_vertex(v);
      } else {
        const Vertex u = static_cast<Vertex>(gen::between(rng, 0, d.vertex_count() - 1));
        if (u != v) d.add_arc_if_absent(u, v);
      }
    }
    REQUIRE(audit_invariants(d));
    std::size_t in_total = 0;
    for (Vertex v = 0; v < d.vertex_count(); ++v) in_total += d.in_degree(v);
    CHECK(in_total == d.arc_count());
  }
}

TEST_CASE("property: deleting a clone recovers the original") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const Digraph d = gen::digraph(rng, 9);
    Digraph e = d;
    const Vertex v = static_cast<Vertex>(gen::between(rng, 0, d.vertex_count() - 1));
    const Vertex c = e.clone_vertex(v);
    VertexSet keep = VertexSet::full(e.vertex_count());
    keep.erase(c);
    CHECK(induced(e, keep).graph == d);
  }
}

TEST_CASE("property: r_in_dominated is monotone in r and induced matches the definition") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Digraph d = gen::digraph(rng, 12);
    const std::size_t n = d.vertex_count();
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v) {
      if (gen::between(rng, 0, 1) == 1) s.insert(v);
    }
    for (std::size_t r = 1; r <= 4; ++r) {
      CHECK(r_in_dominated(d, s, r + 1).is_subset_of(r_in_dominated(d, s, r)));
    }
    const auto sub = induced(d, s);
    std::size_t expected = 0;
    for (const Arc& a : d.arcs()) expected += s.contains(a.tail) && s.contains(a.head) ? 1 : 0;
    CHECK(sub.graph.arc_count() == expected);
    for (const Arc& a : sub.graph.arcs()) CHECK(d.has_arc(sub.to_parent[a.tail], sub.to_parent[a.head]));
  }
}

TEST_CASE("text format round trip and rejection of malformed input") {
  Digraph d = complete_digraph(3);
  d.set_label(1, "middle vertex");
  const std::string text = to_text(d);
  CHECK(text.rfind("3 6\n0 1\n0 2\n1 0\n", 0) == 0);
  CHECK(from_text(text) == d);
  CHECK(from_text("2 1\n0   1\n").arc_count() == 1);
  CHECK_THROWS_AS(from_text("2 1\n0 0\n"), ParseError);
  CHECK_THROWS_AS(from_text("2 2\n0 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(from_text("2 1\n0 2\n"), ParseError);
  CHECK_THROWS_AS(from_text("2 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(from_text(""), ParseError);
  std::ostringstream dot;
  write_dot(dot, d);
  CHECK(dot.str().find("0 -> 1") != std::string::npos);
}
