#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cyclelab/digraph.hpp"

namespace cyclelab {

/// Colouring of the underlying undirected graph.
struct Coloring {
  std::vector<std::uint32_t> color;  // vertex -> colour id
  std::size_t color_count = 0;
};

/// Proper, colours in [0, color_count), and every colour used.
bool is_proper(const Digraph& d, const Coloring& c);

/// Pairwise adjacent in the underlying graph.
bool is_clique(const Digraph& d, std::span<const Vertex> vertices);

struct ChromaticResult {
  std::size_t lower = 0;
  std::size_t upper = 0;
  Coloring witness_coloring;         // uses `upper` colours
  std::vector<Vertex> witness_clique;  // greedy clique; `lower` exceeds its size only when exact
  bool exact = false;
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
};

struct ChromaticBudget {
  std::uint64_t nodes = 0;  // 0 = unlimited
};

/**
 * Exact chromatic number by saturation-order branch and bound seeded with a
 * greedy clique. When the node budget runs out the best sandwich is
 * returned with `budget_exhausted` set. Deterministic for a given vertex
 * numbering.
 */
ChromaticResult chromatic_exact(const Digraph& d, ChromaticBudget budget = {});

/// DSATUR colouring for the upper bound, greedy clique for the lower bound.
ChromaticResult chromatic_bounds(const Digraph& d);

/// Directed path (vertex list) plus the level colouring that certifies
/// arc_count(path) + 1 >= chi(D).
struct LevelPath {
  std::vector<Vertex> path;
  Coloring levels;
};

/**
 * Builds an inclusion-maximal acyclic spanning subdigraph by scanning arcs
 * in ascending (tail, head) order, then returns a longest directed path in
 * it together with the colouring v -> length of the longest path ending at
 * v. That colouring is proper for the whole digraph: a rejected arc closes
 * a cycle, so its head already reaches its tail.
 */
LevelPath gallai_roy_path(const Digraph& d);

/// Bounds on the least chromatic number forcing every oriented tree on
/// `order` vertices. `surrogate_upper` stands in for the unknown optimum.
struct BurrBounds {
  std::size_t order = 0;
  std::size_t lower = 0;
  std::size_t surrogate_upper = 1;
};

BurrBounds burr_surrogate(std::size_t order);

}  // namespace cyclelab
