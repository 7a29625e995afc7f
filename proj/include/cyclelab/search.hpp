#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclelab/cycle_pattern.hpp"
#include "cyclelab/digraph.hpp"

namespace cyclelab {

/// Injective, arc-preserving map of a cycle or path pattern into a digraph.
/// map[i] is the image of pattern vertex u_i.
struct Embedding {
  std::vector<Direction> word;
  bool cyclic = true;
  std::vector<Vertex> map;

  static Embedding of_cycle(const CyclePattern& p, std::vector<Vertex> map) {
    return {std::vector<Direction>(p.symbols().begin(), p.symbols().end()), true, std::move(map)};
  }
  static Embedding of_path(const PathPattern& p, std::vector<Vertex> map) {
    return {std::vector<Direction>(p.steps().begin(), p.steps().end()), false, std::move(map)};
  }
};

bool verify_embedding(const Digraph& d, const Embedding& e);

/// Budget in extension steps; 0 means unlimited.
struct SearchBudget {
  std::uint64_t steps = 0;
};

enum class SearchStatus { Found, NotFound, Inconclusive };
std::string_view to_string(SearchStatus s);

struct SearchOutcome {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<Embedding> embedding;
  bool exhaustive = false;  // only meaningful for NotFound
  std::uint64_t steps = 0;

  bool found() const { return status == SearchStatus::Found; }
};

/// Accept or reject a complete candidate map (in pattern order).
using EmbeddingFilter = std::function<bool(std::span<const Vertex>)>;

struct SearchOptions {
  const VertexSet* allowed = nullptr;  // restrict images to this set
  EmbeddingFilter accept;              // empty: accept every embedding
  SearchBudget budget;
};

/**
 * Backtracking subdigraph search for a cycle orientation. Start vertices
 * are tried in descending total degree (ties by id); each extension walks
 * the neighbour list the next symbol requires, and the closing position
 * intersects the neighbourhoods of both cycle neighbours. NotFound is
 * exhaustive only when the whole tree was enumerated.
 */
SearchOutcome contains_pattern(const Digraph& d, const CyclePattern& p, SearchBudget budget = {});
SearchOutcome find_cycle(const Digraph& d, const CyclePattern& p, const SearchOptions& options);

/// Embeds the path avoiding `forbidden`. Contract: with an unlimited budget
/// and chi(D - forbidden) >= burr_surrogate(|p| + 1).surrogate_upper the
/// search succeeds.
SearchOutcome find_oriented_path(const Digraph& d, const PathPattern& p, const VertexSet& forbidden,
                                 SearchBudget budget = {});
SearchOutcome find_path(const Digraph& d, const PathPattern& p, const SearchOptions& options);

struct FamilyEntry {
  CyclePattern pattern;
  SearchOutcome outcome;
};

struct FamilyReport {
  std::size_t k = 0;
  std::vector<FamilyEntry> entries;

  /// Every member NotFound with an exhaustive search.
  bool all_clear() const;
  bool any_found() const;
};

/**
 * Searches every member of forbidden_family(k). Lengths 2 and 3 use direct
 * enumeration (anti-parallel pairs, triangles through neighbourhood
 * intersection) and are always exhaustive.
 */
FamilyReport forbidden_family_check(const Digraph& d, std::size_t k, SearchBudget budget = {});

}  // namespace cyclelab
