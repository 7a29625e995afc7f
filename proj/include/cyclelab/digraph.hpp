#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclelab/vertex_set.hpp"

namespace cyclelab {

struct Arc {
  Vertex tail;
  Vertex head;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/**
 * Loop-free digraph without parallel arcs; anti-parallel pairs are allowed.
 *
 * Vertex ids are dense, 0..n-1. Out- and in-neighbourhoods are kept as
 * sorted vectors so membership is a binary search and neighbourhood
 * intersections are linear merges. Vertices are never removed; use
 * induced() to drop them.
 */
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t vertex_count);

  std::size_t vertex_count() const { return out_.size(); }
  std::size_t arc_count() const { return arc_count_; }
  bool empty() const { return out_.empty(); }

  Vertex add_vertex(std::string label = {});

  /// Throws LoopRejected, ParallelArcRejected or InvalidVertex.
  void add_arc(Vertex tail, Vertex head);

  /// Adds the arc unless it is already present; loops still throw.
  bool add_arc_if_absent(Vertex tail, Vertex head);

  bool has_arc(Vertex tail, Vertex head) const;
  /// Adjacent in the underlying undirected graph.
  bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

  std::span<const Vertex> out(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in(Vertex v) const { return in_[v]; }
  std::size_t out_degree(Vertex v) const { return out_[v].size(); }
  std::size_t in_degree(Vertex v) const { return in_[v].size(); }

  /// Adds v' with N^-(v') = N^-(v) and N^+(v') = N^+(v). The clone's label
  /// is v's label followed by `label_suffix`.
  Vertex clone_vertex(Vertex v, std::string_view label_suffix = "'");

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(Vertex v) const;
  void set_label(Vertex v, std::string label);

  /// All arcs in ascending (tail, head) order.
  std::vector<Arc> arcs() const;

  void check_vertex(Vertex v) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<std::string> labels_;  // empty until the first label is set
  std::size_t arc_count_ = 0;
};

/// D[S] together with the vertex correspondence.
struct InducedSubgraph {
  Digraph graph;
  std::vector<Vertex> to_parent;  // new id -> old id, ascending
};

InducedSubgraph induced(const Digraph& d, const VertexSet& s);

/// { v not in S : |N^+(v) ∩ S| >= r }.
VertexSet r_in_dominated(const Digraph& d, const VertexSet& s, std::size_t r);

VertexSet out_neighbourhood(const Digraph& d, Vertex v);
VertexSet in_neighbourhood(const Digraph& d, Vertex v);

/// Throw EmptyDigraph on a digraph without vertices.
std::size_t min_out_degree(const Digraph& d);
std::size_t min_in_degree(const Digraph& d);
std::size_t max_out_degree(const Digraph& d);

/// degree -> number of vertices with that degree.
std::map<std::size_t, std::size_t> out_degree_histogram(const Digraph& d);
std::map<std::size_t, std::size_t> in_degree_histogram(const Digraph& d);

/// Loop / parallel / range audit over the full arc set.
bool audit_invariants(const Digraph& d);

Digraph directed_cycle(std::size_t n);
Digraph complete_digraph(std::size_t n);
Digraph transitive_tournament(std::size_t n);

}  // namespace cyclelab
