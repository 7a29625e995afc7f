#include "cyclelab/digraph.hpp"

#include <algorithm>
#include <limits>

#include "cyclelab/errors.hpp"

namespace cyclelab {

namespace {

bool sorted_contains(const std::vector<Vertex>& list, Vertex v) {
  return std::binary_search(list.begin(), list.end(), v);
}

void sorted_insert(std::vector<Vertex>& list, Vertex v) {
  list.insert(std::lower_bound(list.begin(), list.end(), v), v);
}

const std::string kNoLabel;

}  // namespace

Digraph::Digraph(std::size_t vertex_count) : out_(vertex_count), in_(vertex_count) {
  if (vertex_count > std::numeric_limits<Vertex>::max()) {
    throw SizeRejected("vertex count exceeds the vertex id range");
  }
}

Vertex Digraph::add_vertex(std::string label) {
  const auto v = static_cast<Vertex>(out_.size());
  out_.emplace_back();
  in_.emplace_back();
  if (!label.empty() || !labels_.empty()) {
    labels_.resize(out_.size());
    labels_[v] = std::move(label);
  }
  return v;
}

void Digraph::check_vertex(Vertex v) const {
  if (v >= out_.size()) {
    throw InvalidVertex("vertex " + std::to_string(v) + " out of range (n = " +
                        std::to_string(out_.size()) + ")");
  }
}

void Digraph::add_arc(Vertex tail, Vertex head) {
  if (!add_arc_if_absent(tail, head)) {
    throw ParallelArcRejected("arc (" + std::to_string(tail) + ", " + std::to_string(head) +
                              ") already present");
  }
}

bool Digraph::add_arc_if_absent(Vertex tail, Vertex head) {
  check_vertex(tail);
  check_vertex(head);
  if (tail == head) throw LoopRejected("loop at vertex " + std::to_string(tail));
  auto& list = out_[tail];
  auto it = std::lower_bound(list.begin(), list.end(), head);
  if (it != list.end() && *it == head) return false;
  list.insert(it, head);
  sorted_insert(in_[head], tail);
  ++arc_count_;
  return true;
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
  if (tail >= out_.size() || head >= out_.size()) return false;
  const auto& a = out_[tail];
  const auto& b = in_[head];
  return a.size() <= b.size() ? sorted_contains(a, head) : sorted_contains(b, tail);
}

Vertex Digraph::clone_vertex(Vertex v, std::string_view label_suffix) {
  check_vertex(v);
  std::string label;
  if (has_labels()) label = labels_[v] + std::string(label_suffix);
  const Vertex c = add_vertex(std::move(label));
  // c is the largest id, so appending keeps every neighbour list sorted.
  out_[c] = out_[v];
  in_[c] = in_[v];
  for (Vertex w : out_[c]) in_[w].push_back(c);
  for (Vertex w : in_[c]) out_[w].push_back(c);
  arc_count_ += out_[c].size() + in_[c].size();
  return c;
}

const std::string& Digraph::label(Vertex v) const {
  check_vertex(v);
  return labels_.empty() ? kNoLabel : labels_[v];
}

void Digraph::set_label(Vertex v, std::string label) {
  check_vertex(v);
  if (labels_.empty()) labels_.resize(out_.size());
  labels_[v] = std::move(label);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (Vertex u = 0; u < out_.size(); ++u) {
    for (Vertex v : out_[u]) result.push_back({u, v});
  }
  return result;
}

InducedSubgraph induced(const Digraph& d, const VertexSet& s) {
  InducedSubgraph result;
  const std::size_t n = d.vertex_count();
  std::vector<Vertex> to_child(n, std::numeric_limits<Vertex>::max());
  s.for_each([&](Vertex v) {
    if (v >= n) return;
    to_child[v] = static_cast<Vertex>(result.to_parent.size());
    result.to_parent.push_back(v);
  });
  result.graph = Digraph(result.to_parent.size());
  for (Vertex nv = 0; nv < result.to_parent.size(); ++nv) {
    const Vertex ov = result.to_parent[nv];
    if (d.has_labels()) result.graph.set_label(nv, d.label(ov));
    for (Vertex w : d.out(ov)) {
      if (to_child[w] != std::numeric_limits<Vertex>::max()) result.graph.add_arc(nv, to_child[w]);
    }
  }
  return result;
}

VertexSet r_in_dominated(const Digraph& d, const VertexSet& s, std::size_t r) {
  VertexSet result(d.vertex_count());
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (s.contains(v)) continue;
    if (s.count_in(d.out(v)) >= r) result.insert(v);
  }
  return result;
}

VertexSet out_neighbourhood(const Digraph& d, Vertex v) {
  return VertexSet(d.vertex_count(), d.out(v));
}

VertexSet in_neighbourhood(const Digraph& d, Vertex v) {
  return VertexSet(d.vertex_count(), d.in(v));
}

namespace {

template <class Degree>
std::size_t extreme_degree(const Digraph& d, Degree degree, bool take_min) {
  if (d.empty()) throw EmptyDigraph("degree query on a digraph without vertices");
  std::size_t best = degree(0);
  for (Vertex v = 1; v < d.vertex_count(); ++v) {
    best = take_min ? std::min(best, degree(v)) : std::max(best, degree(v));
  }
  return best;
}

}  // namespace

std::size_t min_out_degree(const Digraph& d) {
  return extreme_degree(d, [&](Vertex v) { return d.out_degree(v); }, true);
}

std::size_t min_in_degree(const Digraph& d) {
  return extreme_degree(d, [&](Vertex v) { return d.in_degree(v); }, true);
}

std::size_t max_out_degree(const Digraph& d) {
  return extreme_degree(d, [&](Vertex v) { return d.out_degree(v); }, false);
}

std::map<std::size_t, std::size_t> out_degree_histogram(const Digraph& d) {
  std::map<std::size_t, std::size_t> h;
  for (Vertex v = 0; v < d.vertex_count(); ++v) ++h[d.out_degree(v)];
  return h;
}

std::map<std::size_t, std::size_t> in_degree_histogram(const Digraph& d) {
  std::map<std::size_t, std::size_t> h;
  for (Vertex v = 0; v < d.vertex_count(); ++v) ++h[d.in_degree(v)];
  return h;
}

bool audit_invariants(const Digraph& d) {
  std::size_t counted = 0;
  for (Vertex u = 0; u < d.vertex_count(); ++u) {
    const auto out = d.out(u);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i] >= d.vertex_count() || out[i] == u) return false;
      if (i > 0 && out[i - 1] >= out[i]) return false;  // duplicate or unsorted
      const auto in = d.in(out[i]);
      if (!std::binary_search(in.begin(), in.end(), u)) return false;
    }
    counted += out.size();
  }
  std::size_t counted_in = 0;
  for (Vertex v = 0; v < d.vertex_count(); ++v) counted_in += d.in(v).size();
  return counted == d.arc_count() && counted_in == d.arc_count();
}

Digraph directed_cycle(std::size_t n) {
  Digraph d(n);
  if (n < 2) return d;
  for (Vertex v = 0; v < n; ++v) d.add_arc_if_absent(v, static_cast<Vertex>((v + 1) % n));
  return d;
}

Digraph complete_digraph(std::size_t n) {
  Digraph d(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) d.add_arc(u, v);
    }
  }
  return d;
}

Digraph transitive_tournament(std::size_t n) {
  Digraph d(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) d.add_arc(u, v);
  }
  return d;
}

}  // namespace cyclelab
