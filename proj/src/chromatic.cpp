#include "cyclelab/chromatic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "cyclelab/errors.hpp"

namespace cyclelab {

namespace {

/// Underlying simple graph as sorted neighbour lists.
std::vector<std::vector<Vertex>> underlying_lists(const Digraph& d) {
  std::vector<std::vector<Vertex>> adj(d.vertex_count());
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    auto& a = adj[v];
    const auto out = d.out(v);
    const auto in = d.in(v);
    a.reserve(out.size() + in.size());
    std::set_union(out.begin(), out.end(), in.begin(), in.end(), std::back_inserter(a));
  }
  return adj;
}

bool sorted_has(const std::vector<Vertex>& list, Vertex v) {
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Vertex> greedy_clique(const std::vector<std::vector<Vertex>>& adj) {
  const std::size_t n = adj.size();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return adj[a].size() > adj[b].size(); });

  std::vector<Vertex> best;
  const std::size_t starts = std::min<std::size_t>(n, 256);
  for (std::size_t s = 0; s < starts; ++s) {
    const Vertex root = order[s];
    if (adj[root].size() + 1 <= best.size()) continue;
    std::vector<Vertex> candidates = adj[root];
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](Vertex a, Vertex b) { return adj[a].size() > adj[b].size(); });
    std::vector<Vertex> clique{root};
    for (Vertex c : candidates) {
      bool ok = true;
      for (Vertex m : clique) {
        if (!sorted_has(adj[c], m)) {
          ok = false;
          break;
        }
      }
      if (ok) clique.push_back(c);
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  std::sort(best.begin(), best.end());
  return best;
}

/// DSATUR greedy; ties by degree, then lowest id.
Coloring dsatur_greedy(const std::vector<std::vector<Vertex>>& adj) {
  const std::size_t n = adj.size();
  constexpr auto kNone = static_cast<std::uint32_t>(-1);
  Coloring c;
  c.color.assign(n, kNone);
  std::vector<std::vector<bool>> seen(n);
  std::vector<std::size_t> saturation(n, 0);

  // Key: (-saturation, -degree, id); std::set gives the max-saturation vertex first.
  using Key = std::tuple<long long, long long, Vertex>;
  std::set<Key> queue;
  for (Vertex v = 0; v < n; ++v) queue.insert({0, -static_cast<long long>(adj[v].size()), v});

  while (!queue.empty()) {
    const Vertex v = std::get<2>(*queue.begin());
    queue.erase(queue.begin());
    std::uint32_t col = 0;
    while (col < seen[v].size() && seen[v][col]) ++col;
    c.color[v] = col;
    c.color_count = std::max<std::size_t>(c.color_count, col + 1);
    for (Vertex w : adj[v]) {
      if (c.color[w] != kNone) continue;
      if (seen[w].size() <= col) seen[w].resize(col + 1, false);
      if (!seen[w][col]) {
        queue.erase({-static_cast<long long>(saturation[w]), -static_cast<long long>(adj[w].size()), w});
        seen[w][col] = true;
        ++saturation[w];
        queue.insert({-static_cast<long long>(saturation[w]), -static_cast<long long>(adj[w].size()), w});
      }
    }
  }
  return c;
}

/// Saturation-order branch and bound over a dense adjacency matrix.
class ExactColorer {
 public:
  // Colours never reach `max_colors` (the greedy bound), which sizes the count table.
  ExactColorer(const std::vector<std::vector<Vertex>>& adj, std::size_t max_colors, std::uint64_t node_limit)
      : adj_(adj), n_(adj.size()), stride_(max_colors), node_limit_(node_limit) {
    color_.assign(n_, kNone);
    neighbour_colors_.assign(n_ * stride_, 0);
    saturation_.assign(n_, 0);
  }

  /// Returns false if the node budget ran out before the search finished.
  bool run(const std::vector<Vertex>& clique, Coloring& best, std::size_t lower) {
    best_ = &best;
    lower_ = lower;
    std::size_t used = 0;
    for (Vertex v : clique) assign(v, static_cast<std::uint32_t>(used++));
    search(clique.size(), used);
    return !out_of_budget_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  static constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

  std::uint32_t& count(Vertex v, std::uint32_t c) { return neighbour_colors_[static_cast<std::size_t>(v) * stride_ + c]; }

  void assign(Vertex v, std::uint32_t c) {
    color_[v] = c;
    for (Vertex w : adj_[v]) {
      if (count(w, c)++ == 0) ++saturation_[w];
    }
  }

  void unassign(Vertex v) {
    const std::uint32_t c = color_[v];
    color_[v] = kNone;
    for (Vertex w : adj_[v]) {
      if (--count(w, c) == 0) --saturation_[w];
    }
  }

  Vertex pick() const {
    Vertex best = kNone;
    std::size_t best_sat = 0;
    std::size_t best_deg = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] != kNone) continue;
      const std::size_t deg = adj_[v].size();
      if (best == kNone || saturation_[v] > best_sat || (saturation_[v] == best_sat && deg > best_deg)) {
        best = v;
        best_sat = saturation_[v];
        best_deg = deg;
      }
    }
    return best;
  }

  void search(std::size_t colored, std::size_t used) {
    if (done_) return;
    if (node_limit_ != 0 && nodes_ >= node_limit_) {
      out_of_budget_ = true;
      done_ = true;
      return;
    }
    ++nodes_;
    if (colored == n_) {
      best_->color = color_;
      best_->color_count = used;
      if (used <= lower_) done_ = true;
      return;
    }
    const Vertex v = pick();
    for (std::uint32_t c = 0; c < used; ++c) {
      if (count(v, c) != 0) continue;
      assign(v, c);
      search(colored + 1, used);
      unassign(v);
      if (done_ || used >= best_->color_count) return;
    }
    if (used + 1 < best_->color_count) {
      assign(v, static_cast<std::uint32_t>(used));
      search(colored + 1, used + 1);
      unassign(v);
    }
  }

  const std::vector<std::vector<Vertex>>& adj_;
  std::size_t n_;
  std::size_t stride_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  bool done_ = false;
  std::size_t lower_ = 0;
  Coloring* best_ = nullptr;
  std::vector<std::uint32_t> color_;
  std::vector<std::uint32_t> neighbour_colors_;
  std::vector<std::size_t> saturation_;
};

}  // namespace

bool is_proper(const Digraph& d, const Coloring& c) {
  if (c.color.size() != d.vertex_count()) return false;
  std::vector<bool> used(c.color_count, false);
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (c.color[v] >= c.color_count) return false;
    used[c.color[v]] = true;
    for (Vertex w : d.out(v)) {
      if (c.color[v] == c.color[w]) return false;
    }
  }
  return std::all_of(used.begin(), used.end(), [](bool b) { return b; });
}

bool is_clique(const Digraph& d, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || !d.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

ChromaticResult chromatic_bounds(const Digraph& d) {
  ChromaticResult r;
  if (d.empty()) {
    r.exact = true;
    return r;
  }
  const auto adj = underlying_lists(d);
  r.witness_coloring = dsatur_greedy(adj);
  r.witness_clique = greedy_clique(adj);
  r.upper = r.witness_coloring.color_count;
  r.lower = r.witness_clique.size();
  r.exact = r.lower == r.upper;
  return r;
}

ChromaticResult chromatic_exact(const Digraph& d, ChromaticBudget budget) {
  ChromaticResult r = chromatic_bounds(d);
  if (r.exact) return r;

  const auto adj = underlying_lists(d);
  ExactColorer colorer(adj, r.upper, budget.nodes);
  // The clique occupies colours 0..q-1; the search only extends it.
  const bool finished = colorer.run(r.witness_clique, r.witness_coloring, r.lower);
  r.nodes = colorer.nodes();
  r.upper = r.witness_coloring.color_count;
  if (finished) {
    // Exhausting the tree proves no colouring with fewer colours exists.
    r.lower = r.upper;
    r.exact = true;
  } else {
    r.budget_exhausted = true;
    r.exact = r.lower == r.upper;
  }
  return r;
}

LevelPath gallai_roy_path(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  if (n == 0) throw EmptyDigraph("gallai_roy_path needs at least one vertex");

  std::vector<std::vector<Vertex>> dag(n);
  std::vector<std::uint32_t> mark(n, 0);
  std::uint32_t epoch = 0;
  std::vector<Vertex> stack;

  auto reaches = [&](Vertex from, Vertex to) {
    ++epoch;
    stack.assign(1, from);
    mark[from] = epoch;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      if (x == to) return true;
      for (Vertex y : dag[x]) {
        if (mark[y] != epoch) {
          mark[y] = epoch;
          stack.push_back(y);
        }
      }
    }
    return false;
  };

  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : d.out(u)) {
      if (!reaches(v, u)) dag[u].push_back(v);
    }
  }

  // Longest path ending at each vertex, via a topological order.
  std::vector<std::size_t> indeg(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : dag[u]) ++indeg[v];
  }
  std::vector<Vertex> order;
  order.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    if (indeg[v] == 0) order.push_back(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : dag[order[i]]) {
      if (--indeg[w] == 0) order.push_back(w);
    }
  }

  constexpr auto kNone = static_cast<Vertex>(-1);
  std::vector<std::uint32_t> level(n, 0);
  std::vector<Vertex> parent(n, kNone);
  for (Vertex u : order) {
    for (Vertex w : dag[u]) {
      if (level[u] + 1 > level[w]) {
        level[w] = level[u] + 1;
        parent[w] = u;
      }
    }
  }

  Vertex end = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (level[v] > level[end]) end = v;
  }
  LevelPath result;
  for (Vertex v = end; v != kNone; v = parent[v]) result.path.push_back(v);
  std::reverse(result.path.begin(), result.path.end());
  result.levels.color = level;
  result.levels.color_count = level[end] + 1;
  return result;
}

BurrBounds burr_surrogate(std::size_t order) {
  BurrBounds b;
  b.order = order;
  b.lower = 2 * order;
  if (order <= 1) {
    b.surrogate_upper = 1;
  } else if (order == 2) {
    // (k-1)^2 = 1 cannot force an arc; chi >= 2 does.
    b.surrogate_upper = 2;
  } else {
    b.surrogate_upper = (order - 1) * (order - 1);
  }
  return b;
}

}  // namespace cyclelab
