#include "cyclelab/search.hpp"

#include <algorithm>
#include <numeric>

#include "cyclelab/errors.hpp"

namespace cyclelab {

namespace {

bool arc_matches(const Digraph& d, Vertex from, Vertex to, Direction dir) {
  return dir == Direction::Forward ? d.has_arc(from, to) : d.has_arc(to, from);
}

std::span<const Vertex> step_candidates(const Digraph& d, Vertex from, Direction dir) {
  return dir == Direction::Forward ? d.out(from) : d.in(from);
}

/// Shared backtracking engine. For a cycle the word has k symbols and the
/// last one closes back to map[0]; for a path the word has L symbols and
/// L + 1 positions.
class Matcher {
 public:
  Matcher(const Digraph& d, std::span<const Direction> word, bool cyclic, const SearchOptions& options)
      : d_(d), word_(word), cyclic_(cyclic), options_(options),
        positions_(cyclic ? word.size() : word.size() + 1), used_(d.vertex_count()) {
    compute_degree_needs();
  }

  SearchOutcome run() {
    SearchOutcome out;
    map_.assign(positions_, 0);
    for (Vertex start : start_order()) {
      if (!admissible(start, 0)) continue;
      if (!tick()) break;
      place(0, start);
      extend(1);
      unplace(0);
      if (found_ || out_of_budget_) break;
    }
    out.steps = steps_;
    if (found_) {
      out.status = SearchStatus::Found;
      out.embedding = Embedding{std::vector<Direction>(word_.begin(), word_.end()), cyclic_, result_};
    } else if (out_of_budget_) {
      out.status = SearchStatus::Inconclusive;
    } else {
      out.status = SearchStatus::NotFound;
      out.exhaustive = true;
    }
    return out;
  }

 private:
  void compute_degree_needs() {
    need_out_.assign(positions_, 0);
    need_in_.assign(positions_, 0);
    const std::size_t arcs = word_.size();
    for (std::size_t i = 0; i < arcs; ++i) {
      const std::size_t a = i;
      const std::size_t b = (i + 1) % positions_;
      if (word_[i] == Direction::Forward) {
        ++need_out_[a];
        ++need_in_[b];
      } else {
        ++need_in_[a];
        ++need_out_[b];
      }
    }
  }

  std::vector<Vertex> start_order() const {
    std::vector<Vertex> order(d_.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return d_.out_degree(a) + d_.in_degree(a) > d_.out_degree(b) + d_.in_degree(b);
    });
    return order;
  }

  bool admissible(Vertex v, std::size_t pos) const {
    if (options_.allowed != nullptr && !options_.allowed->contains(v)) return false;
    if (used_.contains(v)) return false;
    return d_.out_degree(v) >= need_out_[pos] && d_.in_degree(v) >= need_in_[pos];
  }

  bool tick() {
    if (options_.budget.steps != 0 && steps_ >= options_.budget.steps) {
      out_of_budget_ = true;
      return false;
    }
    ++steps_;
    return true;
  }

  void place(std::size_t pos, Vertex v) {
    map_[pos] = v;
    used_.insert(v);
  }
  void unplace(std::size_t pos) { used_.erase(map_[pos]); }

  void extend(std::size_t pos) {
    if (found_ || out_of_budget_) return;
    if (pos == positions_) {
      if (!options_.accept || options_.accept(map_)) {
        found_ = true;
        result_ = map_;
      }
      return;
    }
    const Vertex prev = map_[pos - 1];
    const Direction dir = word_[pos - 1];
    const bool closing = cyclic_ && pos + 1 == positions_;
    for (Vertex v : step_candidates(d_, prev, dir)) {
      if (!admissible(v, pos)) continue;
      // Closing position: v must also reach back to map[0].
      if (closing && !arc_matches(d_, v, map_[0], word_[pos])) continue;
      if (!tick()) return;
      place(pos, v);
      extend(pos + 1);
      unplace(pos);
      if (found_ || out_of_budget_) return;
    }
  }

  const Digraph& d_;
  std::span<const Direction> word_;
  bool cyclic_;
  const SearchOptions& options_;
  std::size_t positions_;
  VertexSet used_;
  std::vector<std::size_t> need_out_;
  std::vector<std::size_t> need_in_;
  std::vector<Vertex> map_;
  std::vector<Vertex> result_;
  std::uint64_t steps_ = 0;
  bool found_ = false;
  bool out_of_budget_ = false;
};

SearchOutcome found(Embedding e, std::uint64_t steps) {
  SearchOutcome o;
  o.status = SearchStatus::Found;
  o.embedding = std::move(e);
  o.steps = steps;
  return o;
}

SearchOutcome exhaustive_miss(std::uint64_t steps) {
  SearchOutcome o;
  o.status = SearchStatus::NotFound;
  o.exhaustive = true;
  o.steps = steps;
  return o;
}

SearchOutcome scan_two_cycles(const Digraph& d, const CyclePattern& p) {
  std::uint64_t steps = 0;
  for (Vertex u = 0; u < d.vertex_count(); ++u) {
    for (Vertex v : d.out(u)) {
      ++steps;
      if (u < v && d.has_arc(v, u)) {
        // ++ maps u_0 -> u_1 -> u_0; -- is the same cycle traversed backwards.
        std::vector<Vertex> map = p[0] == Direction::Forward ? std::vector<Vertex>{u, v} : std::vector<Vertex>{v, u};
        return found(Embedding::of_cycle(p, std::move(map)), steps);
      }
    }
  }
  return exhaustive_miss(steps);
}

/// Every underlying triangle, each orientation of it tested against p.
SearchOutcome scan_triangles(const Digraph& d, const CyclePattern& p) {
  const std::size_t n = d.vertex_count();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto out = d.out(v);
    const auto in = d.in(v);
    std::set_union(out.begin(), out.end(), in.begin(), in.end(), std::back_inserter(adj[v]));
  }
  std::uint64_t steps = 0;
  std::vector<Vertex> common;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b : adj[a]) {
      if (b <= a) continue;
      common.clear();
      std::set_intersection(adj[a].begin(), adj[a].end(), adj[b].begin(), adj[b].end(), std::back_inserter(common));
      for (Vertex c : common) {
        if (c <= b) continue;
        ++steps;
        const Vertex tri[3] = {a, b, c};
        std::array<std::size_t, 3> perm = {0, 1, 2};
        do {
          const Vertex m0 = tri[perm[0]], m1 = tri[perm[1]], m2 = tri[perm[2]];
          if (arc_matches(d, m0, m1, p[0]) && arc_matches(d, m1, m2, p[1]) && arc_matches(d, m2, m0, p[2])) {
            return found(Embedding::of_cycle(p, {m0, m1, m2}), steps);
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }
  return exhaustive_miss(steps);
}

}  // namespace

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return "Found";
    case SearchStatus::NotFound:
      return "NotFound";
    case SearchStatus::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

bool verify_embedding(const Digraph& d, const Embedding& e) {
  const std::size_t positions = e.cyclic ? e.word.size() : e.word.size() + 1;
  if (e.map.size() != positions || positions == 0) return false;
  if (e.cyclic && e.word.size() < 2) return false;
  for (Vertex v : e.map) {
    if (v >= d.vertex_count()) return false;
  }
  std::vector<Vertex> sorted = e.map;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < e.word.size(); ++i) {
    const Vertex a = e.map[i];
    const Vertex b = e.map[(i + 1) % positions];
    if (!arc_matches(d, a, b, e.word[i])) return false;
  }
  return true;
}

SearchOutcome find_cycle(const Digraph& d, const CyclePattern& p, const SearchOptions& options) {
  return Matcher(d, p.symbols(), true, options).run();
}

SearchOutcome contains_pattern(const Digraph& d, const CyclePattern& p, SearchBudget budget) {
  SearchOptions options;
  options.budget = budget;
  return find_cycle(d, p, options);
}

SearchOutcome find_path(const Digraph& d, const PathPattern& p, const SearchOptions& options) {
  return Matcher(d, p.steps(), false, options).run();
}

SearchOutcome find_oriented_path(const Digraph& d, const PathPattern& p, const VertexSet& forbidden,
                                 SearchBudget budget) {
  VertexSet allowed = VertexSet::full(d.vertex_count());
  if (forbidden.universe() == d.vertex_count()) {
    allowed -= forbidden;
  } else {
    forbidden.for_each([&](Vertex v) { allowed.erase(v); });
  }
  SearchOptions options;
  options.allowed = &allowed;
  options.budget = budget;
  return find_path(d, p, options);
}

bool FamilyReport::all_clear() const {
  return std::all_of(entries.begin(), entries.end(), [](const FamilyEntry& e) {
    return e.outcome.status == SearchStatus::NotFound && e.outcome.exhaustive;
  });
}

bool FamilyReport::any_found() const {
  return std::any_of(entries.begin(), entries.end(), [](const FamilyEntry& e) { return e.outcome.found(); });
}

FamilyReport forbidden_family_check(const Digraph& d, std::size_t k, SearchBudget budget) {
  if (k < 2) throw ParameterRejected("family check needs k >= 2");
  FamilyReport report;
  report.k = k;
  for (auto& p : forbidden_family(k)) {
    SearchOutcome o;
    if (p.length() == 2) {
      o = scan_two_cycles(d, p);
    } else if (p.length() == 3) {
      o = scan_triangles(d, p);
    } else {
      o = contains_pattern(d, p, budget);
    }
    report.entries.push_back({std::move(p), std::move(o)});
  }
  return report;
}

}  // namespace cyclelab
