#include "cyclelab/extract.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cyclelab/errors.hpp"

namespace cyclelab {

namespace {

std::string describe(const Rational& q) {
  std::ostringstream os;
  os << to_string(q);
  if (boost::multiprecision::denominator(q) != 1) os << " (~" << to_double(q) << ")";
  return os.str();
}

/// Shared bookkeeping for one extraction: relabelled working pattern,
/// trace, and the final verified hand-back in input coordinates.
class Run {
 public:
  Run(const Digraph& d, const CyclePattern& input, PatternTransform t, ExtractionRoute route,
      const ExtractionParams& params)
      : d_(d), input_(input), work_(t.apply(input)), transform_(t), params_(params) {
    auto& tr = result_.trace;
    tr.route = route;
    tr.input_word = input.word();
    tr.working_word = work_.word();
    tr.transform = t;
    tr.n = d.vertex_count();
    if (!d.empty()) tr.min_out_degree = min_out_degree(d);
  }

  const Digraph& d() const { return d_; }
  const CyclePattern& work() const { return work_; }
  std::size_t k() const { return work_.length(); }
  std::size_t n() const { return d_.vertex_count(); }
  const ExtractionParams& params() const { return params_; }
  ExtractionTrace& trace() { return result_.trace; }

  void set_thresholds(const Thresholds& t) {
    auto& tr = result_.trace;
    tr.thresholds = t;
    const bool big_enough = BigInt(tr.n) >= t.min_n;
    const bool degree_ok = Rational(tr.min_out_degree) >= params_.epsilon * Rational(tr.n);
    bool chi_ok = false;
    if (big_enough && degree_ok && !d_.empty()) chi_ok = BigInt(chromatic_bounds(d_).lower) >= t.min_chi;
    tr.thresholds_met = big_enough && degree_ok && chi_ok;
    event("thresholds: n >= " + t.min_n.str() + ", chi >= " + t.min_chi.str() + ", min out-degree >= " +
          describe(params_.epsilon * Rational(tr.n)) + (tr.thresholds_met ? " (met)" : " (not met)"));
  }

  void event(std::string text) { result_.trace.events.push_back(std::move(text)); }

  void record_set(std::string name, const VertexSet& s, bool with_bounds = true) {
    TraceSet ts;
    ts.name = std::move(name);
    ts.members = s.members();
    if (with_bounds && !s.empty()) {
      const auto b = chromatic_bounds(induced(d_, s).graph);
      ts.chi_lower = b.lower;
      ts.chi_upper = b.upper;
    }
    result_.trace.sets.push_back(std::move(ts));
  }

  /// Verifies the working-pattern map and stores it in input coordinates.
  ExtractionResult finish(const std::vector<Vertex>& work_map) {
    Embedding e = Embedding::of_cycle(input_, transform_.map_back(work_map));
    if (!verify_embedding(d_, e)) {
      event("internal: assembled map failed verification; discarded");
      return fail("assembled map failed verification");
    }
    result_.status = ExtractionStatus::Found;
    result_.embedding = std::move(e);
    return std::move(result_);
  }

  ExtractionResult fail(std::string why) {
    event("failed: " + why);
    result_.status = ExtractionStatus::Failed;
    return std::move(result_);
  }

 private:
  const Digraph& d_;
  const CyclePattern& input_;
  CyclePattern work_;
  PatternTransform transform_;
  const ExtractionParams& params_;
  ExtractionResult result_;
};

/// Cycle positions start, start+1, ... (count of them), mod k.
std::vector<std::size_t> cyclic_positions(std::size_t start, std::size_t count, std::size_t k) {
  std::vector<std::size_t> pos(count);
  for (std::size_t i = 0; i < count; ++i) pos[i] = (start + i) % k;
  return pos;
}

/// Distinct a in N^+(x) ∩ S and b in N^+(y) ∩ S, lowest ids first.
std::optional<std::pair<Vertex, Vertex>> distinct_attachments(const Digraph& d, Vertex x, Vertex y,
                                                              const VertexSet& s) {
  for (Vertex a : d.out(x)) {
    if (!s.contains(a)) continue;
    for (Vertex b : d.out(y)) {
      if (b == a || !s.contains(b)) continue;
      return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

/// Index of the part maximising |N^+(v) ∩ S_j|, ties to the lowest index.
std::size_t argmax_part(const Digraph& d, Vertex v, const std::vector<VertexSet>& parts) {
  std::size_t best = 0;
  std::size_t best_count = 0;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const std::size_t c = parts[j].count_in(d.out(v));
    if (c > best_count) {
      best = j;
      best_count = c;
    }
  }
  return best;
}

/// Part indices ordered by chromatic upper bound, then lower bound, both
/// descending; ties keep the lower index first.
std::vector<std::size_t> order_by_chi(const Digraph& d, const std::vector<VertexSet>& parts) {
  std::vector<std::pair<std::size_t, std::size_t>> key(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) continue;
    const auto b = chromatic_bounds(induced(d, parts[i]).graph);
    key[i] = {b.upper, b.lower};
  }
  std::vector<std::size_t> order(parts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key[a] > key[b]; });
  return order;
}

/// Closing a path of C - u_2 through the hub vertex u_2 (positions 3..k-1, 0, 1).
std::optional<std::vector<Vertex>> close_through_hub(Run& run, Vertex hub, const VertexSet& host,
                                                     const std::string& host_name) {
  const std::size_t k = run.k();
  const std::size_t skip[] = {2};
  const PathPattern path = delete_segment(run.work(), skip);
  SearchOptions opts;
  opts.allowed = &host;
  opts.budget = run.params().search;
  const SearchOutcome out = find_path(run.d(), path, opts);
  if (!out.found()) {
    if (out.status == SearchStatus::Inconclusive) run.event("path search in " + host_name + " ran out of budget");
    return std::nullopt;
  }
  std::vector<Vertex> map(k);
  map[2] = hub;
  const auto pos = cyclic_positions(3, k - 1, k);
  for (std::size_t j = 0; j < pos.size(); ++j) map[pos[j]] = out.embedding->map[j];
  run.event("path " + path.word() + " found in " + host_name + " (" + std::to_string(out.steps) + " steps)");
  return map;
}

/// C - {u_1, u_2, u_3} inside `host` (positions 4..k-1, 0), with endpoints
/// x = u_0 and y = u_4 sending distinct arcs into `attach`; hub is u_2.
std::optional<std::vector<Vertex>> attach_far_path(Run& run, Vertex hub, const VertexSet& host,
                                                   const VertexSet& attach, const std::string& host_name) {
  const std::size_t k = run.k();
  const std::size_t skip[] = {1, 2, 3};
  const PathPattern path = delete_segment(run.work(), skip);
  std::pair<Vertex, Vertex> picked{};
  SearchOptions opts;
  opts.allowed = &host;
  opts.budget = run.params().search;
  opts.accept = [&](std::span<const Vertex> m) {
    const auto a = distinct_attachments(run.d(), m.back(), m.front(), attach);
    if (a) picked = *a;
    return a.has_value();
  };
  const SearchOutcome out = find_path(run.d(), path, opts);
  if (!out.found()) {
    if (out.status == SearchStatus::Inconclusive) run.event("path search in " + host_name + " ran out of budget");
    return std::nullopt;
  }
  std::vector<Vertex> map(k);
  const auto pos = cyclic_positions(4, k - 3, k);
  for (std::size_t j = 0; j < pos.size(); ++j) map[pos[j]] = out.embedding->map[j];
  map[1] = picked.first;
  map[2] = hub;
  map[3] = picked.second;
  run.event("path " + (path.arc_count() == 0 ? std::string("(single vertex)") : path.word()) + " found in " +
            host_name + ", attached via " + std::to_string(picked.first) + " and " + std::to_string(picked.second));
  return map;
}

std::string set_name(const char* base, std::size_t i) { return std::string(base) + "_" + std::to_string(i + 1); }

ExtractionResult run_rlrl(Run& run) {
  const Digraph& d = run.d();
  const std::size_t n = run.n();
  auto& tr = run.trace();

  // Phase 1: maximal sequence with 2|N^+(v) ∩ U| < |N^+(v)|, U = union of N^+[v_j].
  VertexSet covered(n);
  std::vector<VertexSet> s;
  std::vector<bool> in_sequence(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (in_sequence[v]) continue;
    const std::size_t deg = d.out_degree(v);
    if (2 * covered.count_in(d.out(v)) >= deg) continue;
    VertexSet si = out_neighbourhood(d, v) - covered;
    covered |= out_neighbourhood(d, v);
    covered.insert(v);
    in_sequence[v] = true;
    tr.sequence.push_back(v);
    tr.families.push_back(si.members());
    s.push_back(std::move(si));
  }
  run.event("sequence of " + std::to_string(s.size()) + " vertices");
  if (s.empty()) return run.fail("no vertex has an out-neighbour; the sequence is empty");

  // Phase 2: C - u_2 inside some S_i, closed by the two arcs out of v_i.
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (auto map = close_through_hub(run, tr.sequence[i], s[i], set_name("S", i))) return run.finish(*map);
  }
  run.event("no S_i hosts the path; moving to X");

  // Phase 3: X = V minus all S_i and v_i, split by where out-neighbours concentrate.
  VertexSet x = VertexSet::full(n);
  for (std::size_t i = 0; i < s.size(); ++i) {
    x -= s[i];
    x.erase(tr.sequence[i]);
  }
  run.record_set("X", x);
  std::vector<VertexSet> parts(s.size(), VertexSet(n));
  x.for_each([&](Vertex v) { parts[argmax_part(d, v, s)].insert(v); });
  for (std::size_t i = 0; i < parts.size(); ++i) run.record_set(set_name("X", i), parts[i]);
  for (std::size_t i : order_by_chi(d, parts)) {
    if (parts[i].empty()) continue;
    if (auto map = attach_far_path(run, tr.sequence[i], parts[i], s[i], set_name("X", i))) return run.finish(*map);
  }
  return run.fail("no part X_i hosts the path with two distinct attachments");
}

ExtractionResult run_rrll(Run& run) {
  const Digraph& d = run.d();
  const std::size_t n = run.n();
  const Rational& eps = run.params().epsilon;
  const Rational novelty = eps * eps * Rational(n) / 8;
  auto& tr = run.trace();

  VertexSet covered(n);
  std::vector<VertexSet> s;
  std::vector<bool> in_sequence(n, false);
  auto append = [&](Vertex v) {
    VertexSet si = in_neighbourhood(d, v) - covered;
    covered |= in_neighbourhood(d, v);
    covered.insert(v);
    in_sequence[v] = true;
    tr.sequence.push_back(v);
    tr.families.push_back(si.members());
    s.push_back(std::move(si));
  };
  auto is_novel = [&](Vertex v) {
    return at_least(d.in_degree(v) - covered.count_in(d.in(v)), novelty);
  };
  auto maximise = [&] {
    for (Vertex v = 0; v < n; ++v) {
      if (!in_sequence[v] && is_novel(v)) append(v);
    }
  };

  maximise();
  run.event("sequence of " + std::to_string(s.size()) + " vertices (novelty bound " + describe(novelty) + ")");
  if (s.empty()) return run.fail("no vertex has " + describe(novelty) + " new in-neighbours; the sequence is empty");

  std::size_t tested = 0;
  for (std::size_t round = 0;; ++round) {
    // Phase 2 on the members not tried yet.
    for (; tested < s.size(); ++tested) {
      if (auto map = close_through_hub(run, tr.sequence[tested], s[tested], set_name("S", tested))) {
        return run.finish(*map);
      }
    }

    // Phase 3: X_A sends at least eps n / 2 arcs into the union W.
    VertexSet w(n);
    for (std::size_t i = 0; i < s.size(); ++i) {
      w |= s[i];
      w.insert(tr.sequence[i]);
    }
    const VertexSet x = VertexSet::full(n) - w;
    VertexSet xa(n);
    const Rational heavy = eps * Rational(n) / 2;
    x.for_each([&](Vertex v) {
      if (at_least(w.count_in(d.out(v)), heavy)) xa.insert(v);
    });
    const VertexSet xb = x - xa;
    run.record_set("X", x);
    run.record_set("X_A", xa);
    run.record_set("X_B", xb);
    std::vector<VertexSet> parts(s.size(), VertexSet(n));
    xa.for_each([&](Vertex v) { parts[argmax_part(d, v, s)].insert(v); });
    for (std::size_t i = 0; i < parts.size(); ++i) run.record_set(set_name("X_A", i), parts[i]);
    for (std::size_t i : order_by_chi(d, parts)) {
      if (parts[i].empty()) continue;
      if (auto map = attach_far_path(run, tr.sequence[i], parts[i], s[i], set_name("X_A", i))) {
        return run.finish(*map);
      }
    }

    // Dichotomy on X_B: either some v* has many in-neighbours inside X_B,
    // or some v'' in the union of the S_i has many in-neighbours in X_A.
    if (xb.empty()) return run.fail("X_B is empty and no part of X_A hosts the path");
    const Rational quarter = eps * Rational(n) / 4;
    bool all_heavy = true;
    xb.for_each([&](Vertex v) {
      if (!at_least(xb.count_in(d.out(v)), quarter)) all_heavy = false;
    });
    std::optional<Vertex> candidate;
    std::size_t best = 0;
    if (all_heavy) {
      xb.for_each([&](Vertex v) {
        const std::size_t c = xb.count_in(d.in(v));
        if (!candidate || c > best) {
          candidate = v;
          best = c;
        }
      });
      run.event("every vertex of X_B has " + describe(quarter) + " out-neighbours in X_B; candidate v* = " +
                std::to_string(*candidate));
    } else {
      VertexSet pool(n);
      for (const auto& si : s) pool |= si;
      for (Vertex v : tr.sequence) pool.erase(v);
      pool.for_each([&](Vertex v) {
        const std::size_t c = xa.count_in(d.in(v));
        if (!candidate || c > best) {
          candidate = v;
          best = c;
        }
      });
      if (!candidate) return run.fail("the union of the S_i holds no vertex outside the sequence");
      run.event("some vertex of X_B sends few arcs into X_B; candidate v'' = " + std::to_string(*candidate) + " with " +
                std::to_string(best) + " in-neighbours in X_A");
    }
    if (in_sequence[*candidate] || !is_novel(*candidate)) {
      return run.fail("candidate " + std::to_string(*candidate) +
                      " does not extend the sequence, so the dichotomy yields no restart");
    }
    if (round + 1 > run.params().max_restarts) return run.fail("restart limit reached");
    append(*candidate);
    maximise();
    tr.restarts = round + 1;
    run.event("restart " + std::to_string(round + 1) + ": sequence extended to " + std::to_string(s.size()));
  }
}

/// Whether q = F^L B ... F B with L >= 2, the shape the block route assembles.
bool block_shape(const CyclePattern& q, std::size_t& run_length) {
  const std::size_t k = q.length();
  std::size_t l = 0;
  while (l < k && q[l] == Direction::Forward) ++l;
  if (l < 2 || l >= k - 2) return false;
  if (q[k - 1] != Direction::Backward || q[k - 2] != Direction::Forward) return false;
  run_length = l;
  return true;
}

ExtractionResult run_three_blocks(const Digraph& d, const CyclePattern& p, const ExtractionParams& params) {
  const std::size_t k = p.length();
  // Pick the relabelling whose word is lexicographically smallest among those
  // starting with a directed run of length >= 2 preceded by a single backward arc.
  std::optional<PatternTransform> chosen;
  std::string chosen_word;
  std::size_t l = 0;
  for (const auto& t : all_transforms(k)) {
    const CyclePattern q = t.apply(p);
    std::size_t len = 0;
    if (!block_shape(q, len)) continue;
    if (!chosen || q.word() < chosen_word) {
      chosen = t;
      chosen_word = q.word();
      l = len;
    }
  }
  if (!chosen) throw ParameterRejected("pattern " + p.word() + " has no long directed block to anchor");

  Run run(d, p, *chosen, ExtractionRoute::ThreeBlocks, params);
  run.set_thresholds(thresholds(p, params));
  const std::size_t n = run.n();
  const CyclePattern& q = run.work();
  run.event("first block has " + std::to_string(l) + " arcs; working word " + q.word());

  const Rational m_exact = 16 * Rational(burr_surrogate(k - 1).surrogate_upper) / (1 - 2 * params.epsilon);
  const auto m = static_cast<std::size_t>(ceil_rational(m_exact));
  const CohesiveResult cohesive = find_cohesive(d, params.epsilon, k + 1, m, params);
  VertexSet s = VertexSet::full(n);
  if (cohesive.found) {
    s = cohesive.set;
    run.event("cohesive set found after " + std::to_string(cohesive.witnesses.size()) + " steps, chi >= " +
              std::to_string(cohesive.chi.lower));
  } else {
    run.event("no cohesive set with chi >= " + std::to_string(m) + " (" + cohesive.reason + "); using S = V(D)");
  }
  run.record_set("S", s);

  // Path P = u_0 -> ... -> u_{l-1}; y' = u_l; Q runs u_{l+1} .. u_{k-2}; z' = u_{k-1}.
  const PathPattern p_word(std::vector<Direction>(l - 1, Direction::Forward));
  std::vector<std::size_t> cut;
  cut.push_back(k - 1);
  for (std::size_t i = 0; i <= l; ++i) cut.push_back(i);
  const PathPattern q_word = delete_segment(q, cut);
  const std::size_t q_len = q_word.vertex_count();

  std::optional<std::vector<Vertex>> assembled;
  std::size_t candidates = 0;
  bool recorded = false;
  auto try_path = [&](std::span<const Vertex> pmap) {
    ++candidates;
    VertexSet on_p(n, pmap);
    const Vertex first = pmap.front();
    const Vertex last = pmap.back();
    const VertexSet x1 = out_neighbourhood(d, first) - on_p;
    const VertexSet xl = out_neighbourhood(d, last) - on_p;
    const VertexSet y1 = s - r_in_dominated(d, out_neighbourhood(d, first), k + 1);
    const VertexSet yl = s - r_in_dominated(d, out_neighbourhood(d, last), k + 1);
    const VertexSet tight = s - (y1 | yl | on_p);
    if (!recorded) {
      run.record_set("X_1", x1, false);
      run.record_set("X_last", xl, false);
      run.record_set("Y_1", y1, false);
      run.record_set("Y_last", yl, false);
      run.record_set("S'", tight);
      recorded = true;
    }
    const VertexSet loose = s - on_p;
    for (int tier = 0; tier < 2; ++tier) {
      const VertexSet& host = tier == 0 ? tight : loose;
      if (host.size() < q_len) continue;
      std::pair<Vertex, Vertex> picked{};
      SearchOptions opts;
      opts.allowed = &host;
      opts.budget = params.search;
      opts.accept = [&](std::span<const Vertex> qm) {
        const VertexSet on_q(n, qm);
        for (Vertex yp : d.out(qm.front())) {
          if (!xl.contains(yp) || on_q.contains(yp)) continue;
          for (Vertex zp : d.out(qm.back())) {
            if (zp == yp || !x1.contains(zp) || on_q.contains(zp)) continue;
            picked = {yp, zp};
            return true;
          }
        }
        return false;
      };
      const SearchOutcome out = find_path(d, q_word, opts);
      if (!out.found()) continue;
      std::vector<Vertex> map(k);
      for (std::size_t j = 0; j < l; ++j) map[j] = pmap[j];
      map[l] = picked.first;
      for (std::size_t j = 0; j < q_len; ++j) map[l + 1 + j] = out.embedding->map[j];
      map[k - 1] = picked.second;
      run.event(std::string("Q found in ") + (tier == 0 ? "S'" : "S minus V(P)") + " for path candidate " +
                std::to_string(candidates));
      assembled = std::move(map);
      return true;
    }
    return candidates >= params.path_candidates;
  };

  SearchOptions popts;
  popts.allowed = &s;
  popts.budget = params.search;
  popts.accept = try_path;
  find_path(d, p_word, popts);
  if (assembled) return run.finish(*assembled);
  return run.fail("no directed path P among " + std::to_string(candidates) + " candidates completes to the cycle");
}

}  // namespace

ExtractionResult extract_rlrl(const Digraph& d, const CyclePattern& p, const ExtractionParams& params) {
  validate(params);
  const auto t = find_motif(p, motif_rlrl());
  if (!t) throw PatternNotGuaranteed("pattern " + p.word() + " does not contain +-+-");
  Run run(d, p, *t, ExtractionRoute::AlternatingMotif, params);
  run.set_thresholds(route_thresholds(ExtractionRoute::AlternatingMotif, p.length(), params));
  return run_rlrl(run);
}

ExtractionResult extract_rrll(const Digraph& d, const CyclePattern& p, const ExtractionParams& params) {
  validate(params);
  const auto t = find_motif(p, motif_rrll());
  if (!t) throw PatternNotGuaranteed("pattern " + p.word() + " does not contain ++--");
  Run run(d, p, *t, ExtractionRoute::OpposingMotif, params);
  run.set_thresholds(route_thresholds(ExtractionRoute::OpposingMotif, p.length(), params));
  return run_rrll(run);
}

ExtractionResult extract_three_blocks(const Digraph& d, const CyclePattern& p, const ExtractionParams& params) {
  validate(params);
  if (classify(p) != PatternClass::AlwaysAppears) dispatch_route(p);  // throws PatternNotGuaranteed
  if (blocks(p).count() < 3) throw ParameterRejected("pattern " + p.word() + " has fewer than three blocks");
  if (contains_motif(p, motif_rlrl()) || contains_motif(p, motif_rrll())) {
    throw ParameterRejected("pattern " + p.word() + " contains +-+- or ++--; use the motif routes");
  }
  if (params.epsilon * 2 >= 1) throw ParameterRejected("the block route needs epsilon < 1/2");
  return run_three_blocks(d, p, params);
}

ExtractionResult extract_two_blocks(const Digraph& d, const CyclePattern& p, const ExtractionParams& params) {
  validate(params);
  const auto b = blocks(p);
  if (b.count() != 2 || std::min(b.lengths[0], b.lengths[1]) < 2) {
    if (classify(p) != PatternClass::AlwaysAppears) dispatch_route(p);
    throw ParameterRejected("pattern " + p.word() + " does not consist of two blocks of length >= 2");
  }
  const auto t = find_motif(p, motif_rrll());
  Run run(d, p, *t, ExtractionRoute::TwoBlocks, params);
  run.set_thresholds(thresholds(p, params));
  run.event("two blocks of lengths " + std::to_string(b.lengths[0]) + " and " + std::to_string(b.lengths[1]) +
            "; ++-- sits at a block junction");
  return run_rrll(run);
}

ExtractionResult extract_any(const Digraph& d, const CyclePattern& p, const ExtractionParams& params) {
  switch (dispatch_route(p)) {
    case ExtractionRoute::AlternatingMotif:
      return extract_rlrl(d, p, params);
    case ExtractionRoute::OpposingMotif:
      return extract_rrll(d, p, params);
    case ExtractionRoute::TwoBlocks:
      return extract_two_blocks(d, p, params);
    case ExtractionRoute::ThreeBlocks:
      return extract_three_blocks(d, p, params);
    case ExtractionRoute::CohesiveSet:
      break;
  }
  throw ParameterRejected("unreachable route");
}

}  // namespace cyclelab
