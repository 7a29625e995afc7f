#include "cyclelab/suites.hpp"

#include <chrono>
#include <random>

#include "cyclelab/chromatic.hpp"
#include "cyclelab/construct.hpp"
#include "cyclelab/errors.hpp"
#include "cyclelab/random_digraph.hpp"
#include "cyclelab/search.hpp"

namespace cyclelab {

namespace {

std::size_t pick(std::size_t value, std::size_t fallback) { return value == 0 ? fallback : value; }

void tally(SuiteReport& r, bool ok, std::string what) {
  ++r.trials;
  if (ok) {
    ++r.passed;
  } else {
    r.failures.push_back(std::move(what));
  }
}

/// Family-free random digraphs stay family-free after cloning a vertex.
void cloning_suite(SuiteReport& r, const SuiteOptions& o) {
  const std::size_t trials = pick(o.trials, 200);
  const std::size_t max_n = pick(o.n, 12);
  r.parameters = "seed=" + std::to_string(o.seed) + " trials=" + std::to_string(trials) + " n<=" + std::to_string(max_n);
  std::mt19937_64 rng(o.seed);
  while (r.trials < trials) {
    const std::size_t k = 3 + rng() % 2;
    const std::size_t n = 2 + rng() % (max_n - 1);
    const double p = 0.1 + 0.3 * unit_draw(rng);
    Digraph d = random_digraph(n, p, rng);
    if (!forbidden_family_check(d, k).all_clear()) continue;
    const auto v = static_cast<Vertex>(rng() % n);
    d.clone_vertex(v);
    tally(r, forbidden_family_check(d, k).all_clear(),
          "n=" + std::to_string(n) + " k=" + std::to_string(k) + " clone of " + std::to_string(v));
  }
}

/// Level colouring is proper and the path is at least chi - 1 arcs long.
void gallai_roy_suite(SuiteReport& r, const SuiteOptions& o) {
  const std::size_t trials = pick(o.trials, 100);
  const std::size_t max_n = pick(o.n, 30);
  r.parameters = "seed=" + std::to_string(o.seed) + " trials=" + std::to_string(trials) + " n<=" + std::to_string(max_n);
  std::mt19937_64 rng(o.seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t n = 1 + rng() % max_n;
    const double p = 0.05 + 0.5 * unit_draw(rng);
    const Digraph d = random_digraph(n, p, rng);
    const LevelPath lp = gallai_roy_path(d);
    const ChromaticResult chi = chromatic_exact(d);
    bool ok = is_proper(d, lp.levels) && lp.levels.color_count == lp.path.size() && chi.exact &&
              lp.path.size() >= chi.upper;
    for (std::size_t i = 0; ok && i + 1 < lp.path.size(); ++i) ok = d.has_arc(lp.path[i], lp.path[i + 1]);
    tally(r, ok, "trial " + std::to_string(t) + " n=" + std::to_string(n));
  }
}

/// Blow-ups avoid short directed cycles and have the advertised degree and clique.
void blowup_suite(SuiteReport& r, const SuiteOptions& o) {
  const std::size_t kmax = pick(o.kmax, 6);
  r.parameters = "k=2.." + std::to_string(kmax) + " blob=2..3";
  for (std::size_t k = 2; k <= kmax; ++k) {
    for (std::size_t blob = 2; blob <= 3; ++blob) {
      const Digraph d = blowup_cycle(k, blob);
      bool ok = min_out_degree(d) == blob;
      std::vector<Vertex> clique(blob);
      for (std::size_t i = 0; i < blob; ++i) clique[i] = static_cast<Vertex>(i);
      ok = ok && is_clique(d, clique) && chromatic_bounds(d).lower >= blob;
      for (std::size_t j = 2; ok && j <= k; ++j) {
        const auto o2 = contains_pattern(d, CyclePattern(std::vector<Direction>(j, Direction::Forward)));
        ok = o2.status == SearchStatus::NotFound && o2.exhaustive;
      }
      tally(r, ok, "k=" + std::to_string(k) + " blob=" + std::to_string(blob));
    }
  }
}

/// chi of the 2-tuple shift digraph is ceil(log2 m).
void shift_chi_suite(SuiteReport& r, const SuiteOptions& o) {
  const std::size_t mmax = pick(o.n, 8);
  r.parameters = "m=3.." + std::to_string(mmax);
  for (std::size_t m = 3; m <= mmax; ++m) {
    std::size_t expect = 0;
    while ((std::size_t{1} << expect) < m) ++expect;
    const ChromaticResult chi = chromatic_exact(shift_digraph(m, 2));
    tally(r, chi.exact && chi.upper == expect, "m=" + std::to_string(m));
  }
}

}  // namespace

std::vector<std::string_view> suite_ids() { return {"cloning", "gallai-roy", "blowup", "shift-chi"}; }

SuiteReport run_suite(std::string_view id, const SuiteOptions& options) {
  SuiteReport r;
  r.id = std::string(id);
  const auto start = std::chrono::steady_clock::now();
  if (id == "cloning") {
    cloning_suite(r, options);
  } else if (id == "gallai-roy") {
    gallai_roy_suite(r, options);
  } else if (id == "blowup") {
    blowup_suite(r, options);
  } else if (id == "shift-chi") {
    shift_chi_suite(r, options);
  } else {
    throw ParameterRejected("unknown suite '" + std::string(id) + "'");
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace cyclelab
