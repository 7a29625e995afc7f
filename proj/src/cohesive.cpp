#include "cyclelab/errors.hpp"
#include "cyclelab/extract.hpp"

namespace cyclelab {

namespace {

ChromaticResult chi_of(const Digraph& d, const VertexSet& s, ChromaticBudget budget) {
  return chromatic_exact(induced(d, s).graph, budget);
}

enum class Verdict { Holds, Violated, Unknown };

/// chi(Z) <= c * chi(X), decided from the two sandwiches.
Verdict compare(const ChromaticResult& z, const ChromaticResult& x, const Rational& c) {
  if (Rational(z.upper) <= c * Rational(x.lower)) return Verdict::Holds;
  if (Rational(z.lower) > c * Rational(x.upper)) return Verdict::Violated;
  return Verdict::Unknown;
}

}  // namespace

CohesiveResult find_cohesive(const Digraph& d, const Rational& c, std::size_t r, std::size_t m,
                             const ExtractionParams& params) {
  if (c <= 0 || c >= 1) throw ParameterRejected("c must lie strictly between 0 and 1");
  if (r == 0) throw ParameterRejected("r must be positive");
  const std::size_t n = d.vertex_count();
  CohesiveResult result;
  VertexSet x = VertexSet::full(n);

  // Each step removes at least one vertex, so n + 1 rounds suffice.
  for (std::size_t round = 0; round <= n; ++round) {
    result.chain.push_back(x);
    const InducedSubgraph dx = induced(d, x);
    ChromaticResult chi_x = chromatic_bounds(dx.graph);
    if (chi_x.upper < m) {
      result.reason = "chromatic number of X_" + std::to_string(round + 1) + " is below m";
      return result;
    }
    if (chi_x.lower < m || !chi_x.exact) chi_x = chromatic_exact(dx.graph, params.chromatic);
    if (chi_x.upper < m) {
      result.reason = "chromatic number of X_" + std::to_string(round + 1) + " is below m";
      return result;
    }
    if (chi_x.lower < m) {
      result.reason = "colouring budget exhausted deciding chi(X_" + std::to_string(round + 1) + ") >= m";
      return result;
    }

    bool violated_any = false;
    bool undecided = false;
    std::optional<std::pair<Vertex, VertexSet>> step;
    for (Vertex v : x.members()) {
      const VertexSet removed = r_in_dominated(d, out_neighbourhood(d, v), r);
      const VertexSet z = x - removed;
      ChromaticResult chi_z = chromatic_bounds(induced(d, z).graph);
      Verdict verdict = compare(chi_z, chi_x, c);
      if (verdict == Verdict::Unknown) {
        chi_z = chi_of(d, z, params.chromatic);
        verdict = compare(chi_z, chi_x, c);
      }
      if (verdict == Verdict::Holds) continue;
      if (verdict == Verdict::Unknown) {
        undecided = true;
        continue;
      }
      violated_any = true;
      if (z.size() < x.size()) {
        step.emplace(v, z);
        break;
      }
    }

    if (step) {
      result.witnesses.push_back(step->first);
      x = std::move(step->second);
      continue;
    }
    if (undecided) {
      result.reason = "colouring budget exhausted deciding cohesiveness of X_" + std::to_string(round + 1);
      return result;
    }
    if (violated_any) {
      result.reason = "every violating vertex of X_" + std::to_string(round + 1) + " leaves the set unchanged";
      return result;
    }
    result.found = true;
    result.set = std::move(x);
    result.chi = std::move(chi_x);
    return result;
  }
  result.reason = "chain did not terminate";
  return result;
}

}  // namespace cyclelab
