#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclelab/chromatic.hpp"
#include "cyclelab/cycle_pattern.hpp"
#include "cyclelab/digraph.hpp"
#include "cyclelab/rational.hpp"
#include "cyclelab/search.hpp"

namespace cyclelab {

enum class ExtractionRoute { AlternatingMotif, OpposingMotif, CohesiveSet, ThreeBlocks, TwoBlocks };

/// Short identifier: "rlrl", "rrll", "cohesive", "three-blocks", "two-blocks".
std::string_view to_string(ExtractionRoute r);

struct ExtractionParams {
  Rational epsilon{3, 10};
  SearchBudget search{2'000'000};        // per path search
  ChromaticBudget chromatic{200'000};    // per exact chromatic call
  std::size_t max_restarts = 64;
  std::size_t path_candidates = 256;     // directed paths P tried by the block route
};

/// Throws ParameterRejected unless 0 < epsilon < 1.
void validate(const ExtractionParams& params);

struct Thresholds {
  ExtractionRoute route = ExtractionRoute::AlternatingMotif;
  BigInt min_n;
  BigInt min_chi;
  Rational min_n_exact;
  Rational min_chi_exact;
};

/// Size and chromatic thresholds of the route extract_any would take, with
/// the surrogate constant in place of the unknown tree constants. Throws
/// PatternNotGuaranteed for directed and single-flip cycles.
Thresholds thresholds(const CyclePattern& p, const ExtractionParams& params);

/// Thresholds of a given route for cycles of length k (not for CohesiveSet).
Thresholds route_thresholds(ExtractionRoute route, std::size_t k, const ExtractionParams& params);

/// Thresholds for finding a cohesive set with explicit (c, r, m).
Thresholds cohesive_thresholds(const Rational& epsilon, const Rational& c, std::size_t r, const Rational& m);

/// Sizes and bounds of one named set in a trace.
struct TraceSet {
  std::string name;
  std::vector<Vertex> members;
  std::size_t chi_lower = 0;
  std::size_t chi_upper = 0;
};

/// Narrative of one extraction run. Sets keep the names used in the
/// procedure (S_i, X, X_A, Y_1, ...). Events are human readable and ordered.
struct ExtractionTrace {
  ExtractionRoute route = ExtractionRoute::AlternatingMotif;
  std::string input_word;
  std::string working_word;        // after relabelling
  PatternTransform transform;      // input -> working word
  std::optional<Thresholds> thresholds;
  bool thresholds_met = false;
  std::size_t n = 0;
  std::size_t min_out_degree = 0;
  std::vector<Vertex> sequence;
  std::vector<std::vector<Vertex>> families;  // S_1 ... S_l
  std::vector<TraceSet> sets;
  std::vector<std::string> events;
  std::size_t restarts = 0;
};

enum class ExtractionStatus { Found, Failed };

struct ExtractionResult {
  ExtractionStatus status = ExtractionStatus::Failed;
  std::optional<Embedding> embedding;  // embedding of the input pattern
  ExtractionTrace trace;

  bool found() const { return status == ExtractionStatus::Found; }
};

struct CohesiveResult {
  bool found = false;
  VertexSet set;                         // valid when found
  ChromaticResult chi;                   // of D[set]; ids follow the ascending members of set
  std::vector<VertexSet> chain;          // X_1 = V(D), X_2, ...
  std::vector<Vertex> witnesses;         // v_i with X_{i+1} = X_i \ N_r^-(N^+(v_i))
  std::string reason;                    // why the search stopped without a set
};

/**
 * Searches for a (c, r)-cohesive set X with chi(D[X]) >= m by walking the
 * descending chain X_1 = V(D), X_{i+1} = X_i \ N_r^-(N^+(v_i)), where v_i
 * is the lowest-id vertex of X_i that violates cohesiveness and shrinks the
 * set. Stops without a set when chi(D[X_i]) drops below m, when every
 * violator leaves X_i unchanged, or when exact colouring runs out of budget.
 */
CohesiveResult find_cohesive(const Digraph& d, const Rational& c, std::size_t r, std::size_t m,
                             const ExtractionParams& params = {});

/// Cycle containing +-+- (or equal to it). Throws PatternNotGuaranteed if the motif is absent.
ExtractionResult extract_rlrl(const Digraph& d, const CyclePattern& p, const ExtractionParams& params = {});
/// Cycle containing ++-- (or equal to it).
ExtractionResult extract_rrll(const Digraph& d, const CyclePattern& p, const ExtractionParams& params = {});
/// At least four blocks and neither motif; needs k >= 5 and epsilon < 1/2.
ExtractionResult extract_three_blocks(const Digraph& d, const CyclePattern& p, const ExtractionParams& params = {});
/// Two blocks, both of length at least two; runs the ++-- route.
ExtractionResult extract_two_blocks(const Digraph& d, const CyclePattern& p, const ExtractionParams& params = {});

/// The route extract_any takes for p. Throws PatternNotGuaranteed.
ExtractionRoute dispatch_route(const CyclePattern& p);

ExtractionResult extract_any(const Digraph& d, const CyclePattern& p, const ExtractionParams& params = {});

}  // namespace cyclelab
