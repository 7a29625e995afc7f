#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "cyclelab/digraph.hpp"
#include "cyclelab/rational.hpp"

namespace cyclelab {

inline constexpr std::size_t kDefaultVertexCap = 5000;

BigInt falling_factorial(std::size_t n, std::size_t k);
BigInt binomial(std::size_t n, std::size_t k);

/// k + 1 transitive tournaments of order `blob` around a directed cycle,
/// each out-complete to the next. Vertex i * blob + j is the j-th vertex of blob i.
Digraph blowup_cycle(std::size_t k, std::size_t blob);

/// Ascending r-tuples over [m], (a_1..a_r) -> (b_1..b_r) iff a_{i+1} = b_i.
/// Labels are 1-based tuples such as "(1,2,3)".
Digraph shift_digraph(std::size_t m, std::size_t r, std::size_t vertex_cap = kDefaultVertexCap);

/// Injective 2k-tuples over [2m] with the same shift rule.
Digraph general_shift_digraph(std::size_t m, std::size_t k, std::size_t vertex_cap = kDefaultVertexCap);

enum class Group : std::uint8_t { CoreG, S, T, P };
inline constexpr std::array<Group, 4> kGroups = {Group::CoreG, Group::S, Group::T, Group::P};
std::string_view to_string(Group g);

struct AugmentedLayout {
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t q = 0;
  std::vector<Group> group;                  // per vertex
  std::vector<std::int32_t> partition;       // S and T: index into `partitions`; otherwise -1
  std::vector<std::int32_t> path_position;   // P: 0-based position on the path; otherwise -1
  std::vector<std::uint32_t> generation;     // doubling round that created the vertex; 0 = original
  std::vector<Vertex> origin;                // original vertex a clone descends from
  std::vector<std::vector<std::uint32_t>> partitions;  // the m-set A of each ordered partition (A, B), 1-based
  std::array<std::size_t, 4> rounds{};       // doubling rounds applied per group

  std::size_t group_size(Group g) const;
  std::vector<Vertex> members(Group g) const;
};

struct Construction {
  Digraph graph;
  AugmentedLayout layout;
};

/**
 * General shift digraph on injective 2k-tuples over [2m] plus one source s_A
 * and one sink t_A per m-set A, and a directed path p_1 -> ... -> p_k.
 * Tuples whose first k entries lie in A and last k in the complement point
 * to s_A and are pointed to by t_A; every s_A points to p_1 and p_k points
 * to every t_A. Requires k >= 3 and m >= k.
 */
Construction augmented_flip_free(std::size_t m, std::size_t k, std::size_t vertex_cap = kDefaultVertexCap);

/// Doubling rounds per group so that each group reaches q / 2.
std::array<std::size_t, 4> balancing_rounds(const AugmentedLayout& layout);

/// Groups in the order CoreG, S, T, P: while 2 * size < q, clone every
/// member once in ascending id. Clone labels get the suffix "@g<round>".
Construction balance_by_cloning(const Construction& base, std::size_t vertex_cap = kDefaultVertexCap);

struct BalanceAudit {
  std::size_t vertex_count = 0;
  std::array<std::size_t, 4> group_sizes{};
  std::size_t min_out_degree = 0;
  std::size_t min_t_into_core = 0;  // min over T of |N^+(t) ∩ CoreG|
  std::size_t min_core_into_s = 0;  // min over CoreG of |N^+(v) ∩ S|
  bool groups_ok = false;           // every group >= |V| / 8
  bool min_degree_ok = false;       // min out-degree >= 2^(-2k-3) |V|
  bool t_fraction_ok = false;       // >= |CoreG| / 2^(2k)
  bool core_fraction_ok = false;    // >= |S| / 2^(2k)

  bool ok() const { return groups_ok && min_degree_ok && t_fraction_ok && core_fraction_ok; }
};

/// Direct counting on a balanced construction.
BalanceAudit audit_balanced(const Construction& balanced);

/// The same audit for balance_by_cloning(base) without building it: the
/// balanced digraph is the blow-up of `base` in which every vertex of group g
/// becomes 2^rounds[g] pairwise non-adjacent copies.
BalanceAudit audit_balanced_implicit(const Construction& base);

}  // namespace cyclelab
