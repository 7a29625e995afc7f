#include "cyclelab/construct.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "cyclelab/errors.hpp"

namespace cyclelab {

namespace {

std::string tuple_label(const std::vector<std::uint32_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(t[i] + 1);
  }
  return s + ")";
}

std::string set_label(const std::vector<std::uint32_t>& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(a[i]);
  }
  return s + "}";
}

void check_cap(const BigInt& count, std::size_t cap, const std::string& what) {
  if (count > cap) {
    throw SizeRejected(what + " has " + count.str() + " vertices, above the cap of " + std::to_string(cap));
  }
}

/// Tuples over [alphabet] of length len, ascending or merely injective, in lexicographic order.
std::vector<std::vector<std::uint32_t>> tuples(std::size_t alphabet, std::size_t len, bool ascending) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  std::vector<bool> used(alphabet, false);
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == len) {
      out.push_back(cur);
      return;
    }
    const std::uint32_t from = ascending && !cur.empty() ? cur.back() + 1 : 0;
    for (std::uint32_t a = from; a < alphabet; ++a) {
      if (used[a]) continue;
      used[a] = true;
      cur.push_back(a);
      self(self);
      cur.pop_back();
      used[a] = false;
    }
  };
  rec(rec);
  return out;
}

std::string encode(std::span<const std::uint32_t> t) {
  std::string key;
  for (auto a : t) key += static_cast<char>(a);
  return key;
}

/// Shift digraph over the given tuples: x -> y iff y_i = x_{i+1} for i < len.
Digraph shift_over(const std::vector<std::vector<std::uint32_t>>& vs) {
  Digraph d(vs.size());
  if (vs.empty()) return d;
  const std::size_t len = vs.front().size();
  // Group vertices by their first len-1 entries; x's successors share x's last len-1 entries.
  std::unordered_map<std::string, std::vector<Vertex>> by_prefix;
  for (Vertex v = 0; v < vs.size(); ++v) {
    by_prefix[encode(std::span(vs[v]).first(len - 1))].push_back(v);
    d.set_label(v, tuple_label(vs[v]));
  }
  for (Vertex v = 0; v < vs.size(); ++v) {
    const auto it = by_prefix.find(encode(std::span(vs[v]).subspan(1)));
    if (it == by_prefix.end()) continue;
    for (Vertex w : it->second) {
      if (w != v) d.add_arc(v, w);
    }
  }
  return d;
}

std::size_t total_size(const AugmentedLayout& layout, const std::array<std::size_t, 4>& rounds) {
  std::size_t total = 0;
  for (std::size_t g = 0; g < 4; ++g) total += layout.group_size(kGroups[g]) << rounds[g];
  return total;
}

BalanceAudit finish_audit(BalanceAudit a, std::size_t k) {
  const std::size_t core = a.group_sizes[0];
  const std::size_t s = a.group_sizes[1];
  a.groups_ok = std::all_of(a.group_sizes.begin(), a.group_sizes.end(),
                            [&](std::size_t g) { return 8 * g >= a.vertex_count; });
  a.min_degree_ok = (static_cast<BigInt>(a.min_out_degree) << (2 * k + 3)) >= a.vertex_count;
  a.t_fraction_ok = (static_cast<BigInt>(a.min_t_into_core) << (2 * k)) >= core;
  a.core_fraction_ok = (static_cast<BigInt>(a.min_core_into_s) << (2 * k)) >= s;
  return a;
}

}  // namespace

BigInt falling_factorial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= n - i;
  return r;
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Digraph blowup_cycle(std::size_t k, std::size_t blob) {
  if (k < 2) throw ParameterRejected("blowup needs k >= 2");
  if (blob < 1) throw ParameterRejected("blowup needs blob size >= 1");
  const std::size_t blobs = k + 1;
  Digraph d(blobs * blob);
  for (std::size_t i = 0; i < blobs; ++i) {
    const std::size_t next = (i + 1) % blobs;
    for (std::size_t a = 0; a < blob; ++a) {
      const auto u = static_cast<Vertex>(i * blob + a);
      for (std::size_t b = a + 1; b < blob; ++b) d.add_arc(u, static_cast<Vertex>(i * blob + b));
      for (std::size_t b = 0; b < blob; ++b) d.add_arc(u, static_cast<Vertex>(next * blob + b));
    }
  }
  return d;
}

Digraph shift_digraph(std::size_t m, std::size_t r, std::size_t vertex_cap) {
  if (r < 1 || r > m) throw ParameterRejected("shift digraph needs 1 <= r <= m");
  if (m > 64) throw ParameterRejected("shift digraph supports m <= 64");
  check_cap(binomial(m, r), vertex_cap, "shift digraph S(" + std::to_string(m) + "," + std::to_string(r) + ")");
  return shift_over(tuples(m, r, true));
}

Digraph general_shift_digraph(std::size_t m, std::size_t k, std::size_t vertex_cap) {
  if (k < 1 || k > m) throw ParameterRejected("general shift digraph needs 1 <= k <= m");
  if (2 * m > 16) throw ParameterRejected("general shift digraph supports m <= 8");
  check_cap(falling_factorial(2 * m, 2 * k), vertex_cap,
            "general shift digraph G(" + std::to_string(2 * m) + "," + std::to_string(2 * k) + ")");
  return shift_over(tuples(2 * m, 2 * k, false));
}

std::string_view to_string(Group g) {
  switch (g) {
    case Group::CoreG:
      return "CoreG";
    case Group::S:
      return "S";
    case Group::T:
      return "T";
    case Group::P:
      return "P";
  }
  return "?";
}

std::size_t AugmentedLayout::group_size(Group g) const {
  return static_cast<std::size_t>(std::count(group.begin(), group.end(), g));
}

std::vector<Vertex> AugmentedLayout::members(Group g) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < group.size(); ++v) {
    if (group[v] == g) out.push_back(v);
  }
  return out;
}

Construction augmented_flip_free(std::size_t m, std::size_t k, std::size_t vertex_cap) {
  if (k < 3 || m < k) throw ParameterRejected("augmented construction needs k >= 3 and m >= k");
  if (2 * m > 16) throw ParameterRejected("augmented construction supports m <= 8");
  const BigInt core_count = falling_factorial(2 * m, 2 * k);
  const BigInt part_count = binomial(2 * m, m);
  const BigInt total = core_count + 2 * part_count + k;
  if (total > vertex_cap) {
    throw SizeRejected("augmented construction has " + core_count.str() + " + 2*" + part_count.str() + " + " +
                       std::to_string(k) + " = " + total.str() + " vertices, above the cap of " +
                       std::to_string(vertex_cap));
  }

  Construction c;
  AugmentedLayout& lay = c.layout;
  lay.m = m;
  lay.k = k;
  lay.q = static_cast<std::size_t>(std::max({core_count, part_count, BigInt(k)}));

  c.graph = general_shift_digraph(m, k, vertex_cap);
  const auto core_tuples = tuples(2 * m, 2 * k, false);
  const std::size_t core = core_tuples.size();
  auto tag = [&](Group g, std::int32_t part, std::int32_t pos) {
    lay.group.push_back(g);
    lay.partition.push_back(part);
    lay.path_position.push_back(pos);
    lay.generation.push_back(0);
    lay.origin.push_back(static_cast<Vertex>(lay.origin.size()));
  };
  for (std::size_t v = 0; v < core; ++v) tag(Group::CoreG, -1, -1);

  std::vector<std::uint32_t> masks;
  for (const auto& a : tuples(2 * m, m, true)) {
    std::uint32_t mask = 0;
    std::vector<std::uint32_t> one_based;
    for (auto x : a) {
      mask |= 1U << x;
      one_based.push_back(x + 1);
    }
    masks.push_back(mask);
    lay.partitions.push_back(std::move(one_based));
  }
  const std::size_t parts = masks.size();
  std::vector<Vertex> s_of(parts), t_of(parts);
  for (std::size_t i = 0; i < parts; ++i) {
    s_of[i] = c.graph.add_vertex("s" + set_label(lay.partitions[i]));
    tag(Group::S, static_cast<std::int32_t>(i), -1);
  }
  for (std::size_t i = 0; i < parts; ++i) {
    t_of[i] = c.graph.add_vertex("t" + set_label(lay.partitions[i]));
    tag(Group::T, static_cast<std::int32_t>(i), -1);
  }
  std::vector<Vertex> path(k);
  for (std::size_t i = 0; i < k; ++i) {
    path[i] = c.graph.add_vertex("p" + std::to_string(i + 1));
    tag(Group::P, -1, static_cast<std::int32_t>(i));
  }

  // Split tuples: first k entries in A, last k in B.
  for (Vertex v = 0; v < core; ++v) {
    std::uint32_t head = 0;
    std::uint32_t tail = 0;
    for (std::size_t i = 0; i < k; ++i) head |= 1U << core_tuples[v][i];
    for (std::size_t i = k; i < 2 * k; ++i) tail |= 1U << core_tuples[v][i];
    for (std::size_t i = 0; i < parts; ++i) {
      if ((head & ~masks[i]) == 0 && (tail & masks[i]) == 0) {
        c.graph.add_arc(v, s_of[i]);
        c.graph.add_arc(t_of[i], v);
      }
    }
  }
  for (std::size_t i = 0; i < parts; ++i) {
    c.graph.add_arc(s_of[i], path.front());
    c.graph.add_arc(path.back(), t_of[i]);
  }
  for (std::size_t i = 0; i + 1 < k; ++i) c.graph.add_arc(path[i], path[i + 1]);
  return c;
}

std::array<std::size_t, 4> balancing_rounds(const AugmentedLayout& layout) {
  std::array<std::size_t, 4> rounds{};
  for (std::size_t g = 0; g < 4; ++g) {
    std::size_t size = layout.group_size(kGroups[g]);
    if (size == 0) continue;
    while (2 * size < layout.q) {
      size *= 2;
      ++rounds[g];
    }
  }
  return rounds;
}

Construction balance_by_cloning(const Construction& base, std::size_t vertex_cap) {
  const auto rounds = balancing_rounds(base.layout);
  const std::size_t total = total_size(base.layout, rounds);
  if (total > vertex_cap) {
    throw SizeRejected("balanced construction has " + std::to_string(total) + " vertices, above the cap of " +
                       std::to_string(vertex_cap));
  }
  Construction c = base;
  AugmentedLayout& lay = c.layout;
  for (std::size_t g = 0; g < 4; ++g) {
    for (std::size_t round = 1; round <= rounds[g]; ++round) {
      const std::vector<Vertex> members = lay.members(kGroups[g]);
      const std::string suffix = "@g" + std::to_string(round);
      for (Vertex v : members) {
        c.graph.clone_vertex(v, suffix);
        lay.group.push_back(lay.group[v]);
        lay.partition.push_back(lay.partition[v]);
        lay.path_position.push_back(lay.path_position[v]);
        lay.generation.push_back(static_cast<std::uint32_t>(round));
        lay.origin.push_back(lay.origin[v]);
      }
    }
    lay.rounds[g] = base.layout.rounds[g] + rounds[g];
  }
  return c;
}

BalanceAudit audit_balanced(const Construction& balanced) {
  const Digraph& d = balanced.graph;
  const AugmentedLayout& lay = balanced.layout;
  BalanceAudit a;
  a.vertex_count = d.vertex_count();
  for (std::size_t g = 0; g < 4; ++g) a.group_sizes[g] = lay.group_size(kGroups[g]);
  a.min_out_degree = d.empty() ? 0 : min_out_degree(d);
  a.min_t_into_core = std::numeric_limits<std::size_t>::max();
  a.min_core_into_s = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (lay.group[v] != Group::T && lay.group[v] != Group::CoreG) continue;
    const Group want = lay.group[v] == Group::T ? Group::CoreG : Group::S;
    std::size_t count = 0;
    for (Vertex w : d.out(v)) count += lay.group[w] == want ? 1 : 0;
    auto& slot = lay.group[v] == Group::T ? a.min_t_into_core : a.min_core_into_s;
    slot = std::min(slot, count);
  }
  return finish_audit(a, lay.k);
}

BalanceAudit audit_balanced_implicit(const Construction& base) {
  const Digraph& d = base.graph;
  const AugmentedLayout& lay = base.layout;
  const auto rounds = balancing_rounds(lay);
  auto mult = [&](Vertex v) { return std::size_t{1} << rounds[static_cast<std::size_t>(lay.group[v])]; };
  BalanceAudit a;
  for (std::size_t g = 0; g < 4; ++g) a.group_sizes[g] = lay.group_size(kGroups[g]) << rounds[g];
  a.vertex_count = total_size(lay, rounds);
  a.min_out_degree = std::numeric_limits<std::size_t>::max();
  a.min_t_into_core = std::numeric_limits<std::size_t>::max();
  a.min_core_into_s = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    std::size_t out = 0;
    std::size_t into_core = 0;
    std::size_t into_s = 0;
    for (Vertex w : d.out(v)) {
      out += mult(w);
      if (lay.group[w] == Group::CoreG) into_core += mult(w);
      if (lay.group[w] == Group::S) into_s += mult(w);
    }
    a.min_out_degree = std::min(a.min_out_degree, out);
    if (lay.group[v] == Group::T) a.min_t_into_core = std::min(a.min_t_into_core, into_core);
    if (lay.group[v] == Group::CoreG) a.min_core_into_s = std::min(a.min_core_into_s, into_s);
  }
  if (d.empty()) a.min_out_degree = 0;
  return finish_audit(a, lay.k);
}

}  // namespace cyclelab
