#include "cyclelab/random_digraph.hpp"

#include <string>

#include "cyclelab/errors.hpp"

namespace cyclelab {

Digraph random_digraph(std::size_t n, double p, std::mt19937_64& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterRejected("arc probability must lie in [0, 1]");
  Digraph d(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && unit_draw(rng) < p) d.add_arc(u, v);
    }
  }
  return d;
}

Digraph random_digraph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_digraph(n, p, rng);
}

SampledDigraph random_digraph_min_out(std::size_t n, double p, double min_out_fraction, std::uint64_t seed,
                                      std::size_t max_attempts) {
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    Digraph d = random_digraph(n, p, rng);
    if (n == 0 || static_cast<double>(min_out_degree(d)) >= min_out_fraction * static_cast<double>(n)) {
      return {std::move(d), attempt};
    }
  }
  throw ParameterRejected("no sample met the minimum out-degree fraction within " + std::to_string(max_attempts) +
                          " attempts");
}

}  // namespace cyclelab
