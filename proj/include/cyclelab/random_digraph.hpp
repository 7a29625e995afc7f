#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "cyclelab/digraph.hpp"

namespace cyclelab {

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Each ordered pair (u, v), u != v, is an arc with probability p,
/// decided in ascending (u, v) order from one mt19937_64 stream.
Digraph random_digraph(std::size_t n, double p, std::mt19937_64& rng);
Digraph random_digraph(std::size_t n, double p, std::uint64_t seed);

struct SampledDigraph {
  Digraph graph;
  std::size_t attempts = 0;
};

/// Resamples from the same stream until min out-degree >= fraction * n.
/// Throws ParameterRejected after `max_attempts` draws.
SampledDigraph random_digraph_min_out(std::size_t n, double p, double min_out_fraction, std::uint64_t seed,
                                      std::size_t max_attempts = 1000);

}  // namespace cyclelab
