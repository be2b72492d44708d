#pragma once

#include <random>

#include "oropeak/graph.hpp"

namespace oropeak {

/// Random connected graph: a random recursive spanning tree plus extra
/// random edges, weights uniform in (0,1). `extra_edges` is clamped to
/// the remaining free pairs.
WeightedGraph random_connected_graph(std::size_t n, std::size_t extra_edges,
                                     std::mt19937_64& gen);

/// Heights uniform in (0,1); continuous, so ties have probability zero.
HeightMap random_heights(std::size_t n, std::mt19937_64& gen);

} // namespace oropeak
