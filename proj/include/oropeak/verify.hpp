#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oropeak/graph.hpp"

namespace oropeak {

struct SuiteResult {
    std::string name;
    std::size_t instances = 0;
    bool passed = true;
    std::string detail; // first failure witness
};

/// Connectivity preservation and edge-subset property of the pruning
/// step, on random connected weighted graphs with n in [5, max_n].
SuiteResult verify_rng_guarantees(std::size_t instances, std::uint64_t seed,
                                std::size_t max_n = 64);

/// Fast prominence/key-col/dominator/triple computation against the
/// path-enumeration oracle on random landscapes (n <= 10), pruned first.
SuiteResult verify_oracle_equivalence(std::size_t instances, std::uint64_t seed);

/// Mountain-graph guarantees: all four clauses on oracle-sized random
/// landscapes; connectivity/peak/prominence clauses up to max_n.
SuiteResult verify_mountain_graph_suite(std::size_t instances, std::uint64_t seed,
                                        std::size_t max_n = 10);

/// Line-parent output satisfies the tree axioms (unique root at the
/// maximum, acyclic, parents strictly higher, |E| = |V|-1).
SuiteResult verify_tree_axioms(std::size_t instances, std::uint64_t seed,
                               std::size_t max_n = 64);

/// Tree axioms for one explicit landscape instance.
SuiteResult verify_tree_axioms_instance(const WeightedGraph& g, const HeightMap& h,
                                        bool use_rng);

/// The standard bundle behind `verify --random N`.
std::vector<SuiteResult> verify_all(std::size_t instances, std::uint64_t seed);

} // namespace oropeak
