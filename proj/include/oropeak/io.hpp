#pragma once

#include <iosfwd>
#include <string>

#include "oropeak/graph.hpp"

namespace oropeak {

/// Input is UTF-8 text, one record per line. Fields split on runs of
/// tabs/commas/spaces; `#` starts a comment; blank lines are skipped.
/// `has_header` drops the first data line unparsed.

/// Lines `u v [weight]`; weight defaults to 1.0 and must be a positive
/// real. Labels are arbitrary strings mapped to dense ids in order of
/// first appearance. Self-loops, duplicate edges and malformed lines
/// are errors reported with their line number.
WeightedGraph load_edge_list(std::istream& in, bool has_header = false);
WeightedGraph load_edge_list_file(const std::string& path, bool has_header = false);

/// Lines `node height`. Every node of `g` must receive exactly one
/// nonnegative height; unknown labels and duplicates are errors.
HeightMap load_heights(std::istream& in, const WeightedGraph& g,
                       bool has_header = false);
HeightMap load_heights_file(const std::string& path, const WeightedGraph& g,
                            bool has_header = false);

/// Lines `left right`; the two label spaces are disjoint by construction
/// (the same string on both sides names two different nodes).
BipartiteGraph load_bipartite(std::istream& in, bool has_header = false);
BipartiteGraph load_bipartite_file(const std::string& path, bool has_header = false);

/// Writes `u<TAB>v<TAB>weight` lines using node labels.
void write_edge_list(std::ostream& out, const WeightedGraph& g);

/// Writes `node<TAB>height` lines using node labels.
void write_heights(std::ostream& out, const WeightedGraph& g, const HeightMap& h);

} // namespace oropeak
