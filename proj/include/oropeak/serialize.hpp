#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oropeak/mountain.hpp"

namespace oropeak {

/// Self-contained documents: structure plus the per-node data (labels,
/// heights, prominence) that exports carry, so a parsed document can be
/// re-exported byte-identically.

struct MgDoc {
    MountainGraph mg;
    std::vector<std::string> labels;                 // parallel to mg.nodes
    std::vector<double> heights;                     // parallel to mg.nodes
    std::vector<std::optional<double>> prominence;   // peaks only, else absent
};

struct PgDoc {
    PeakGraph pg;
    std::vector<std::string> labels;                 // parallel to pg.peaks
    std::vector<double> heights;
    std::vector<double> prominence;
};

struct LpDoc {
    LineParentTree tree;
    std::vector<std::string> labels;                 // parallel to tree.peaks
    std::vector<double> heights;
    std::vector<double> prominence;
};

MgDoc make_mg_doc(const MountainGraph& mg, const WeightedGraph& g,
                  const HeightMap& h, const std::vector<PeakRecord>& records);
PgDoc make_pg_doc(const PeakGraph& pg, const WeightedGraph& g, const HeightMap& h,
                  const std::vector<PeakRecord>& records);
LpDoc make_lp_doc(const LineParentTree& tree, const WeightedGraph& g,
                  const HeightMap& h, const std::vector<PeakRecord>& records);

/// Graphviz text. Peaks render as triangles, key cols as circles; labels
/// carry heights (and prominence for peaks). Line-parent trees are
/// directed, parent -> child, edge-labelled with the winning key col.
std::string to_dot(const MgDoc& doc);
std::string to_dot(const PgDoc& doc);
std::string to_dot(const LpDoc& doc);

/// Stable JSON with a schema marker ("oropeak.mg.v1" / "oropeak.pg.v1" /
/// "oropeak.lp.v1"). Exporting a parsed document reproduces the input
/// bytes exactly.
std::string to_json(const MgDoc& doc);
std::string to_json(const PgDoc& doc);
std::string to_json(const LpDoc& doc);

MgDoc mg_doc_from_json(const std::string& text);
PgDoc pg_doc_from_json(const std::string& text);
LpDoc lp_doc_from_json(const std::string& text);

} // namespace oropeak
