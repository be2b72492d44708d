#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"
#include "oropeak/errors.hpp"
#include "oropeak/fmt.hpp"
#include "oropeak/serialize.hpp"

namespace oropeak {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::map<NodeId, double> prominence_by_peak(const std::vector<PeakRecord>& records) {
    std::map<NodeId, double> result;
    for (const PeakRecord& rec : records)
        result.emplace(rec.peak, rec.prominence);
    return result;
}

ordered_json node_entry(NodeId id, const std::string& label, double height,
                        const std::optional<double>& prom) {
    ordered_json entry;
    entry["id"] = id;
    entry["label"] = label;
    entry["height"] = height;
    if (prom)
        entry["prominence"] = *prom;
    return entry;
}

ordered_json parse_document(const std::string& text, const char* expected_schema) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("schema", "") != expected_schema)
        throw input_error(std::string("expected a '") + expected_schema +
                          "' document");
    return doc;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

} // namespace

MgDoc make_mg_doc(const MountainGraph& mg, const WeightedGraph& g,
                  const HeightMap& h, const std::vector<PeakRecord>& records) {
    MgDoc doc;
    doc.mg = mg;
    auto prom = prominence_by_peak(records);
    for (std::size_t i = 0; i < mg.nodes.size(); ++i) {
        NodeId v = mg.nodes[i];
        doc.labels.push_back(g.label(v));
        doc.heights.push_back(h.values[v]);
        if (mg.roles[i] == Role::Peak)
            doc.prominence.emplace_back(prom.at(v));
        else
            doc.prominence.emplace_back(std::nullopt);
    }
    return doc;
}

PgDoc make_pg_doc(const PeakGraph& pg, const WeightedGraph& g, const HeightMap& h,
                  const std::vector<PeakRecord>& records) {
    PgDoc doc;
    doc.pg = pg;
    auto prom = prominence_by_peak(records);
    for (NodeId v : pg.peaks) {
        doc.labels.push_back(g.label(v));
        doc.heights.push_back(h.values[v]);
        doc.prominence.push_back(prom.at(v));
    }
    return doc;
}

LpDoc make_lp_doc(const LineParentTree& tree, const WeightedGraph& g,
                  const HeightMap& h, const std::vector<PeakRecord>& records) {
    LpDoc doc;
    doc.tree = tree;
    auto prom = prominence_by_peak(records);
    for (NodeId v : tree.peaks) {
        doc.labels.push_back(g.label(v));
        doc.heights.push_back(h.values[v]);
        doc.prominence.push_back(prom.at(v));
    }
    return doc;
}

std::string to_dot(const MgDoc& doc) {
    std::ostringstream out;
    out << "graph mountain {\n";
    for (std::size_t i = 0; i < doc.mg.nodes.size(); ++i) {
        bool peak = doc.mg.roles[i] == Role::Peak;
        out << "  \"" << dot_escape(doc.labels[i]) << "\" [shape="
            << (peak ? "triangle" : "circle") << ", label=\""
            << dot_escape(doc.labels[i]) << "\\nh=" << fmt_double(doc.heights[i]);
        if (peak && doc.prominence[i])
            out << "\\nprom=" << fmt_double(*doc.prominence[i]);
        out << "\"];\n";
    }
    for (auto [a, b] : doc.mg.edges) {
        auto ia = doc.mg.index_of(a), ib = doc.mg.index_of(b);
        out << "  \"" << dot_escape(doc.labels[*ia]) << "\" -- \""
            << dot_escape(doc.labels[*ib]) << "\";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const PgDoc& doc) {
    std::ostringstream out;
    out << "graph peaks {\n";
    for (std::size_t i = 0; i < doc.pg.peaks.size(); ++i)
        out << "  \"" << dot_escape(doc.labels[i]) << "\" [shape=triangle, label=\""
            << dot_escape(doc.labels[i]) << "\\nh=" << fmt_double(doc.heights[i])
            << "\\nprom=" << fmt_double(doc.prominence[i]) << "\"];\n";
    auto index_of = [&](NodeId v) {
        return static_cast<std::size_t>(
            std::lower_bound(doc.pg.peaks.begin(), doc.pg.peaks.end(), v) -
            doc.pg.peaks.begin());
    };
    for (auto [a, b] : doc.pg.edges)
        out << "  \"" << dot_escape(doc.labels[index_of(a)]) << "\" -- \""
            << dot_escape(doc.labels[index_of(b)]) << "\";\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const LpDoc& doc) {
    std::ostringstream out;
    out << "digraph lineparents {\n";
    for (std::size_t i = 0; i < doc.tree.peaks.size(); ++i)
        out << "  \"" << dot_escape(doc.labels[i]) << "\" [shape=triangle, label=\""
            << dot_escape(doc.labels[i]) << "\\nh=" << fmt_double(doc.heights[i])
            << "\\nprom=" << fmt_double(doc.prominence[i]) << "\"];\n";
    for (std::size_t i = 0; i < doc.tree.peaks.size(); ++i) {
        if (!doc.tree.parent[i])
            continue;
        auto pi = doc.tree.index_of(*doc.tree.parent[i]);
        out << "  \"" << dot_escape(doc.labels[*pi]) << "\" -> \""
            << dot_escape(doc.labels[i]) << "\"";
        if (doc.tree.via_col[i])
            out << " [label=\"via " << *doc.tree.via_col[i] << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_json(const MgDoc& doc) {
    ordered_json j;
    j["schema"] = "oropeak.mg.v1";
    j["nodes"] = ordered_json::array();
    for (std::size_t i = 0; i < doc.mg.nodes.size(); ++i) {
        auto entry = node_entry(doc.mg.nodes[i], doc.labels[i], doc.heights[i],
                                doc.prominence[i]);
        entry["role"] = doc.mg.roles[i] == Role::Peak ? "peak" : "col";
        j["nodes"].push_back(std::move(entry));
    }
    j["edges"] = ordered_json::array();
    for (auto [a, b] : doc.mg.edges)
        j["edges"].push_back(ordered_json::array({a, b}));
    return dump(j);
}

std::string to_json(const PgDoc& doc) {
    ordered_json j;
    j["schema"] = "oropeak.pg.v1";
    j["nodes"] = ordered_json::array();
    for (std::size_t i = 0; i < doc.pg.peaks.size(); ++i)
        j["nodes"].push_back(node_entry(doc.pg.peaks[i], doc.labels[i],
                                        doc.heights[i], doc.prominence[i]));
    j["edges"] = ordered_json::array();
    for (auto [a, b] : doc.pg.edges)
        j["edges"].push_back(ordered_json::array({a, b}));
    j["triples"] = ordered_json::array();
    for (const Triple& t : doc.pg.triples)
        j["triples"].push_back(ordered_json::array({t.peak, t.col, t.endpoint}));
    return dump(j);
}

std::string to_json(const LpDoc& doc) {
    ordered_json j;
    j["schema"] = "oropeak.lp.v1";
    j["root"] = doc.tree.root;
    j["nodes"] = ordered_json::array();
    for (std::size_t i = 0; i < doc.tree.peaks.size(); ++i) {
        auto entry = node_entry(doc.tree.peaks[i], doc.labels[i], doc.heights[i],
                                doc.prominence[i]);
        if (doc.tree.parent[i])
            entry["parent"] = *doc.tree.parent[i];
        if (doc.tree.via_col[i])
            entry["via_col"] = *doc.tree.via_col[i];
        entry["depth"] = doc.tree.depth[i];
        j["nodes"].push_back(std::move(entry));
    }
    return dump(j);
}

MgDoc mg_doc_from_json(const std::string& text) {
    auto j = parse_document(text, "oropeak.mg.v1");
    MgDoc doc;
    for (const auto& entry : j.at("nodes")) {
        doc.mg.nodes.push_back(entry.at("id").get<NodeId>());
        std::string role = entry.at("role").get<std::string>();
        if (role != "peak" && role != "col")
            throw input_error("unknown node role '" + role + "'");
        doc.mg.roles.push_back(role == "peak" ? Role::Peak : Role::KeyCol);
        doc.labels.push_back(entry.at("label").get<std::string>());
        doc.heights.push_back(entry.at("height").get<double>());
        if (entry.contains("prominence"))
            doc.prominence.emplace_back(entry.at("prominence").get<double>());
        else
            doc.prominence.emplace_back(std::nullopt);
    }
    for (const auto& e : j.at("edges"))
        doc.mg.edges.emplace_back(e.at(0).get<NodeId>(), e.at(1).get<NodeId>());
    return doc;
}

PgDoc pg_doc_from_json(const std::string& text) {
    auto j = parse_document(text, "oropeak.pg.v1");
    PgDoc doc;
    for (const auto& entry : j.at("nodes")) {
        doc.pg.peaks.push_back(entry.at("id").get<NodeId>());
        doc.labels.push_back(entry.at("label").get<std::string>());
        doc.heights.push_back(entry.at("height").get<double>());
        doc.prominence.push_back(entry.at("prominence").get<double>());
    }
    for (const auto& e : j.at("edges"))
        doc.pg.edges.emplace_back(e.at(0).get<NodeId>(), e.at(1).get<NodeId>());
    for (const auto& t : j.at("triples"))
        doc.pg.triples.push_back(
            {t.at(0).get<NodeId>(), t.at(1).get<NodeId>(), t.at(2).get<NodeId>()});
    return doc;
}

LpDoc lp_doc_from_json(const std::string& text) {
    auto j = parse_document(text, "oropeak.lp.v1");
    LpDoc doc;
    doc.tree.root = j.at("root").get<NodeId>();
    for (const auto& entry : j.at("nodes")) {
        doc.tree.peaks.push_back(entry.at("id").get<NodeId>());
        doc.labels.push_back(entry.at("label").get<std::string>());
        doc.heights.push_back(entry.at("height").get<double>());
        doc.prominence.push_back(entry.at("prominence").get<double>());
        if (entry.contains("parent"))
            doc.tree.parent.emplace_back(entry.at("parent").get<NodeId>());
        else
            doc.tree.parent.emplace_back(std::nullopt);
        if (entry.contains("via_col"))
            doc.tree.via_col.emplace_back(entry.at("via_col").get<NodeId>());
        else
            doc.tree.via_col.emplace_back(std::nullopt);
        doc.tree.depth.push_back(entry.at("depth").get<std::uint32_t>());
    }
    return doc;
}

} // namespace oropeak
