#include "oropeak/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>
#include <vector>

#include "oropeak/errors.hpp"
#include "oropeak/fmt.hpp"

namespace oropeak {

namespace {

bool is_separator(char c) { return c == '\t' || c == ',' || c == ' '; }

/// Splits a line on separator runs, dropping everything after `#`.
std::vector<std::string> split_fields(std::string_view line) {
    auto hash = line.find('#');
    if (hash != std::string_view::npos)
        line = line.substr(0, hash);
    std::vector<std::string> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_separator(line[i]))
            ++i;
        std::size_t start = i;
        while (i < line.size() && !is_separator(line[i]))
            ++i;
        if (i > start) {
            std::string_view f = line.substr(start, i - start);
            if (!f.empty() && f.back() == '\r')
                f.remove_suffix(1);
            if (!f.empty())
                fields.emplace_back(f);
        }
    }
    return fields;
}

double parse_real(const std::string& text, std::size_t line_no, const char* what) {
    double value = 0.0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size())
        throw input_error("line " + std::to_string(line_no) + ": cannot parse " +
                          what + " '" + text + "'");
    return value;
}

/// Feeds non-comment lines to `fn(fields, line_no)`; honors the header flag.
template <typename Fn>
void for_each_record(std::istream& in, bool has_header, Fn&& fn) {
    std::string line;
    std::size_t line_no = 0;
    bool header_pending = has_header;
    while (std::getline(in, line)) {
        ++line_no;
        auto fields = split_fields(line);
        if (fields.empty())
            continue;
        if (header_pending) {
            header_pending = false;
            continue;
        }
        fn(fields, line_no);
    }
}

class LabelInterner {
public:
    NodeId intern(const std::string& label) {
        auto [it, inserted] = ids_.try_emplace(label, static_cast<NodeId>(labels_.size()));
        if (inserted)
            labels_.push_back(label);
        return it->second;
    }
    std::optional<NodeId> lookup(const std::string& label) const {
        auto it = ids_.find(label);
        if (it == ids_.end())
            return std::nullopt;
        return it->second;
    }
    std::vector<std::string> take_labels() { return std::move(labels_); }
    std::size_t size() const { return labels_.size(); }

private:
    std::unordered_map<std::string, NodeId> ids_;
    std::vector<std::string> labels_;
};

std::ifstream open_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open file '" + path + "'");
    return in;
}

} // namespace

WeightedGraph load_edge_list(std::istream& in, bool has_header) {
    LabelInterner interner;
    std::vector<Edge> edges;
    for_each_record(in, has_header, [&](const std::vector<std::string>& f, std::size_t line_no) {
        if (f.size() < 2 || f.size() > 3)
            throw input_error("line " + std::to_string(line_no) +
                              ": expected 'u v [weight]', got " +
                              std::to_string(f.size()) + " fields");
        NodeId u = interner.intern(f[0]);
        NodeId v = interner.intern(f[1]);
        if (u == v)
            throw input_error("line " + std::to_string(line_no) + ": self-loop at '" +
                              f[0] + "'");
        double w = f.size() == 3 ? parse_real(f[2], line_no, "weight") : 1.0;
        if (!(w > 0.0) || !std::isfinite(w))
            throw input_error("line " + std::to_string(line_no) +
                              ": nonpositive weight '" + f[2] + "'");
        edges.push_back({u, v, w});
    });
    std::size_t n = interner.size();
    try {
        return WeightedGraph(n, std::move(edges), interner.take_labels());
    } catch (const input_error& e) {
        throw input_error(std::string("edge list: ") + e.what());
    }
}

WeightedGraph load_edge_list_file(const std::string& path, bool has_header) {
    auto in = open_file(path);
    return load_edge_list(in, has_header);
}

HeightMap load_heights(std::istream& in, const WeightedGraph& g, bool has_header) {
    std::unordered_map<std::string, NodeId> ids;
    for (NodeId v = 0; v < g.node_count(); ++v)
        ids.emplace(g.label(v), v);

    HeightMap h;
    h.values.assign(g.node_count(), -1.0);
    for_each_record(in, has_header, [&](const std::vector<std::string>& f, std::size_t line_no) {
        if (f.size() != 2)
            throw input_error("line " + std::to_string(line_no) +
                              ": expected 'node height', got " +
                              std::to_string(f.size()) + " fields");
        auto it = ids.find(f[0]);
        if (it == ids.end())
            throw input_error("line " + std::to_string(line_no) + ": unknown node '" +
                              f[0] + "'");
        double value = parse_real(f[1], line_no, "height");
        if (!(value >= 0.0) || !std::isfinite(value))
            throw input_error("line " + std::to_string(line_no) + ": negative height for '" +
                              f[0] + "'");
        if (h.values[it->second] >= 0.0)
            throw input_error("line " + std::to_string(line_no) + ": duplicate height for '" +
                              f[0] + "'");
        h.values[it->second] = value;
    });
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (h.values[v] < 0.0)
            throw input_error("no height given for node '" + g.label(v) + "'");
    return h;
}

HeightMap load_heights_file(const std::string& path, const WeightedGraph& g,
                            bool has_header) {
    auto in = open_file(path);
    return load_heights(in, g, has_header);
}

BipartiteGraph load_bipartite(std::istream& in, bool has_header) {
    LabelInterner left, right;
    std::vector<std::pair<NodeId, NodeId>> edges;
    for_each_record(in, has_header, [&](const std::vector<std::string>& f, std::size_t line_no) {
        if (f.size() != 2)
            throw input_error("line " + std::to_string(line_no) +
                              ": expected 'left right', got " +
                              std::to_string(f.size()) + " fields");
        edges.emplace_back(left.intern(f[0]), right.intern(f[1]));
    });
    std::size_t nl = left.size(), nr = right.size();
    try {
        return BipartiteGraph(nl, nr, std::move(edges), left.take_labels(),
                              right.take_labels());
    } catch (const input_error& e) {
        throw input_error(std::string("bipartite input: ") + e.what());
    }
}

BipartiteGraph load_bipartite_file(const std::string& path, bool has_header) {
    auto in = open_file(path);
    return load_bipartite(in, has_header);
}

void write_edge_list(std::ostream& out, const WeightedGraph& g) {
    for (const Edge& e : g.edges())
        out << g.label(e.u) << '\t' << g.label(e.v) << '\t' << fmt_double(e.weight)
            << '\n';
}

void write_heights(std::ostream& out, const WeightedGraph& g, const HeightMap& h) {
    for (NodeId v = 0; v < g.node_count(); ++v)
        out << g.label(v) << '\t' << fmt_double(h.values[v]) << '\n';
}

} // namespace oropeak
