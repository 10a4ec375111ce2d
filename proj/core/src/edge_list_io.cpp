#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "swarmctl/errors.hpp"
#include "swarmctl/graph.hpp"

namespace swarmctl {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

NodeId parse_node(std::string_view field, std::size_t line) {
    field = trim(field);
    NodeId v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
        throw ValidationError("line " + std::to_string(line) + ": '" + std::string(field) +
                              "' is not a non-negative node index");
    return v;
}

}  // namespace

DirectedGraph read_edge_list(std::istream& in, std::size_t node_count) {
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    std::vector<Edge> edges;
    std::size_t n = node_count;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view row = trim(line);
        if (!header_seen && lineno == 1 && row.starts_with("\xEF\xBB\xBF")) row.remove_prefix(3);
        if (row.empty()) continue;
        if (!header_seen) {
            if (row != "source,target")
                throw ValidationError("edge list must start with the header 'source,target'");
            header_seen = true;
            continue;
        }
        const auto comma = row.find(',');
        if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos)
            throw ValidationError("line " + std::to_string(lineno) +
                                  ": expected exactly two columns");
        Edge e{parse_node(row.substr(0, comma), lineno), parse_node(row.substr(comma + 1), lineno)};
        n = std::max<std::size_t>(n, std::max(e.source, e.target) + std::size_t{1});
        edges.push_back(e);
    }
    if (!header_seen) throw ValidationError("edge list is empty (missing header)");
    return DirectedGraph::build(n, std::move(edges));
}

DirectedGraph read_edge_list_file(const std::string& path, std::size_t node_count) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open edge list '" + path + "'");
    return read_edge_list(in, node_count);
}

void write_edge_list(std::ostream& out, const DirectedGraph& g) {
    out << "source,target\n";
    for (const auto& e : g.edges()) out << e.source << ',' << e.target << '\n';
}

void write_edge_list_file(const std::string& path, const DirectedGraph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write edge list '" + path + "'");
    write_edge_list(out, g);
}

}  // namespace swarmctl
