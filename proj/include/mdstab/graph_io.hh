#pragma once

#include <mdstab/graph.hh>

#include <string>
#include <string_view>

namespace mdstab
{
    enum class GraphFormat
    {
        graph6,
        edge_list,
        json
    };

    // Largest order representable in graph6 without the 8-byte length form.
    inline constexpr int graph6_max_order = 258047;

    // graph6 output has no trailing newline. Edge lists are "n m" followed by
    // one "u v" line per edge, u < v, sorted. JSON is {"order": n, "edges": [[u,v],...]}.
    [[nodiscard]] auto encode(const Graph & g, GraphFormat format) -> std::string;

    // Throws ParseError (with byte offset) on malformed text and Unsupported
    // for graph6 orders beyond graph6_max_order.
    [[nodiscard]] auto decode(std::string_view text, GraphFormat format) -> Graph;

    // "g6", "graph6", "edges", "edge-list", "json"; throws InvalidParameter otherwise.
    [[nodiscard]] auto parse_graph_format(std::string_view name) -> GraphFormat;

    // From a file extension: .g6, .edges, .json.
    [[nodiscard]] auto format_for_path(std::string_view path) -> GraphFormat;

    [[nodiscard]] auto read_graph_file(const std::string & path, GraphFormat format) -> Graph;
    void write_graph_file(const std::string & path, const Graph & g, GraphFormat format);
}
