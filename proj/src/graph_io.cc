#include <mdstab/errors.hh>
#include <mdstab/graph_io.hh>

#include <nlohmann/json.hpp>

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace mdstab
{
    namespace
    {
        auto encode_graph6(const Graph & g) -> std::string
        {
            int n = g.order();
            if (n > graph6_max_order)
                throw Unsupported("graph6 encoding supports order up to " + std::to_string(graph6_max_order));

            std::string out;
            if (n <= 62)
                out.push_back(static_cast<char>(n + 63));
            else {
                out.push_back(126);
                out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
                out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
                out.push_back(static_cast<char>((n & 63) + 63));
            }

            int acc = 0, filled = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i) {
                    acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
                    if (++filled == 6) {
                        out.push_back(static_cast<char>(acc + 63));
                        acc = 0;
                        filled = 0;
                    }
                }
            if (filled > 0)
                out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
            return out;
        }

        auto graph6_value(std::string_view text, std::size_t pos) -> int
        {
            if (pos >= text.size())
                throw ParseError("graph6 input truncated", pos);
            int c = static_cast<unsigned char>(text[pos]);
            if (c < 63 || c > 126)
                throw ParseError("invalid graph6 byte", pos);
            return c - 63;
        }

        auto decode_graph6(std::string_view text) -> Graph
        {
            // Optional header and trailing newline as produced by nauty tools.
            std::size_t pos = 0;
            if (text.starts_with(">>graph6<<"))
                pos = 10;
            while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
                text.remove_suffix(1);
            if (pos >= text.size())
                throw ParseError("empty graph6 input", pos);

            int n;
            if (text[pos] != 126)
                n = graph6_value(text, pos++);
            else if (pos + 1 < text.size() && text[pos + 1] == 126)
                throw Unsupported("graph6 order beyond " + std::to_string(graph6_max_order) + " is not supported");
            else {
                n = (graph6_value(text, pos + 1) << 12) | (graph6_value(text, pos + 2) << 6)
                    | graph6_value(text, pos + 3);
                pos += 4;
            }

            std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
            std::size_t expected = pos + (bits + 5) / 6;
            if (text.size() != expected)
                throw ParseError("graph6 body has wrong length for order " + std::to_string(n),
                    std::min(text.size(), expected));

            GraphBuilder b(n);
            std::size_t k = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i, ++k) {
                    int byte = graph6_value(text, pos + k / 6);
                    if ((byte >> (5 - k % 6)) & 1)
                        b.add_edge(i, j);
                }
            if (bits % 6 != 0) {
                int last = graph6_value(text, text.size() - 1);
                if (last & ((1 << (6 - bits % 6)) - 1))
                    throw ParseError("nonzero graph6 padding bits", text.size() - 1);
            }
            return std::move(b).build();
        }

        auto encode_edge_list(const Graph & g) -> std::string
        {
            std::ostringstream out;
            auto edges = g.edges();
            out << g.order() << ' ' << edges.size() << '\n';
            for (auto [u, v] : edges)
                out << u << ' ' << v << '\n';
            return out.str();
        }

        class TokenReader
        {
        public:
            explicit TokenReader(std::string_view text) :
                _text(text)
            {
            }

            // Next whitespace-separated nonnegative integer, or nullopt at end.
            auto next() -> std::optional<std::pair<long long, std::size_t>>
            {
                while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
                    ++_pos;
                if (_pos == _text.size())
                    return std::nullopt;
                std::size_t start = _pos;
                while (_pos < _text.size() && ! std::isspace(static_cast<unsigned char>(_text[_pos])))
                    ++_pos;
                long long value = 0;
                auto [ptr, ec] = std::from_chars(_text.data() + start, _text.data() + _pos, value);
                if (ec != std::errc{} || ptr != _text.data() + _pos || value < 0)
                    throw ParseError("expected a nonnegative integer", start);
                return std::pair{value, start};
            }

            auto expect(const char * what) -> std::pair<long long, std::size_t>
            {
                auto t = next();
                if (! t)
                    throw ParseError(std::string("unexpected end of input, expected ") + what, _text.size());
                return *t;
            }

        private:
            std::string_view _text;
            std::size_t _pos = 0;
        };

        auto decode_edge_list(std::string_view text) -> Graph
        {
            TokenReader reader(text);
            auto [n, n_at] = reader.expect("vertex count");
            auto [m, m_at] = reader.expect("edge count");
            if (n > graph6_max_order)
                throw ParseError("vertex count too large", n_at);
            GraphBuilder b(static_cast<int>(n));
            for (long long e = 0; e < m; ++e) {
                auto [u, u_at] = reader.expect("edge endpoint");
                auto [v, v_at] = reader.expect("edge endpoint");
                if (u >= n)
                    throw ParseError("edge endpoint out of range", u_at);
                if (v >= n)
                    throw ParseError("edge endpoint out of range", v_at);
                if (u == v)
                    throw ParseError("self-loop", u_at);
                b.add_edge(static_cast<int>(u), static_cast<int>(v));
            }
            if (auto extra = reader.next())
                throw ParseError("trailing data after " + std::to_string(m) + " edges", extra->second);
            (void)m_at;
            return std::move(b).build();
        }

        auto encode_json(const Graph & g) -> std::string
        {
            nlohmann::ordered_json j;
            j["order"] = g.order();
            j["edges"] = nlohmann::ordered_json::array();
            for (auto [u, v] : g.edges())
                j["edges"].push_back({u, v});
            return j.dump();
        }

        auto decode_json(std::string_view text) -> Graph
        {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(text);
            }
            catch (const nlohmann::json::parse_error & e) {
                throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
            }
            if (! j.is_object() || ! j.contains("order") || ! j["order"].is_number_integer())
                throw ParseError("JSON graph needs an integer \"order\"", 0);
            long long n = j["order"].get<long long>();
            if (n < 0 || n > graph6_max_order)
                throw ParseError("JSON graph order out of range", 0);
            GraphBuilder b(static_cast<int>(n));
            if (j.contains("edges")) {
                if (! j["edges"].is_array())
                    throw ParseError("JSON \"edges\" must be an array", 0);
                for (const auto & e : j["edges"]) {
                    if (! e.is_array() || e.size() != 2 || ! e[0].is_number_integer() || ! e[1].is_number_integer())
                        throw ParseError("JSON edge must be a pair of integers", 0);
                    long long u = e[0].get<long long>(), v = e[1].get<long long>();
                    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
                        throw ParseError("JSON edge [" + std::to_string(u) + "," + std::to_string(v) + "] is invalid", 0);
                    b.add_edge(static_cast<int>(u), static_cast<int>(v));
                }
            }
            return std::move(b).build();
        }
    }

    auto encode(const Graph & g, GraphFormat format) -> std::string
    {
        switch (format) {
        case GraphFormat::graph6: return encode_graph6(g);
        case GraphFormat::edge_list: return encode_edge_list(g);
        case GraphFormat::json: return encode_json(g);
        }
        throw InvalidParameter("unknown graph format");
    }

    auto decode(std::string_view text, GraphFormat format) -> Graph
    {
        switch (format) {
        case GraphFormat::graph6: return decode_graph6(text);
        case GraphFormat::edge_list: return decode_edge_list(text);
        case GraphFormat::json: return decode_json(text);
        }
        throw InvalidParameter("unknown graph format");
    }

    auto parse_graph_format(std::string_view name) -> GraphFormat
    {
        if (name == "g6" || name == "graph6")
            return GraphFormat::graph6;
        if (name == "edges" || name == "edge-list")
            return GraphFormat::edge_list;
        if (name == "json")
            return GraphFormat::json;
        throw InvalidParameter("unknown graph format '" + std::string(name) + "'");
    }

    auto format_for_path(std::string_view path) -> GraphFormat
    {
        if (path.ends_with(".g6"))
            return GraphFormat::graph6;
        if (path.ends_with(".edges"))
            return GraphFormat::edge_list;
        if (path.ends_with(".json"))
            return GraphFormat::json;
        throw InvalidParameter("cannot infer graph format from '" + std::string(path) + "'; use --format");
    }

    auto read_graph_file(const std::string & path, GraphFormat format) -> Graph
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw InvalidParameter("cannot open '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return decode(buf.str(), format);
    }

    void write_graph_file(const std::string & path, const Graph & g, GraphFormat format)
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw InvalidParameter("cannot write '" + path + "'");
        out << encode(g, format);
        if (format != GraphFormat::edge_list)
            out << '\n';
    }
}
