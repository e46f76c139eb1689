#pragma once

#include <mdstab/rational.hh>
#include <mdstab/vertex_set.hh>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mdstab
{
    struct Edge
    {
        int u, v;

        friend auto operator<=>(const Edge &, const Edge &) = default;
    };

    class GraphBuilder;

    // Finite simple undirected graph on vertices 0..order-1, stored as a dense
    // bit-matrix. Immutable once built; equality is labelled equality.
    class Graph
    {
    public:
        Graph() = default;

        // Throws InvalidParameter on a loop or an out-of-range endpoint.
        // Duplicate edges are collapsed.
        static auto from_edges(int order, std::span<const Edge> edges) -> Graph;

        static auto empty(int order) -> Graph;

        [[nodiscard]] auto order() const -> int { return _order; }

        [[nodiscard]] auto adjacent(int u, int v) const -> bool
        {
            return (_bits[row_offset(u) + (v >> 6)] >> (v & 63)) & 1;
        }

        [[nodiscard]] auto row(int v) const -> std::span<const std::uint64_t>
        {
            return {_bits.data() + row_offset(v), _words_per_row};
        }

        [[nodiscard]] auto neighbours(int v) const -> VertexSet { return VertexSet(_order, row(v)); }

        [[nodiscard]] auto degree(int v) const -> int;

        [[nodiscard]] auto edge_count() const -> std::int64_t;

        // Sorted, each edge once with u < v.
        [[nodiscard]] auto edges() const -> std::vector<Edge>;

        [[nodiscard]] auto min_degree() const -> int;

        friend auto operator==(const Graph &, const Graph &) -> bool = default;

    private:
        friend class GraphBuilder;

        [[nodiscard]] auto row_offset(int v) const -> std::size_t
        {
            return static_cast<std::size_t>(v) * _words_per_row;
        }

        int _order = 0;
        std::size_t _words_per_row = 0;
        std::vector<std::uint64_t> _bits;
    };

    // Mutable staging area for building a Graph.
    class GraphBuilder
    {
    public:
        explicit GraphBuilder(int order);
        explicit GraphBuilder(const Graph & start);

        void add_edge(int u, int v);
        void remove_edge(int u, int v);

        [[nodiscard]] auto order() const -> int { return _graph._order; }
        [[nodiscard]] auto adjacent(int u, int v) const -> bool { return _graph.adjacent(u, v); }

        [[nodiscard]] auto build() && -> Graph { return std::move(_graph); }
        [[nodiscard]] auto build() const & -> Graph { return _graph; }

    private:
        void check(int u, int v) const;
        void flip(int u, int v, bool on);

        Graph _graph;
    };

    // Nonnegative integer vertex weights on a base graph. Zero weights are
    // allowed and drop the vertex from the blow-up.
    class Weighting
    {
    public:
        // Throws InvalidParameter unless weights.size() == base.order(), all
        // weights are nonnegative and at least one is positive.
        Weighting(Graph base, std::vector<int> weights);

        [[nodiscard]] auto base() const -> const Graph & { return _base; }
        [[nodiscard]] auto weights() const -> const std::vector<int> & { return _weights; }
        [[nodiscard]] auto total() const -> int;

    private:
        Graph _base;
        std::vector<int> _weights;
    };

    struct DegreeProfile
    {
        int min_degree;
        int max_degree;
        bool regular;

        friend auto operator==(const DegreeProfile &, const DegreeProfile &) -> bool = default;
    };

    // Named constructions. Each throws InvalidParameter below its minimum.
    [[nodiscard]] auto make_cycle(int n) -> Graph;              // n >= 3
    [[nodiscard]] auto make_complete(int r) -> Graph;           // r >= 1
    [[nodiscard]] auto make_wheel(int k) -> Graph;              // k >= 3; hub is vertex k
    [[nodiscard]] auto make_cycle_complement(int n) -> Graph;   // n >= 5
    [[nodiscard]] auto make_petersen() -> Graph;                // outer 0..4, inner 5..9
    [[nodiscard]] auto make_star(int leaves) -> Graph;          // hub is vertex 0

    // Clique of order r, allowing r = 0 (the identity for join).
    [[nodiscard]] auto make_clique_or_empty(int r) -> Graph;

    [[nodiscard]] auto complement(const Graph & g) -> Graph;

    // g on 0..|g|-1, h on |g|..|g|+|h|-1, all cross pairs adjacent.
    [[nodiscard]] auto join(const Graph & g, const Graph & h) -> Graph;

    [[nodiscard]] auto disjoint_union(const Graph & g, const Graph & h) -> Graph;

    // Vertices keep their relative order.
    [[nodiscard]] auto induced_subgraph(const Graph & g, std::span<const int> vertices) -> Graph;
    [[nodiscard]] auto induced_subgraph(const Graph & g, const VertexSet & vertices) -> Graph;

    // Base vertex v becomes weights[v] consecutive vertices, classes in base order.
    [[nodiscard]] auto blow_up(const Weighting & w) -> Graph;

    // Class sizes for a balanced blow-up: larger classes on the lowest indices.
    [[nodiscard]] auto balanced_class_sizes(int base_order, int n) -> std::vector<int>;

    // Throws InvalidParameter when n < base.order() or base is empty.
    [[nodiscard]] auto balanced_blow_up(const Graph & base, int n) -> Graph;

    // Uniform blow-up G(t).
    [[nodiscard]] auto blow_up_uniform(const Graph & base, int t) -> Graph;

    // Length of a shortest odd cycle; nullopt iff bipartite.
    [[nodiscard]] auto odd_girth(const Graph & g) -> std::optional<int>;

    [[nodiscard]] auto is_bipartite(const Graph & g) -> bool;

    // Throws InvalidParameter on the empty graph.
    [[nodiscard]] auto degree_profile(const Graph & g) -> DegreeProfile;

    // True iff min degree >= ratio * order.
    [[nodiscard]] auto min_degree_at_least(const Graph & g, const Rational & ratio) -> bool;

    // Repeatedly deletes the lowest-indexed vertex whose degree is below
    // threshold * n, n being the order of the input graph, until none remain.
    // Survivors keep their relative order.
    [[nodiscard]] auto peel_min_degree(const Graph & g, const Rational & threshold) -> Graph;

    // Maps every vertex through `mapping` and checks the image of each edge is an edge of target.
    [[nodiscard]] auto is_edge_preserving(const Graph & from, const Graph & target, std::span<const int> mapping)
        -> bool;
}
