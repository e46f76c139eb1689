#include <mdstab/errors.hh>
#include <mdstab/graph.hh>

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <string>

namespace mdstab
{
    auto Graph::from_edges(int order, std::span<const Edge> edges) -> Graph
    {
        GraphBuilder b(order);
        for (auto [u, v] : edges)
            b.add_edge(u, v);
        return std::move(b).build();
    }

    auto Graph::empty(int order) -> Graph
    {
        return GraphBuilder(order).build();
    }

    auto Graph::degree(int v) const -> int
    {
        int d = 0;
        for (auto w : row(v))
            d += std::popcount(w);
        return d;
    }

    auto Graph::edge_count() const -> std::int64_t
    {
        std::int64_t twice = 0;
        for (auto w : _bits)
            twice += std::popcount(w);
        return twice / 2;
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> out;
        for (int u = 0; u < _order; ++u) {
            auto n = neighbours(u);
            for (int v = n.next(u + 1); v != -1; v = n.next(v + 1))
                out.push_back({u, v});
        }
        return out;
    }

    auto Graph::min_degree() const -> int
    {
        int best = _order;
        for (int v = 0; v < _order; ++v)
            best = std::min(best, degree(v));
        return best;
    }

    GraphBuilder::GraphBuilder(int order)
    {
        if (order < 0)
            throw InvalidParameter("graph order must be nonnegative");
        _graph._order = order;
        _graph._words_per_row = (static_cast<std::size_t>(order) + 63) / 64;
        _graph._bits.assign(_graph._words_per_row * order, 0);
    }

    GraphBuilder::GraphBuilder(const Graph & start) :
        _graph(start)
    {
    }

    void GraphBuilder::check(int u, int v) const
    {
        if (u < 0 || v < 0 || u >= order() || v >= order())
            throw InvalidParameter("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw InvalidParameter("self-loop at vertex " + std::to_string(u));
    }

    void GraphBuilder::flip(int u, int v, bool on)
    {
        auto & bits = _graph._bits;
        auto bit_u = std::uint64_t{1} << (v & 63);
        auto bit_v = std::uint64_t{1} << (u & 63);
        auto & wu = bits[_graph.row_offset(u) + (v >> 6)];
        auto & wv = bits[_graph.row_offset(v) + (u >> 6)];
        if (on) {
            wu |= bit_u;
            wv |= bit_v;
        }
        else {
            wu &= ~bit_u;
            wv &= ~bit_v;
        }
    }

    void GraphBuilder::add_edge(int u, int v)
    {
        check(u, v);
        flip(u, v, true);
    }

    void GraphBuilder::remove_edge(int u, int v)
    {
        check(u, v);
        flip(u, v, false);
    }

    Weighting::Weighting(Graph base, std::vector<int> weights) :
        _base(std::move(base)),
        _weights(std::move(weights))
    {
        if (static_cast<int>(_weights.size()) != _base.order())
            throw InvalidParameter("weighting has " + std::to_string(_weights.size()) + " weights for a graph of order "
                + std::to_string(_base.order()));
        if (std::any_of(_weights.begin(), _weights.end(), [](int w) { return w < 0; }))
            throw InvalidParameter("weights must be nonnegative");
        if (total() < 1)
            throw InvalidParameter("weighting must have positive total weight");
    }

    auto Weighting::total() const -> int
    {
        return std::accumulate(_weights.begin(), _weights.end(), 0);
    }

    auto make_cycle(int n) -> Graph
    {
        if (n < 3)
            throw InvalidParameter("cycle needs at least 3 vertices");
        GraphBuilder b(n);
        for (int i = 0; i < n; ++i)
            b.add_edge(i, (i + 1) % n);
        return std::move(b).build();
    }

    auto make_clique_or_empty(int r) -> Graph
    {
        if (r < 0)
            throw InvalidParameter("clique order must be nonnegative");
        GraphBuilder b(r);
        for (int u = 0; u < r; ++u)
            for (int v = u + 1; v < r; ++v)
                b.add_edge(u, v);
        return std::move(b).build();
    }

    auto make_complete(int r) -> Graph
    {
        if (r < 1)
            throw InvalidParameter("complete graph needs at least 1 vertex");
        return make_clique_or_empty(r);
    }

    auto make_wheel(int k) -> Graph
    {
        if (k < 3)
            throw InvalidParameter("wheel rim needs at least 3 vertices");
        GraphBuilder b(k + 1);
        for (int i = 0; i < k; ++i) {
            b.add_edge(i, (i + 1) % k);
            b.add_edge(i, k);
        }
        return std::move(b).build();
    }

    auto make_cycle_complement(int n) -> Graph
    {
        if (n < 5)
            throw InvalidParameter("cycle complement needs at least 5 vertices");
        return complement(make_cycle(n));
    }

    auto make_petersen() -> Graph
    {
        GraphBuilder b(10);
        for (int i = 0; i < 5; ++i) {
            b.add_edge(i, (i + 1) % 5);
            b.add_edge(i, i + 5);
            b.add_edge(i + 5, (i + 2) % 5 + 5);
        }
        return std::move(b).build();
    }

    auto make_star(int leaves) -> Graph
    {
        if (leaves < 0)
            throw InvalidParameter("star needs a nonnegative number of leaves");
        GraphBuilder b(leaves + 1);
        for (int i = 1; i <= leaves; ++i)
            b.add_edge(0, i);
        return std::move(b).build();
    }

    auto complement(const Graph & g) -> Graph
    {
        GraphBuilder b(g.order());
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (! g.adjacent(u, v))
                    b.add_edge(u, v);
        return std::move(b).build();
    }

    auto join(const Graph & g, const Graph & h) -> Graph
    {
        int off = g.order();
        GraphBuilder b(g.order() + h.order());
        for (auto [u, v] : g.edges())
            b.add_edge(u, v);
        for (auto [u, v] : h.edges())
            b.add_edge(u + off, v + off);
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < h.order(); ++v)
                b.add_edge(u, v + off);
        return std::move(b).build();
    }

    auto disjoint_union(const Graph & g, const Graph & h) -> Graph
    {
        int off = g.order();
        GraphBuilder b(g.order() + h.order());
        for (auto [u, v] : g.edges())
            b.add_edge(u, v);
        for (auto [u, v] : h.edges())
            b.add_edge(u + off, v + off);
        return std::move(b).build();
    }

    auto induced_subgraph(const Graph & g, std::span<const int> vertices) -> Graph
    {
        int k = static_cast<int>(vertices.size());
        GraphBuilder b(k);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (g.adjacent(vertices[i], vertices[j]))
                    b.add_edge(i, j);
        return std::move(b).build();
    }

    auto induced_subgraph(const Graph & g, const VertexSet & vertices) -> Graph
    {
        auto members = vertices.members();
        return induced_subgraph(g, members);
    }

    auto blow_up(const Weighting & w) -> Graph
    {
        const auto & base = w.base();
        const auto & weights = w.weights();
        std::vector<int> start(base.order() + 1, 0);
        for (int v = 0; v < base.order(); ++v)
            start[v + 1] = start[v] + weights[v];

        GraphBuilder b(start.back());
        for (auto [u, v] : base.edges())
            for (int x = start[u]; x < start[u + 1]; ++x)
                for (int y = start[v]; y < start[v + 1]; ++y)
                    b.add_edge(x, y);
        return std::move(b).build();
    }

    auto balanced_class_sizes(int base_order, int n) -> std::vector<int>
    {
        if (base_order < 1)
            throw InvalidParameter("balanced blow-up needs a nonempty base");
        if (n < base_order)
            throw InvalidParameter("balanced blow-up on " + std::to_string(n) + " vertices of a base of order "
                + std::to_string(base_order) + " would leave an empty class");
        std::vector<int> sizes(base_order, n / base_order);
        for (int v = 0; v < n % base_order; ++v)
            ++sizes[v];
        return sizes;
    }

    auto balanced_blow_up(const Graph & base, int n) -> Graph
    {
        return blow_up(Weighting(base, balanced_class_sizes(base.order(), n)));
    }

    auto blow_up_uniform(const Graph & base, int t) -> Graph
    {
        if (t < 1)
            throw InvalidParameter("uniform blow-up factor must be positive");
        return blow_up(Weighting(base, std::vector<int>(base.order(), t)));
    }

    auto odd_girth(const Graph & g) -> std::optional<int>
    {
        // BFS from every root: an edge joining two vertices at equal depth d closes
        // an odd walk of length 2d + 1, and a root on a shortest odd cycle realises it.
        int n = g.order();
        std::optional<int> best;
        std::vector<int> dist(n);
        for (int root = 0; root < n; ++root) {
            std::fill(dist.begin(), dist.end(), -1);
            std::queue<int> q;
            dist[root] = 0;
            q.push(root);
            while (! q.empty()) {
                int u = q.front();
                q.pop();
                if (best && 2 * dist[u] + 1 >= *best)
                    break;
                auto nbrs = g.neighbours(u);
                for (int v = nbrs.first(); v != -1; v = nbrs.next(v + 1)) {
                    if (dist[v] == -1) {
                        dist[v] = dist[u] + 1;
                        q.push(v);
                    }
                    else if (dist[v] == dist[u]) {
                        int len = 2 * dist[u] + 1;
                        if (! best || len < *best)
                            best = len;
                    }
                }
            }
        }
        return best;
    }

    auto is_bipartite(const Graph & g) -> bool
    {
        int n = g.order();
        std::vector<int> side(n, -1);
        for (int s = 0; s < n; ++s) {
            if (side[s] != -1)
                continue;
            side[s] = 0;
            std::queue<int> q;
            q.push(s);
            while (! q.empty()) {
                int u = q.front();
                q.pop();
                auto nbrs = g.neighbours(u);
                for (int v = nbrs.first(); v != -1; v = nbrs.next(v + 1)) {
                    if (side[v] == -1) {
                        side[v] = 1 - side[u];
                        q.push(v);
                    }
                    else if (side[v] == side[u])
                        return false;
                }
            }
        }
        return true;
    }

    auto degree_profile(const Graph & g) -> DegreeProfile
    {
        if (g.order() == 0)
            throw InvalidParameter("degree profile of the empty graph");
        int lo = g.degree(0), hi = lo;
        for (int v = 1; v < g.order(); ++v) {
            int d = g.degree(v);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        return {lo, hi, lo == hi};
    }

    auto min_degree_at_least(const Graph & g, const Rational & ratio) -> bool
    {
        return ! less_than_scaled(g.min_degree(), ratio, g.order());
    }

    auto peel_min_degree(const Graph & g, const Rational & threshold) -> Graph
    {
        int n = g.order();
        std::vector<int> deg(n);
        for (int v = 0; v < n; ++v)
            deg[v] = g.degree(v);
        std::vector<bool> alive(n, true);

        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < n; ++v) {
                if (alive[v] && less_than_scaled(deg[v], threshold, n)) {
                    alive[v] = false;
                    auto nbrs = g.neighbours(v);
                    for (int w = nbrs.first(); w != -1; w = nbrs.next(w + 1))
                        --deg[w];
                    changed = true;
                    break;
                }
            }
        }

        std::vector<int> kept;
        for (int v = 0; v < n; ++v)
            if (alive[v])
                kept.push_back(v);
        return induced_subgraph(g, kept);
    }

    auto is_edge_preserving(const Graph & from, const Graph & target, std::span<const int> mapping) -> bool
    {
        if (static_cast<int>(mapping.size()) != from.order())
            return false;
        for (int m : mapping)
            if (m < 0 || m >= target.order())
                return false;
        for (auto [u, v] : from.edges())
            if (! target.adjacent(mapping[u], mapping[v]))
                return false;
        return true;
    }
}
