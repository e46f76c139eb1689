#pragma once

// Deliberately naive reference implementations used only by tests.

#include <mdstab/graph.hh>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace mdstab::oracle
{
    // Odometer over all |target|^|pattern| maps.
    inline auto any_homomorphism(const Graph & pattern, const Graph & target) -> bool
    {
        int n = pattern.order(), m = target.order();
        if (n == 0)
            return true;
        if (m == 0)
            return false;
        auto edges = pattern.edges();
        std::vector<int> f(n, 0);
        while (true) {
            bool ok = true;
            for (auto [u, v] : edges)
                if (! target.adjacent(f[u], f[v])) {
                    ok = false;
                    break;
                }
            if (ok)
                return true;
            int i = 0;
            while (i < n && ++f[i] == m)
                f[i++] = 0;
            if (i == n)
                return false;
        }
    }

    inline auto chromatic_number(const Graph & g) -> int
    {
        for (int k = 0;; ++k)
            if (any_homomorphism(g, make_clique_or_empty(k)))
                return k;
    }

    inline auto clique_number(const Graph & g) -> int
    {
        int n = g.order(), best = 0;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            bool clique = true;
            for (int u = 0; u < n && clique; ++u)
                for (int v = u + 1; v < n && clique; ++v)
                    if ((mask >> u & 1) && (mask >> v & 1) && ! g.adjacent(u, v))
                        clique = false;
            if (clique)
                best = std::max(best, __builtin_popcount(mask));
        }
        return best;
    }

    // Least odd L with a closed walk of length L, via boolean matrix powers.
    // A shortest odd closed walk is always an odd cycle.
    inline auto odd_girth(const Graph & g) -> std::optional<int>
    {
        int n = g.order();
        using Matrix = std::vector<std::vector<bool>>;
        Matrix a(n, std::vector<bool>(n));
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                a[u][v] = g.adjacent(u, v);
        auto multiply = [n](const Matrix & x, const Matrix & y) {
            Matrix z(n, std::vector<bool>(n));
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k)
                    if (x[i][k])
                        for (int j = 0; j < n; ++j)
                            if (y[k][j])
                                z[i][j] = true;
            return z;
        };
        auto a2 = multiply(a, a);
        auto p = a;
        for (int len = 1; len <= 2 * n + 1; len += 2) {
            for (int i = 0; i < n; ++i)
                if (p[i][i])
                    return len;
            p = multiply(p, a2);
        }
        return std::nullopt;
    }

    // Plain enumeration of all k^n part assignments.
    inline auto min_edits_to_k_partite(const Graph & g, int k) -> std::int64_t
    {
        int n = g.order();
        auto edges = g.edges();
        std::int64_t best = static_cast<std::int64_t>(edges.size());
        std::vector<int> part(n, 0);
        while (true) {
            std::int64_t inside = 0;
            for (auto [u, v] : edges)
                inside += part[u] == part[v];
            best = std::min(best, inside);
            int i = 0;
            while (i < n && ++part[i] == k)
                part[i++] = 0;
            if (i == n)
                return best;
        }
    }

    inline auto random_graph(std::mt19937_64 & rng, int n, double p) -> Graph
    {
        std::bernoulli_distribution coin(p);
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    b.add_edge(u, v);
        return std::move(b).build();
    }
    // One graph per isomorphism class on n <= 6 vertices; canonical form is
    // the least edge mask over all vertex permutations.
    inline auto nonisomorphic_graphs(int n) -> std::vector<Graph>
    {
        std::vector<Edge> pairs;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                pairs.push_back({i, j});
        std::vector<int> index(n * n, 0);
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            auto [i, j] = pairs[b];
            index[i * n + j] = index[j * n + i] = static_cast<int>(b);
        }
        std::vector<std::vector<int>> perms;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do
            perms.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));

        std::vector<Graph> out;
        std::vector<bool> seen(std::size_t{1} << pairs.size(), false);
        for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            if (seen[mask])
                continue;
            std::vector<Edge> edges;
            for (const auto & q : perms) {
                std::uint32_t image = 0;
                for (std::size_t b = 0; b < pairs.size(); ++b)
                    if (mask >> b & 1)
                        image |= 1u << index[q[pairs[b].u] * n + q[pairs[b].v]];
                seen[image] = true;
            }
            for (std::size_t b = 0; b < pairs.size(); ++b)
                if (mask >> b & 1)
                    edges.push_back(pairs[b]);
            out.push_back(Graph::from_edges(n, edges));
        }
        return out;
    }
}
