#include "oracles.hh"

#include <mdstab/errors.hh>
#include <mdstab/graph.hh>
#include <mdstab/homomorphism.hh>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace mdstab;

namespace
{
    auto degrees(const Graph & g) -> std::vector<int>
    {
        std::vector<int> d;
        for (int v = 0; v < g.order(); ++v)
            d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    }
}

TEST(Construct, Complete)
{
    auto k3 = make_complete(3);
    EXPECT_EQ(k3.order(), 3);
    EXPECT_EQ(k3.edge_count(), 3);
    EXPECT_THROW((void)make_complete(0), InvalidParameter);
}

TEST(Construct, Wheel)
{
    auto w = make_wheel(7);
    EXPECT_EQ(w.order(), 8);
    EXPECT_EQ(w.edge_count(), 14);
    EXPECT_EQ(w.degree(7), 7);
    EXPECT_THROW((void)make_wheel(2), InvalidParameter);
}

TEST(Construct, CycleComplement)
{
    auto g = make_cycle_complement(7);
    EXPECT_EQ(g.order(), 7);
    EXPECT_EQ(g.edge_count(), 14);
    EXPECT_EQ(degree_profile(g), (DegreeProfile{4, 4, true}));
    EXPECT_EQ(g, complement(make_cycle(7)));
    EXPECT_THROW((void)make_cycle_complement(4), InvalidParameter);
}

TEST(Construct, CycleAndPetersen)
{
    EXPECT_THROW((void)make_cycle(2), InvalidParameter);
    auto p = make_petersen();
    EXPECT_EQ(p.order(), 10);
    EXPECT_EQ(p.edge_count(), 15);
    EXPECT_EQ(degree_profile(p), (DegreeProfile{3, 3, true}));
}

TEST(Construct, RejectsLoopsAndBadEndpoints)
{
    std::vector<Edge> loop{{1, 1}};
    EXPECT_THROW((void)Graph::from_edges(3, loop), InvalidParameter);
    std::vector<Edge> outside{{0, 3}};
    EXPECT_THROW((void)Graph::from_edges(3, outside), InvalidParameter);
}

TEST(Complement, Examples)
{
    EXPECT_EQ(complement(make_complete(4)), Graph::empty(4));
    EXPECT_EQ(complement(Graph::empty(0)), Graph::empty(0));
    // The complement of C7 maps onto the square of C7 by i -> 3i.
    auto c = complement(make_cycle(7));
    GraphBuilder square(7);
    for (int i = 0; i < 7; ++i) {
        square.add_edge(i, (i + 1) % 7);
        square.add_edge(i, (i + 2) % 7);
    }
    auto sq = std::move(square).build();
    std::vector<int> f(7);
    for (int i = 0; i < 7; ++i)
        f[i] = 3 * i % 7;
    EXPECT_TRUE(is_edge_preserving(c, sq, f));
    EXPECT_EQ(c.edge_count(), sq.edge_count());
}

TEST(Join, Examples)
{
    EXPECT_EQ(join(make_complete(1), make_cycle(5)).edge_count(), make_wheel(5).edge_count());
    EXPECT_EQ(degrees(join(make_complete(1), make_cycle(5))), degrees(make_wheel(5)));
    auto c5 = make_cycle(5);
    EXPECT_EQ(join(Graph::empty(0), c5), c5);
    // K_{r-3} + W_{2k+1} against K_{r-2} + C_{2k+1}, r = 5, k = 3.
    auto a = join(make_complete(2), make_wheel(7));
    auto b = join(make_complete(3), make_cycle(7));
    EXPECT_EQ(degrees(a), degrees(b));
    EXPECT_TRUE(has_homomorphism(a, b));
    EXPECT_TRUE(has_homomorphism(b, a));
}

TEST(Join, ChromaticNumbersAdd)
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        auto g = oracle::random_graph(rng, 1 + t % 4, 0.5);
        auto h = oracle::random_graph(rng, 1 + t % 3, 0.6);
        EXPECT_EQ(chromatic_number(join(g, h)), oracle::chromatic_number(g) + oracle::chromatic_number(h));
    }
}

TEST(Join, DegreeLaw)
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        auto g = oracle::random_graph(rng, 1 + t % 9, 0.4);
        auto h = oracle::random_graph(rng, t % 7, 0.4);
        auto j = join(g, h);
        for (int v = 0; v < g.order(); ++v)
            EXPECT_EQ(j.degree(v), g.degree(v) + h.order());
        for (int v = 0; v < h.order(); ++v)
            EXPECT_EQ(j.degree(g.order() + v), h.degree(v) + g.order());
    }
}

TEST(BlowUp, Examples)
{
    auto c = blow_up_uniform(make_cycle(5), 2);
    EXPECT_EQ(c.order(), 10);
    EXPECT_EQ(c.edge_count(), 20);
    EXPECT_EQ(degree_profile(c), (DegreeProfile{4, 4, true}));
    EXPECT_EQ(balanced_blow_up(make_cycle(5), 10), c);
    EXPECT_THROW(Weighting(make_cycle(5), std::vector<int>(5, 0)), InvalidParameter);
    EXPECT_THROW(Weighting(make_cycle(5), std::vector<int>{1, 1, 1, 1}), InvalidParameter);
    EXPECT_THROW(Weighting(make_cycle(5), std::vector<int>{1, 1, -1, 1, 1}), InvalidParameter);
}

TEST(BlowUp, ZeroWeightsDropVertices)
{
    auto w = blow_up(Weighting(make_cycle(5), {1, 0, 1, 0, 0}));
    EXPECT_EQ(w, Graph::empty(2));
}

TEST(BlowUp, Balanced)
{
    EXPECT_EQ(balanced_class_sizes(5, 11), (std::vector<int>{3, 2, 2, 2, 2}));
    EXPECT_EQ(balanced_blow_up(make_cycle(5), 11).min_degree(), 4);
    EXPECT_THROW((void)balanced_blow_up(make_cycle(5), 4), InvalidParameter);
    // Turán graph T_3(8): parts 3,3,2.
    auto t = balanced_blow_up(make_complete(3), 8);
    EXPECT_EQ(t.edge_count(), 3 * 3 + 3 * 2 + 3 * 2);
    EXPECT_EQ(oracle::clique_number(t), 3);
}

TEST(BlowUp, OddCycleMinimumDegree)
{
    for (int g = 1; g <= 5; ++g)
        for (int n = 2 * g + 1; n <= 60; ++n)
            EXPECT_GE(balanced_blow_up(make_cycle(2 * g + 1), n).min_degree(), 2 * (n / (2 * g + 1)))
                << "g=" << g << " n=" << n;
}

TEST(BlowUp, PreservesCliqueAndChromaticNumber)
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> weight(0, 2);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + t % 5;
        auto base = oracle::random_graph(rng, n, 0.5);
        std::vector<int> w(n);
        std::vector<int> positive;
        for (int v = 0; v < n; ++v) {
            w[v] = weight(rng);
            if (w[v] > 0)
                positive.push_back(v);
        }
        if (positive.empty()) {
            w[0] = 1;
            positive.push_back(0);
        }
        auto blown = blow_up(Weighting(base, w));
        auto support = induced_subgraph(base, positive);
        EXPECT_EQ(blown.order(), std::accumulate(w.begin(), w.end(), 0));
        EXPECT_EQ(oracle::clique_number(blown), oracle::clique_number(support));
        EXPECT_EQ(chromatic_number(blown), oracle::chromatic_number(support));
    }
}

TEST(OddGirth, Examples)
{
    EXPECT_EQ(odd_girth(make_cycle(7)), 7);
    EXPECT_EQ(odd_girth(make_petersen()), 5);
    EXPECT_EQ(odd_girth(make_cycle(6)), std::nullopt);
    EXPECT_EQ(odd_girth(Graph::empty(0)), std::nullopt);
}

TEST(OddGirth, MatchesMatrixWalks)
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 300; ++t) {
        auto g = oracle::random_graph(rng, 1 + t % 11, 0.15 + 0.05 * (t % 6));
        auto girth = odd_girth(g);
        EXPECT_EQ(girth, oracle::odd_girth(g));
        EXPECT_EQ(! girth.has_value(), is_k_colorable(g, 2));
        EXPECT_EQ(is_bipartite(g), ! girth.has_value());
    }
}

TEST(DegreeProfile, Examples)
{
    EXPECT_EQ(degree_profile(make_wheel(5)), (DegreeProfile{3, 5, false}));
    EXPECT_EQ(degree_profile(make_complete(4)), (DegreeProfile{3, 3, true}));
    EXPECT_THROW((void)degree_profile(Graph::empty(0)), InvalidParameter);
}

TEST(DegreeProfile, RatioComparisonIsExact)
{
    auto g = blow_up(Weighting(make_cycle(5), {2, 2, 2, 2, 2}));
    EXPECT_TRUE(min_degree_at_least(g, Rational(2, 5)));
    EXPECT_FALSE(min_degree_at_least(g, Rational(2, 5) + Rational(1, 1000000)));
}

TEST(Peel, Examples)
{
    EXPECT_EQ(peel_min_degree(make_complete(4), Rational(1, 2)), make_complete(4));
    EXPECT_EQ(peel_min_degree(make_star(5), Rational(1, 2)), Graph::empty(0));
    auto p = make_petersen();
    EXPECT_EQ(peel_min_degree(p, Rational(0)), p);
}

TEST(Peel, IndependentOfRemovalOrder)
{
    // Deleting vertices in any order reaches the same survivors: degrees only
    // fall as vertices go, so a vertex below the bound stays below it.
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        int n = 3 + t % 10;
        auto g = oracle::random_graph(rng, n, 0.45);
        Rational threshold(1 + t % 5, 8);
        auto expected = peel_min_degree(g, threshold);

        std::vector<bool> alive(n, true);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        bool changed = true;
        while (changed) {
            changed = false;
            std::shuffle(order.begin(), order.end(), rng);
            for (int v : order) {
                if (! alive[v])
                    continue;
                int d = 0;
                for (int u = 0; u < n; ++u)
                    d += alive[u] && g.adjacent(u, v);
                if (less_than_scaled(d, threshold, n)) {
                    alive[v] = false;
                    changed = true;
                    break;
                }
            }
        }
        std::vector<int> survivors;
        for (int v = 0; v < n; ++v)
            if (alive[v])
                survivors.push_back(v);
        EXPECT_EQ(induced_subgraph(g, survivors), expected);
    }
}

TEST(InducedSubgraph, KeepsOrder)
{
    auto c = make_cycle(6);
    std::vector<int> keep{0, 1, 2};
    auto p = induced_subgraph(c, keep);
    EXPECT_EQ(p.edge_count(), 2);
    EXPECT_TRUE(p.adjacent(0, 1));
    EXPECT_TRUE(p.adjacent(1, 2));
}
