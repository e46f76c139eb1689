#pragma once

#include <mdstab/graph.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace mdstab
{
    // Assigns each pattern vertex a target vertex.
    struct HomWitness
    {
        std::vector<int> mapping;

        friend auto operator==(const HomWitness &, const HomWitness &) -> bool = default;
    };

    [[nodiscard]] auto is_valid_witness(const Graph & pattern, const Graph & target, const HomWitness & w) -> bool;

    // w1 : G -> H followed by w2 : H -> K.
    [[nodiscard]] auto compose(const HomWitness & w1, const HomWitness & w2) -> HomWitness;

    // Result of repeatedly deleting a vertex u whose neighbourhood lies inside
    // that of another surviving vertex v (so u may always share v's image).
    // The folded graph is an induced subgraph homomorphically equivalent to the
    // input; `image` maps every input vertex to its folded representative.
    struct Fold
    {
        Graph graph;
        std::vector<int> kept;
        std::vector<int> image;
    };

    [[nodiscard]] auto fold_dominated(const Graph & g) -> Fold;

    struct HomSearchOptions
    {
        // Orbit label for each target vertex under some automorphism group of
        // the target. When supplied, the first pattern vertex assigned only
        // tries one representative (the lowest index) per orbit. The caller is
        // responsible for these really being automorphism orbits.
        std::optional<std::vector<int>> target_orbits;
    };

    struct HomSearchResult
    {
        std::optional<HomWitness> witness;
        std::uint64_t nodes = 0;
    };

    // Backtracking over pattern vertices with arc-consistency propagation.
    // Deterministic: smallest domain first (ties to lowest index), values in
    // increasing order. A nullopt witness means the search was exhausted.
    [[nodiscard]] auto solve_homomorphism(const Graph & pattern, const Graph & target,
        const HomSearchOptions & options = {}) -> HomSearchResult;

    [[nodiscard]] auto has_homomorphism(const Graph & pattern, const Graph & target) -> std::optional<HomWitness>;

    // Proper colouring with at most k colours, colours 0..k-1, if one exists.
    [[nodiscard]] auto find_colouring(const Graph & g, int k) -> std::optional<std::vector<int>>;

    [[nodiscard]] auto is_k_colorable(const Graph & g, int k) -> bool;

    [[nodiscard]] auto chromatic_number(const Graph & g) -> int;

    // Greedy clique, used as a lower bound only.
    [[nodiscard]] auto greedy_clique(const Graph & g) -> std::vector<int>;

    // All a-subsets inducing cliques, each sorted, in lexicographic order.
    [[nodiscard]] auto cliques_of_size(const Graph & g, int a) -> std::vector<std::vector<int>>;

    [[nodiscard]] auto clique_number(const Graph & g) -> int;

    // Common neighbourhood of a set of vertices.
    [[nodiscard]] auto common_neighbourhood(const Graph & g, const std::vector<int> & clique) -> VertexSet;

    struct LocalBipartiteness
    {
        bool holds;
        std::optional<std::vector<int>> violating_clique;
    };

    // Every a-clique has a bipartite common neighbourhood. Throws
    // InvalidParameter for a < 1.
    [[nodiscard]] auto is_a_locally_bipartite(const Graph & g, int a) -> LocalBipartiteness;
}
