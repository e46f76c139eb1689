#pragma once

#include <mdstab/graph.hh>
#include <mdstab/rational.hh>

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace mdstab
{
    // Every labelled graph on 1..max_order vertices.
    struct ExhaustiveCorpus
    {
        int max_order;
    };

    // count graphs of the given order, each edge present with probability p.
    struct RandomCorpus
    {
        int count;
        int order;
        double p;
        std::uint64_t seed;
    };

    struct ExplicitCorpus
    {
        std::vector<Graph> graphs;
    };

    using CorpusSpec = std::variant<ExhaustiveCorpus, RandomCorpus, ExplicitCorpus>;

    constexpr int exhaustive_max_order = 7;

    // "exhaustive:K" or "random:COUNT,ORDER,P,SEED". Throws InvalidParameter.
    [[nodiscard]] auto parse_corpus_spec(const std::string & text) -> CorpusSpec;

    [[nodiscard]] auto describe(const CorpusSpec & spec) -> std::string;

    // Visits corpus graphs in a fixed order with their corpus index. Throws
    // InvalidParameter for an out-of-range spec.
    void for_each_graph(const CorpusSpec & spec, const std::function<void(std::int64_t, const Graph &)> & visit);

    struct Violation
    {
        std::int64_t index;
        std::string graph6;
        std::string detail;
    };

    struct VerificationReport
    {
        std::int64_t checked = 0;
        std::vector<Violation> violations;
        std::chrono::duration<double> elapsed{};

        [[nodiscard]] auto passed() const -> bool { return violations.empty(); }
    };

    [[nodiscard]] auto to_json(const VerificationReport & report) -> nlohmann::ordered_json;

    constexpr double edit_oracle_budget = 1e8;

    // Least number of edges inside parts over all k-partitions. Throws
    // ResourceError when k^order exceeds the budget.
    [[nodiscard]] auto brute_min_edits_to_k_partite(const Graph & g, int k) -> std::int64_t;

    // A homomorphism into C_{2g+1} forbids shorter odd cycles.
    [[nodiscard]] auto check_hom_odd_girth(const CorpusSpec & spec, int g_max) -> VerificationReport;

    // Non-bipartite graphs with min degree above 2n/(2g+1) have an odd cycle
    // shorter than 2g+1.
    [[nodiscard]] auto check_haggkvist(const CorpusSpec & spec, int g) -> VerificationReport;

    // chi(K_{r-3} + F_j) = r+1 for j up to min(g_max+1, 12), and the witness
    // for index g+1 has min degree ratio exactly k_g for g up to g_max.
    [[nodiscard]] auto check_properties(int r, int g_max) -> VerificationReport;

    struct HomFreeHit
    {
        std::int64_t index;
        Graph graph;
        Rational ratio;
    };

    // Corpus graph G with h not homomorphic to G, min degree >= c|G| and
    // chi(G) > k, maximising min degree / order (first index on ties).
    [[nodiscard]] auto search_hom_free_lower_bound(const Graph & h, int k, const Rational & c,
        const CorpusSpec & spec) -> std::optional<HomFreeHit>;

    // a-locally bipartite graphs with min degree above (1 - 1/(a + 4/3))n are
    // (a+2)-colourable.
    [[nodiscard]] auto check_locally_bipartite_claims(int a, const CorpusSpec & spec) -> VerificationReport;
}
