#pragma once

#include <mdstab/graph.hh>
#include <mdstab/homomorphism.hh>
#include <mdstab/rational.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace mdstab
{
    // c_g for g in 1..11.
    [[nodiscard]] auto c_table(int g) -> Rational;

    // k_g = 1 - 1/(r - 1 + c_g), r >= 3, g in 1..11.
    [[nodiscard]] auto k_threshold(int r, int g) -> Rational;

    // 1 - 1/(r - 1 + 2/(2g + 1)) for r >= 2, g >= 0: the threshold reached by
    // the regular blow-up of K_{r-2} + C_{2g+3}.
    [[nodiscard]] auto cycle_join_threshold(int r, int g) -> Rational;

    // Homomorphism targets scanned by the classifier.
    [[nodiscard]] auto odd_cycle_target(int g) -> Graph;          // C_{2g+1}
    [[nodiscard]] auto f_join_target(int r, int j) -> Graph;      // K_{r-3} + F_j
    [[nodiscard]] auto cycle_join_target(int r, int g) -> Graph;  // K_{r-2} + C_{2g+1}

    enum class TargetFamily
    {
        odd_cycle,
        f_join,
        cycle_join
    };

    [[nodiscard]] auto target_for(TargetFamily family, int r, int index) -> Graph;

    // A witnessed homomorphism into the index-th member of a target family.
    struct CertificateEntry
    {
        TargetFamily family;
        int index;
        HomWitness witness;
    };

    // Least index with no homomorphism; witnesses for every smaller index.
    struct ScanResult
    {
        std::optional<int> failing_index;
        std::vector<CertificateEntry> passed;
        std::uint64_t nodes = 0;
    };

    // For 3-chromatic h: least g >= 1 with h not homomorphic to C_{2g+1}.
    // Throws WrongBranch otherwise.
    [[nodiscard]] auto least_non_hom_odd_cycle(const Graph & h) -> ScanResult;

    // For (r+1)-chromatic h: least j in 1..12 with h not homomorphic to
    // K_{r-3} + F_j, scanning every index in order. failing_index is empty when
    // all twelve succeed.
    [[nodiscard]] auto least_non_hom_f_index(const Graph & h, int r) -> ScanResult;

    // For (r+1)-chromatic h: least g with h not homomorphic to K_{r-2} + C_{2g+1}.
    [[nodiscard]] auto least_non_hom_cycle_join(const Graph & h, int r) -> ScanResult;

    struct Exact3
    {
        int g;
        Rational value;
    };

    struct Exact4
    {
        int j;
        Rational c;
        Rational value;
    };

    struct Interval
    {
        int g;
        Rational lower;
        Rational upper;
    };

    struct DeltaResult
    {
        int r;
        std::variant<Exact3, Exact4, Interval> outcome;
        std::vector<CertificateEntry> certificate;
        std::uint64_t nodes = 0;

        // Exact value, or the lower end of an interval.
        [[nodiscard]] auto value() const -> Rational;
        [[nodiscard]] auto is_exact() const -> bool;
    };

    // Interval outcome for an (r+1)-chromatic graph with least failing cycle join g.
    [[nodiscard]] auto interval_bounds(int r, int g) -> Interval;

    // Throws UndefinedThreshold for bipartite h.
    [[nodiscard]] auto classify(const Graph & h) -> DeltaResult;

    // Every stored witness is a homomorphism into its target.
    [[nodiscard]] auto validate_certificate(const Graph & h, const DeltaResult & result) -> bool;

    // "5/8 (0.625) [F-sequence branch, j=2]"
    [[nodiscard]] auto describe(const DeltaResult & result) -> std::string;

    [[nodiscard]] auto to_json(const DeltaResult & result) -> nlohmann::ordered_json;

    // Throws ParseError on a malformed document.
    [[nodiscard]] auto delta_result_from_json(const nlohmann::json & j) -> DeltaResult;
}
