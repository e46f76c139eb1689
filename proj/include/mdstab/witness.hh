#pragma once

#include <mdstab/delta.hh>
#include <mdstab/gallery.hh>
#include <mdstab/graph.hh>

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace mdstab
{
    // Balanced blow-up of C_{2g+1} on n >= 2g+1 vertices.
    [[nodiscard]] auto odd_cycle_witness(int g, int n) -> Graph;

    // K_{r-2}(2g-1) + C_{2g+1}: regular of degree (2g-1)(r-2)+2.
    [[nodiscard]] auto regular_join_witness(int r, int g) -> Graph;

    // K_{r-3}(m-d) + F' where F' is the weighted blow-up of a gallery graph
    // with m vertices and minimum degree d. C7bar uses unit weights. Every
    // weight is multiplied by scale; strict lifts zero weights to 1 so the
    // result contains a copy of the whole base. Throws InvalidParameter for
    // graphs without a weighting.
    [[nodiscard]] auto gallery_join_witness(int r, GalleryId id, int scale = 1, bool strict = false) -> Graph;

    // floor(n / base_order)^2.
    [[nodiscard]] auto edit_lower_bound(int base_order, int n) -> std::int64_t;

    // The fixed-size graph whose blow-ups witness the lower bound of a result.
    [[nodiscard]] auto witness_base(const DeltaResult & result) -> Graph;

    // Balanced blow-up of witness_base(result) on n vertices.
    [[nodiscard]] auto build_witness(const DeltaResult & result, int n) -> Graph;

    struct CertificationCheck
    {
        std::string name;
        bool passed;
        std::string detail;
    };

    struct CertificationReport
    {
        int n;
        int base_order;
        int witness_min_degree;
        std::int64_t edit_bound;
        std::vector<CertificationCheck> checks;

        [[nodiscard]] auto passed() const -> bool;
    };

    // Builds the witness for result on n vertices and checks that h does not
    // map to its base, that its degree ratio is within base_order/n of the
    // result value, and that the edit bound is positive. Throws
    // InvalidParameter when result does not belong to h or n is too small.
    [[nodiscard]] auto certify(const Graph & h, const DeltaResult & result, int n) -> CertificationReport;

    [[nodiscard]] auto to_json(const CertificationReport & report) -> nlohmann::ordered_json;
}
