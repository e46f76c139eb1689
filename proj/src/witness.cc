#include <mdstab/errors.hh>
#include <mdstab/homomorphism.hh>
#include <mdstab/witness.hh>

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace mdstab
{
    namespace
    {
        auto unit_weighting(const Graph & g) -> Weighting
        {
            return Weighting(g, std::vector<int>(g.order(), 1));
        }
    }

    auto odd_cycle_witness(int g, int n) -> Graph
    {
        if (g < 1)
            throw InvalidParameter("odd cycle index must be positive");
        if (n < 2 * g + 1)
            throw InvalidParameter("a blow-up of C_" + std::to_string(2 * g + 1) + " needs at least "
                + std::to_string(2 * g + 1) + " vertices, got " + std::to_string(n));
        return balanced_blow_up(make_cycle(2 * g + 1), n);
    }

    auto regular_join_witness(int r, int g) -> Graph
    {
        if (r < 3)
            throw InvalidParameter("r must be at least 3");
        if (g < 1)
            throw InvalidParameter("g must be positive");
        auto clique = make_clique_or_empty(r - 2);
        auto classes = clique.order() == 0 ? clique : blow_up_uniform(clique, 2 * g - 1);
        return join(classes, make_cycle(2 * g + 1));
    }

    auto gallery_join_witness(int r, GalleryId id, int scale, bool strict) -> Graph
    {
        if (r < 3)
            throw InvalidParameter("r must be at least 3");
        if (scale < 1)
            throw InvalidParameter("weight scale must be positive");

        Weighting base_weights = [&] {
            if (id == GalleryId::C7bar)
                return unit_weighting(gallery_graph(id));
            if (! has_gallery_weighting(id))
                throw InvalidParameter(std::string(gallery_name(id)) + " has no lower-bound weighting");
            return gallery_weighting(id);
        }();

        auto weights = base_weights.weights();
        for (auto & w : weights)
            w = w == 0 ? (strict ? 1 : 0) : w * scale;
        auto f = blow_up(Weighting(base_weights.base(), weights));

        int clique_weight = f.order() - f.min_degree();
        auto clique = make_clique_or_empty(r - 3);
        auto classes = clique.order() == 0 ? clique : blow_up_uniform(clique, clique_weight);
        return join(classes, f);
    }

    auto edit_lower_bound(int base_order, int n) -> std::int64_t
    {
        if (base_order < 1)
            throw InvalidParameter("base order must be positive");
        if (n < base_order)
            throw InvalidParameter("n must be at least the base order");
        std::int64_t q = n / base_order;
        return q * q;
    }

    auto witness_base(const DeltaResult & result) -> Graph
    {
        return std::visit(
            [&](const auto & o) -> Graph {
                using T = std::decay_t<decltype(o)>;
                if constexpr (std::is_same_v<T, Exact3>)
                    return make_cycle(2 * o.g + 1);
                else if constexpr (std::is_same_v<T, Interval>)
                    return regular_join_witness(result.r, o.g);
                else {
                    auto id = f_sequence(o.j);
                    if (auto rim = wheel_rim(id))
                        return regular_join_witness(result.r, *rim / 2);
                    return gallery_join_witness(result.r, id);
                }
            },
            result.outcome);
    }

    auto build_witness(const DeltaResult & result, int n) -> Graph
    {
        return balanced_blow_up(witness_base(result), n);
    }

    auto CertificationReport::passed() const -> bool
    {
        for (const auto & c : checks)
            if (! c.passed)
                return false;
        return true;
    }

    auto certify(const Graph & h, const DeltaResult & result, int n) -> CertificationReport
    {
        if (chromatic_number(h) != result.r + 1)
            throw InvalidParameter("result was computed for a graph of a different chromatic number");
        if (! validate_certificate(h, result))
            throw InvalidParameter("result certificate does not belong to this graph");

        auto base = witness_base(result);
        if (n < base.order())
            throw InvalidParameter("n = " + std::to_string(n) + " is below the witness base order "
                + std::to_string(base.order()));
        auto w = balanced_blow_up(base, n);

        CertificationReport report{n, base.order(), w.min_degree(), edit_lower_bound(base.order(), n), {}};

        auto hom = solve_homomorphism(h, base);
        report.checks.push_back({"not-homomorphic-to-base", ! hom.witness,
            hom.witness ? "found a homomorphism into the witness base" : "exhausted after "
                    + std::to_string(hom.nodes) + " nodes"});

        // min degree >= (value - base/n) * n, that is min degree + base >= value * n.
        auto value = result.value();
        bool ratio_ok = ! less_than_scaled(static_cast<std::int64_t>(report.witness_min_degree) + base.order(), value, n);
        report.checks.push_back({"degree-ratio", ratio_ok,
            std::to_string(report.witness_min_degree) + "/" + std::to_string(n) + " against " + to_string(value)
                + " with slack " + std::to_string(base.order()) + "/" + std::to_string(n)});

        report.checks.push_back(
            {"edit-bound", report.edit_bound > 0, "at least " + std::to_string(report.edit_bound) + " deletions"});
        return report;
    }

    auto to_json(const CertificationReport & report) -> nlohmann::ordered_json
    {
        nlohmann::ordered_json j;
        j["n"] = report.n;
        j["base_order"] = report.base_order;
        j["min_degree"] = report.witness_min_degree;
        j["edit_bound"] = report.edit_bound;
        j["passed"] = report.passed();
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto & c : report.checks)
            j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        return j;
    }
}
