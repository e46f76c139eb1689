#include <mdstab/delta.hh>
#include <mdstab/errors.hh>
#include <mdstab/gallery.hh>

#include <nlohmann/json.hpp>

#include <array>
#include <sstream>
#include <stdexcept>

namespace mdstab
{
    namespace
    {
        constexpr std::array<std::pair<int, int>, 11> c_values = {
            {{2, 3}, {2, 5}, {1, 3}, {2, 7}, {1, 4}, {2, 9}, {1, 5}, {2, 11}, {1, 6}, {2, 13}, {1, 7}}};

        void require_r(int r, int minimum)
        {
            if (r < minimum)
                throw InvalidParameter("r must be at least " + std::to_string(minimum) + ", got " + std::to_string(r));
        }

        void require_chromatic(const Graph & h, int expected, const char * what)
        {
            int chi = chromatic_number(h);
            if (chi != expected)
                throw WrongBranch(std::string(what) + " needs a " + std::to_string(expected)
                    + "-chromatic graph, got chromatic number " + std::to_string(chi));
        }

        // Scans indices first..last (last may be open-ended) for the first failure.
        template <typename Target>
        auto scan(const Graph & h, TargetFamily family, int first, std::optional<int> last, Target target)
            -> ScanResult
        {
            ScanResult out;
            for (int i = first; ! last || i <= *last; ++i) {
                auto result = solve_homomorphism(h, target(i));
                out.nodes += result.nodes;
                if (! result.witness) {
                    out.failing_index = i;
                    return out;
                }
                out.passed.push_back({family, i, std::move(*result.witness)});
            }
            return out;
        }

        auto family_name(TargetFamily f) -> std::string
        {
            switch (f) {
            case TargetFamily::odd_cycle: return "odd-cycle";
            case TargetFamily::f_join: return "f-join";
            case TargetFamily::cycle_join: return "cycle-join";
            }
            throw std::logic_error("unknown target family");
        }

        auto parse_family(const std::string & name) -> TargetFamily
        {
            for (auto f : {TargetFamily::odd_cycle, TargetFamily::f_join, TargetFamily::cycle_join})
                if (family_name(f) == name)
                    return f;
            throw ParseError("unknown target family '" + name + "'", 0);
        }

        auto rational_json(const Rational & q) -> std::string
        {
            return to_string(q);
        }

        auto rational_from(const nlohmann::json & j, const char * key) -> Rational
        {
            if (! j.contains(key) || ! j[key].is_string())
                throw ParseError(std::string("missing rational field '") + key + "'", 0);
            try {
                return parse_rational(j[key].get<std::string>());
            }
            catch (const boost::bad_rational &) {
                throw ParseError(std::string("bad rational in '") + key + "'", 0);
            }
        }

        auto int_from(const nlohmann::json & j, const char * key) -> int
        {
            if (! j.contains(key) || ! j[key].is_number_integer())
                throw ParseError(std::string("missing integer field '") + key + "'", 0);
            return j[key].get<int>();
        }
    }

    auto c_table(int g) -> Rational
    {
        if (g < 1 || g > 11)
            throw InvalidParameter("c_g is defined for g in 1..11, got " + std::to_string(g));
        auto [p, q] = c_values[g - 1];
        return {p, q};
    }

    auto k_threshold(int r, int g) -> Rational
    {
        require_r(r, 3);
        return 1 - 1 / (r - 1 + c_table(g));
    }

    auto cycle_join_threshold(int r, int g) -> Rational
    {
        require_r(r, 2);
        if (g < 0)
            throw InvalidParameter("g must be nonnegative");
        return 1 - 1 / (r - 1 + Rational(2, 2 * g + 1));
    }

    auto odd_cycle_target(int g) -> Graph
    {
        if (g < 1)
            throw InvalidParameter("odd cycle index must be positive");
        return make_cycle(2 * g + 1);
    }

    auto f_join_target(int r, int j) -> Graph
    {
        require_r(r, 3);
        return join(make_clique_or_empty(r - 3), gallery_graph(f_sequence(j)));
    }

    auto cycle_join_target(int r, int g) -> Graph
    {
        require_r(r, 2);
        return join(make_clique_or_empty(r - 2), odd_cycle_target(g));
    }

    auto target_for(TargetFamily family, int r, int index) -> Graph
    {
        switch (family) {
        case TargetFamily::odd_cycle: return odd_cycle_target(index);
        case TargetFamily::f_join: return f_join_target(r, index);
        case TargetFamily::cycle_join: return cycle_join_target(r, index);
        }
        throw std::logic_error("unknown target family");
    }

    auto least_non_hom_odd_cycle(const Graph & h) -> ScanResult
    {
        require_chromatic(h, 3, "odd-cycle scan");
        // Every g with 2g + 1 above the odd girth fails, so the scan is finite.
        int bound = (*odd_girth(h) + 1) / 2;
        auto out = scan(h, TargetFamily::odd_cycle, 1, bound, odd_cycle_target);
        if (! out.failing_index)
            throw std::logic_error("homomorphism into an odd cycle longer than the odd girth");
        return out;
    }

    auto least_non_hom_f_index(const Graph & h, int r) -> ScanResult
    {
        require_r(r, 3);
        require_chromatic(h, r + 1, "F-sequence scan");
        return scan(h, TargetFamily::f_join, 1, f_sequence_length, [r](int j) { return f_join_target(r, j); });
    }

    auto least_non_hom_cycle_join(const Graph & h, int r) -> ScanResult
    {
        require_r(r, 2);
        require_chromatic(h, r + 1, "cycle-join scan");
        // A homomorphism into K_{r-2} + C_{2g+1} forces an odd cycle of length at
        // least 2g + 1 in h.
        int bound = h.order() / 2 + 1;
        auto out = scan(h, TargetFamily::cycle_join, 1, bound, [r](int g) { return cycle_join_target(r, g); });
        if (! out.failing_index)
            throw std::logic_error("cycle-join scan did not terminate within the order bound");
        return out;
    }

    auto interval_bounds(int r, int g) -> Interval
    {
        require_r(r, 3);
        if (g < 1)
            throw InvalidParameter("interval index must be positive");
        return {g, cycle_join_threshold(r, g - 1), k_threshold(r, 11)};
    }

    auto DeltaResult::value() const -> Rational
    {
        return std::visit(
            [](const auto & o) -> Rational {
                using T = std::decay_t<decltype(o)>;
                if constexpr (std::is_same_v<T, Interval>)
                    return o.lower;
                else
                    return o.value;
            },
            outcome);
    }

    auto DeltaResult::is_exact() const -> bool
    {
        return ! std::holds_alternative<Interval>(outcome);
    }

    auto classify(const Graph & h) -> DeltaResult
    {
        int chi = chromatic_number(h);
        if (chi < 3)
            throw UndefinedThreshold("the threshold is defined only for chromatic number at least 3, got "
                + std::to_string(chi));
        int r = chi - 1;

        DeltaResult result{r, Exact3{}, {}, 0};
        if (r == 2) {
            int bound = (*odd_girth(h) + 1) / 2;
            auto s = scan(h, TargetFamily::odd_cycle, 1, bound, odd_cycle_target);
            int g = s.failing_index.value();
            result.outcome = Exact3{g, Rational(2, 2 * g + 1)};
            result.certificate = std::move(s.passed);
            result.nodes = s.nodes;
            return result;
        }

        auto f = scan(h, TargetFamily::f_join, 1, f_sequence_length, [r](int j) { return f_join_target(r, j); });
        result.nodes = f.nodes;
        result.certificate = std::move(f.passed);
        if (f.failing_index) {
            int j = *f.failing_index;
            if (j == 1)
                throw std::logic_error("an (r+1)-chromatic graph failed to map into K_{r+1}");
            result.outcome = Exact4{j, c_table(j - 1), k_threshold(r, j - 1)};
            return result;
        }

        auto cj = scan(h, TargetFamily::cycle_join, 1, h.order() / 2 + 1,
            [r](int g) { return cycle_join_target(r, g); });
        result.nodes += cj.nodes;
        for (auto & e : cj.passed)
            result.certificate.push_back(std::move(e));
        result.outcome = interval_bounds(r, cj.failing_index.value());
        return result;
    }

    auto validate_certificate(const Graph & h, const DeltaResult & result) -> bool
    {
        for (const auto & e : result.certificate) {
            Graph target;
            try {
                target = target_for(e.family, result.r, e.index);
            }
            catch (const InvalidParameter &) {
                return false;
            }
            if (! is_valid_witness(h, target, e.witness))
                return false;
        }
        return true;
    }

    auto describe(const DeltaResult & result) -> std::string
    {
        std::ostringstream out;
        auto v = result.value();
        out << to_string(v) << " (" << to_double(v) << ") ";
        std::visit(
            [&](const auto & o) {
                using T = std::decay_t<decltype(o)>;
                if constexpr (std::is_same_v<T, Exact3>)
                    out << "[odd-cycle branch, g=" << o.g << "]";
                else if constexpr (std::is_same_v<T, Exact4>)
                    out << "[F-sequence branch, j=" << o.j << "]";
                else
                    out << "[interval branch, g=" << o.g << ", upper " << to_string(o.upper) << " ("
                        << to_double(o.upper) << ")]";
            },
            result.outcome);
        return out.str();
    }

    auto to_json(const DeltaResult & result) -> nlohmann::ordered_json
    {
        nlohmann::ordered_json j;
        j["r"] = result.r;
        std::visit(
            [&](const auto & o) {
                using T = std::decay_t<decltype(o)>;
                if constexpr (std::is_same_v<T, Exact3>) {
                    j["branch"] = "exact3";
                    j["g"] = o.g;
                    j["value"] = rational_json(o.value);
                }
                else if constexpr (std::is_same_v<T, Exact4>) {
                    j["branch"] = "exact4";
                    j["j"] = o.j;
                    j["c"] = rational_json(o.c);
                    j["value"] = rational_json(o.value);
                }
                else {
                    j["branch"] = "interval";
                    j["g"] = o.g;
                    j["lower"] = rational_json(o.lower);
                    j["upper"] = rational_json(o.upper);
                }
            },
            result.outcome);
        j["decimal"] = to_double(result.value());
        j["nodes"] = result.nodes;
        j["certificate"] = nlohmann::ordered_json::array();
        for (const auto & e : result.certificate) {
            nlohmann::ordered_json entry;
            entry["family"] = family_name(e.family);
            entry["index"] = e.index;
            entry["mapping"] = e.witness.mapping;
            j["certificate"].push_back(std::move(entry));
        }
        return j;
    }

    auto delta_result_from_json(const nlohmann::json & j) -> DeltaResult
    {
        if (! j.is_object())
            throw ParseError("delta result must be a JSON object", 0);
        DeltaResult result{int_from(j, "r"), Exact3{}, {}, 0};
        if (! j.contains("branch") || ! j["branch"].is_string())
            throw ParseError("missing 'branch'", 0);
        auto branch = j["branch"].get<std::string>();
        if (branch == "exact3")
            result.outcome = Exact3{int_from(j, "g"), rational_from(j, "value")};
        else if (branch == "exact4")
            result.outcome = Exact4{int_from(j, "j"), rational_from(j, "c"), rational_from(j, "value")};
        else if (branch == "interval")
            result.outcome = Interval{int_from(j, "g"), rational_from(j, "lower"), rational_from(j, "upper")};
        else
            throw ParseError("unknown branch '" + branch + "'", 0);
        if (j.contains("nodes") && j["nodes"].is_number_unsigned())
            result.nodes = j["nodes"].get<std::uint64_t>();
        if (j.contains("certificate")) {
            if (! j["certificate"].is_array())
                throw ParseError("'certificate' must be an array", 0);
            for (const auto & e : j["certificate"]) {
                if (! e.is_object() || ! e.contains("family") || ! e["family"].is_string() || ! e.contains("mapping")
                    || ! e["mapping"].is_array())
                    throw ParseError("malformed certificate entry", 0);
                CertificateEntry entry{parse_family(e["family"].get<std::string>()), int_from(e, "index"), {}};
                for (const auto & m : e["mapping"]) {
                    if (! m.is_number_integer())
                        throw ParseError("certificate mapping entries must be integers", 0);
                    entry.witness.mapping.push_back(m.get<int>());
                }
                result.certificate.push_back(std::move(entry));
            }
        }
        return result;
    }
}
