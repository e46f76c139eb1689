#include <mdstab/delta.hh>
#include <mdstab/errors.hh>
#include <mdstab/gallery.hh>
#include <mdstab/graph_io.hh>
#include <mdstab/homomorphism.hh>
#include <mdstab/verifier.hh>
#include <mdstab/witness.hh>

#include <nlohmann/json.hpp>

#include <cmath>
#include <random>
#include <sstream>

namespace mdstab
{
    namespace
    {
        using Clock = std::chrono::steady_clock;

        auto split(const std::string & text, char sep) -> std::vector<std::string>
        {
            std::vector<std::string> out;
            std::istringstream in(text);
            for (std::string part; std::getline(in, part, sep);)
                out.push_back(part);
            return out;
        }

        template <typename T>
        auto parse_number(const std::string & text, const char * what) -> T
        {
            std::istringstream in(text);
            T value;
            if (! (in >> value) || ! in.eof())
                throw InvalidParameter(std::string("bad ") + what + " '" + text + "' in corpus spec");
            return value;
        }

        void validate(const CorpusSpec & spec)
        {
            if (auto e = std::get_if<ExhaustiveCorpus>(&spec)) {
                if (e->max_order < 1 || e->max_order > exhaustive_max_order)
                    throw InvalidParameter("exhaustive corpus order must be in 1.."
                        + std::to_string(exhaustive_max_order));
            }
            else if (auto r = std::get_if<RandomCorpus>(&spec)) {
                if (r->count < 0 || r->order < 1)
                    throw InvalidParameter("random corpus needs count >= 0 and order >= 1");
                if (! (r->p >= 0.0 && r->p <= 1.0))
                    throw InvalidParameter("edge probability must lie in [0, 1]");
            }
        }

        struct Checker
        {
            VerificationReport report;
            Clock::time_point start = Clock::now();

            void fail(std::int64_t index, const Graph & g, std::string detail)
            {
                report.violations.push_back({index, encode(g, GraphFormat::graph6), std::move(detail)});
            }

            auto finish() -> VerificationReport
            {
                report.elapsed = Clock::now() - start;
                return std::move(report);
            }
        };

        void require(bool ok, const char * message)
        {
            if (! ok)
                throw InvalidParameter(message);
        }
    }

    auto parse_corpus_spec(const std::string & text) -> CorpusSpec
    {
        auto colon = text.find(':');
        if (colon == std::string::npos)
            throw InvalidParameter("corpus spec must be 'exhaustive:K' or 'random:COUNT,ORDER,P,SEED'");
        auto kind = text.substr(0, colon);
        auto args = text.substr(colon + 1);
        CorpusSpec spec;
        if (kind == "exhaustive")
            spec = ExhaustiveCorpus{parse_number<int>(args, "order")};
        else if (kind == "random") {
            auto parts = split(args, ',');
            if (parts.size() != 4)
                throw InvalidParameter("random corpus needs COUNT,ORDER,P,SEED");
            spec = RandomCorpus{parse_number<int>(parts[0], "count"), parse_number<int>(parts[1], "order"),
                parse_number<double>(parts[2], "probability"), parse_number<std::uint64_t>(parts[3], "seed")};
        }
        else
            throw InvalidParameter("unknown corpus kind '" + kind + "'");
        validate(spec);
        return spec;
    }

    auto describe(const CorpusSpec & spec) -> std::string
    {
        std::ostringstream out;
        if (auto e = std::get_if<ExhaustiveCorpus>(&spec))
            out << "exhaustive:" << e->max_order;
        else if (auto r = std::get_if<RandomCorpus>(&spec))
            out << "random:" << r->count << "," << r->order << "," << r->p << "," << r->seed;
        else
            out << "explicit:" << std::get<ExplicitCorpus>(spec).graphs.size();
        return out.str();
    }

    void for_each_graph(const CorpusSpec & spec, const std::function<void(std::int64_t, const Graph &)> & visit)
    {
        validate(spec);
        std::int64_t index = 0;
        if (auto e = std::get_if<ExhaustiveCorpus>(&spec)) {
            for (int n = 1; n <= e->max_order; ++n) {
                std::vector<Edge> pairs;
                for (int j = 1; j < n; ++j)
                    for (int i = 0; i < j; ++i)
                        pairs.push_back({i, j});
                std::vector<Edge> edges;
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
                    edges.clear();
                    for (std::size_t b = 0; b < pairs.size(); ++b)
                        if (mask >> b & 1)
                            edges.push_back(pairs[b]);
                    visit(index++, Graph::from_edges(n, edges));
                }
            }
        }
        else if (auto r = std::get_if<RandomCorpus>(&spec)) {
            std::mt19937_64 rng(r->seed);
            for (int c = 0; c < r->count; ++c) {
                GraphBuilder b(r->order);
                for (int j = 1; j < r->order; ++j)
                    for (int i = 0; i < j; ++i)
                        if (std::ldexp(static_cast<double>(rng() >> 11), -53) < r->p)
                            b.add_edge(i, j);
                visit(index++, std::move(b).build());
            }
        }
        else
            for (const auto & g : std::get<ExplicitCorpus>(spec).graphs)
                visit(index++, g);
    }

    auto to_json(const VerificationReport & report) -> nlohmann::ordered_json
    {
        nlohmann::ordered_json j;
        j["checked"] = report.checked;
        j["passed"] = report.passed();
        j["elapsed_seconds"] = report.elapsed.count();
        j["violations"] = nlohmann::ordered_json::array();
        for (const auto & v : report.violations)
            j["violations"].push_back({{"index", v.index}, {"graph6", v.graph6}, {"detail", v.detail}});
        return j;
    }

    auto brute_min_edits_to_k_partite(const Graph & g, int k) -> std::int64_t
    {
        require(k >= 1, "k must be positive");
        int n = g.order();
        if (static_cast<double>(n) * std::log10(static_cast<double>(k)) > std::log10(edit_oracle_budget) + 1e-9)
            throw ResourceError(std::to_string(k) + "^" + std::to_string(n) + " partitions exceed the budget");
        if (n == 0)
            return 0;

        // Branch and bound over part assignments; vertex v may open at most one
        // new part, which removes the k! relabellings.
        std::vector<int> part(n, -1);
        std::int64_t best = g.edge_count();
        auto recurse = [&](auto & self, int v, int used, std::int64_t cost) -> void {
            if (cost >= best)
                return;
            if (v == n) {
                best = cost;
                return;
            }
            for (int p = 0; p < std::min(k, used + 1); ++p) {
                std::int64_t extra = 0;
                for (int u = 0; u < v; ++u)
                    if (part[u] == p && g.adjacent(u, v))
                        ++extra;
                part[v] = p;
                self(self, v + 1, std::max(used, p + 1), cost + extra);
            }
            part[v] = -1;
        };
        recurse(recurse, 0, 0, 0);
        return best;
    }

    auto check_hom_odd_girth(const CorpusSpec & spec, int g_max) -> VerificationReport
    {
        require(g_max >= 1, "g_max must be positive");
        Checker c;
        std::vector<Graph> cycles;
        for (int g = 1; g <= g_max; ++g)
            cycles.push_back(make_cycle(2 * g + 1));
        for_each_graph(spec, [&](std::int64_t index, const Graph & G) {
            ++c.report.checked;
            auto girth = odd_girth(G);
            for (int g = 1; g <= g_max; ++g) {
                if (! girth || *girth >= 2 * g + 1)
                    continue;
                if (has_homomorphism(G, cycles[g - 1]))
                    c.fail(index, G, "maps to C_" + std::to_string(2 * g + 1) + " but has odd girth "
                        + std::to_string(*girth));
            }
        });
        return c.finish();
    }

    auto check_haggkvist(const CorpusSpec & spec, int g) -> VerificationReport
    {
        require(g >= 2, "g must be at least 2");
        Checker c;
        for_each_graph(spec, [&](std::int64_t index, const Graph & G) {
            ++c.report.checked;
            auto girth = odd_girth(G);
            if (! girth)
                return;
            std::int64_t n = G.order();
            if (static_cast<std::int64_t>(G.min_degree()) * (2 * g + 1) <= 2 * n)
                return;
            if (*girth >= 2 * g + 1)
                c.fail(index, G, "min degree " + std::to_string(G.min_degree()) + " above 2n/"
                    + std::to_string(2 * g + 1) + " but odd girth " + std::to_string(*girth));
        });
        return c.finish();
    }

    auto check_properties(int r, int g_max) -> VerificationReport
    {
        require(r >= 3 && r <= 5, "r must be 3, 4 or 5");
        require(g_max >= 1 && g_max <= 11, "g_max must be in 1..11");
        Checker c;
        std::int64_t index = 0;

        for (int j = 1; j <= std::min(g_max + 1, f_sequence_length); ++j, ++index) {
            ++c.report.checked;
            auto target = f_join_target(r, j);
            int chi = chromatic_number(target);
            if (chi != r + 1)
                c.fail(index, target, "K_" + std::to_string(r - 3) + " + " + std::string(gallery_name(f_sequence(j)))
                    + " has chromatic number " + std::to_string(chi));
        }

        for (int g = 1; g <= g_max; ++g, ++index) {
            ++c.report.checked;
            DeltaResult probe{r, Exact4{g + 1, c_table(g), k_threshold(r, g)}, {}, 0};
            auto w = witness_base(probe);
            Rational ratio(w.min_degree(), w.order());
            if (ratio != k_threshold(r, g))
                c.fail(index, w, "witness ratio " + to_string(ratio) + " differs from k_" + std::to_string(g) + " = "
                    + to_string(k_threshold(r, g)));
            else if (! has_homomorphism(w, f_join_target(r, g + 1)))
                c.fail(index, w, "witness is not a blow-up of its base");
        }
        return c.finish();
    }

    auto search_hom_free_lower_bound(const Graph & h, int k, const Rational & c, const CorpusSpec & spec)
        -> std::optional<HomFreeHit>
    {
        require(k >= 0, "k must be nonnegative");
        std::optional<HomFreeHit> best;
        for_each_graph(spec, [&](std::int64_t index, const Graph & G) {
            if (less_than_scaled(G.min_degree(), c, G.order()))
                return;
            Rational ratio(G.min_degree(), G.order());
            if (best && ratio <= best->ratio)
                return;
            if (is_k_colorable(G, k) || has_homomorphism(h, G))
                return;
            best = HomFreeHit{index, G, ratio};
        });
        return best;
    }

    auto check_locally_bipartite_claims(int a, const CorpusSpec & spec) -> VerificationReport
    {
        require(a >= 1, "a must be positive");
        Rational threshold(3 * a + 1, 3 * a + 4);
        Checker c;
        for_each_graph(spec, [&](std::int64_t index, const Graph & G) {
            ++c.report.checked;
            if (! greater_than_scaled(G.min_degree(), threshold, G.order()))
                return;
            if (! is_a_locally_bipartite(G, a).holds)
                return;
            if (! is_k_colorable(G, a + 2))
                c.fail(index, G, std::to_string(a) + "-locally bipartite with min degree "
                    + std::to_string(G.min_degree()) + " but not " + std::to_string(a + 2) + "-colourable");
        });
        return c.finish();
    }
}
