#include <mdstab/errors.hh>
#include <mdstab/homomorphism.hh>

#include <algorithm>
#include <bit>
#include <span>
#include <cassert>
#include <map>

namespace mdstab
{
    namespace
    {
        // Domains live in one flat word array; changes are recorded on a trail
        // and undone on backtrack.
        class HomSearcher
        {
        public:
            HomSearcher(const Graph & pattern, const Graph & target, const HomSearchOptions & options) :
                _pattern(pattern),
                _target(target),
                _options(options),
                _words((static_cast<std::size_t>(target.order()) + 63) / 64),
                _pattern_nbrs(pattern.order()),
                _weight(pattern.order(), 1),
                _domains(_words * pattern.order(), 0),
                _assigned(pattern.order(), false),
                _queued(pattern.order(), false),
                _support(_words)
            {
                for (int v = 0; v < pattern.order(); ++v)
                    _pattern_nbrs[v] = pattern.neighbours(v).members();
                auto full = VertexSet::full(target.order());
                for (int v = 0; v < pattern.order(); ++v)
                    std::copy(full.words().begin(), full.words().end(), domain(v).begin());
            }

            auto run() -> HomSearchResult
            {
                int n = _pattern.order();
                std::vector<int> all(n);
                for (int v = 0; v < n; ++v)
                    all[v] = v;
                HomSearchResult result;
                if (propagate(std::move(all)) && search(0))
                    result.witness = HomWitness{std::move(_solution)};
                result.nodes = _nodes;
                return result;
            }

        private:
            auto domain(int v) -> std::span<std::uint64_t> { return {_domains.data() + v * _words, _words}; }

            auto domain_size(int v) -> int
            {
                int c = 0;
                for (auto w : domain(v))
                    c += std::popcount(w);
                return c;
            }

            void save(int v)
            {
                _trail_vars.push_back(v);
                auto d = domain(v);
                _trail_words.insert(_trail_words.end(), d.begin(), d.end());
            }

            void undo_to(std::size_t mark)
            {
                while (_trail_vars.size() > mark) {
                    int v = _trail_vars.back();
                    _trail_vars.pop_back();
                    auto d = domain(v);
                    std::copy(_trail_words.end() - _words, _trail_words.end(), d.begin());
                    _trail_words.resize(_trail_words.size() - _words);
                }
            }

            // Revises neighbours of every changed vertex until a fixpoint; false on a wipeout.
            auto propagate(std::vector<int> queue) -> bool
            {
                for (int v : queue)
                    _queued[v] = true;
                bool ok = true;
                while (ok && ! queue.empty()) {
                    int b = queue.back();
                    queue.pop_back();
                    _queued[b] = false;

                    std::fill(_support.begin(), _support.end(), 0);
                    auto db = domain(b);
                    for (std::size_t i = 0; i < _words; ++i)
                        for (auto bits = db[i]; bits; bits &= bits - 1) {
                            auto row = _target.row(static_cast<int>(i * 64 + std::countr_zero(bits)));
                            for (std::size_t k = 0; k < _words; ++k)
                                _support[k] |= row[k];
                        }

                    for (int a : _pattern_nbrs[b]) {
                        auto da = domain(a);
                        bool changes = false, nonempty = false;
                        for (std::size_t k = 0; k < _words; ++k) {
                            changes = changes || (da[k] & ~_support[k]);
                            nonempty = nonempty || (da[k] & _support[k]);
                        }
                        if (! changes)
                            continue;
                        if (! nonempty) {
                            ++_weight[a];
                            ++_weight[b];
                            ok = false;
                            break;
                        }
                        save(a);
                        for (std::size_t k = 0; k < _words; ++k)
                            da[k] &= _support[k];
                        if (! _queued[a]) {
                            _queued[a] = true;
                            queue.push_back(a);
                        }
                    }
                }
                for (int v : queue)
                    _queued[v] = false;
                return ok;
            }

            // Smallest domain relative to failure weight; ties go to the most
            // assigned neighbours, then the highest degree, then the lowest index.
            auto choose() -> int
            {
                int var = -1, best_size = 0, best_links = 0, best_degree = 0;
                std::int64_t best_weight = 1;
                for (int v = 0; v < _pattern.order(); ++v) {
                    if (_assigned[v])
                        continue;
                    int size = domain_size(v);
                    int links = 0;
                    for (int w : _pattern_nbrs[v])
                        links += _assigned[w];
                    int degree = static_cast<int>(_pattern_nbrs[v].size());
                    auto lhs = static_cast<std::int64_t>(size) * best_weight;
                    auto rhs = static_cast<std::int64_t>(best_size) * _weight[v];
                    if (var == -1 || lhs < rhs || (lhs == rhs && links > best_links)
                        || (lhs == rhs && links == best_links && degree > best_degree)) {
                        var = v;
                        best_size = size;
                        best_weight = _weight[v];
                        best_links = links;
                        best_degree = degree;
                    }
                }
                return var;
            }

            auto search(int depth) -> bool
            {
                int var = choose();
                if (var == -1) {
                    _solution.resize(_pattern.order());
                    for (int v = 0; v < _pattern.order(); ++v)
                        _solution[v] = VertexSet(_target.order(), domain(v)).first();
                    return true;
                }

                std::vector<bool> orbit_tried;
                const bool break_symmetry = depth == 0 && _options.target_orbits.has_value();
                if (break_symmetry)
                    orbit_tried.assign(_target.order() + 1, false);

                auto values = VertexSet(_target.order(), domain(var)).members();
                _assigned[var] = true;
                for (int t : values) {
                    if (break_symmetry) {
                        int orbit = (*_options.target_orbits)[t];
                        if (orbit_tried[orbit])
                            continue;
                        orbit_tried[orbit] = true;
                    }
                    ++_nodes;
                    auto mark = _trail_vars.size();
                    save(var);
                    auto d = domain(var);
                    std::fill(d.begin(), d.end(), 0);
                    d[t >> 6] = std::uint64_t{1} << (t & 63);
                    if (propagate({var}) && search(depth + 1))
                        return true;
                    undo_to(mark);
                }
                _assigned[var] = false;
                return false;
            }

            const Graph & _pattern;
            const Graph & _target;
            const HomSearchOptions & _options;
            std::size_t _words;
            std::vector<std::vector<int>> _pattern_nbrs;
            std::vector<std::int64_t> _weight;
            std::vector<std::uint64_t> _domains;
            std::vector<bool> _assigned;
            std::vector<bool> _queued;
            std::vector<std::uint64_t> _support;
            std::vector<int> _trail_vars;
            std::vector<std::uint64_t> _trail_words;
            std::vector<int> _solution;
            std::uint64_t _nodes = 0;
        };

        class Colourer
        {
        public:
            Colourer(const Graph & g, int k) :
                _g(g),
                _k(k),
                _colour(g.order(), -1)
            {
            }

            auto run() -> std::optional<std::vector<int>>
            {
                if (search(0, 0))
                    return _colour;
                return std::nullopt;
            }

        private:
            // DSATUR order: most distinct neighbour colours, then degree, then lowest index.
            auto pick() const -> int
            {
                int best = -1, best_sat = -1, best_deg = -1;
                for (int v = 0; v < _g.order(); ++v) {
                    if (_colour[v] != -1)
                        continue;
                    std::vector<bool> used(_k, false);
                    int sat = 0;
                    auto nbrs = _g.neighbours(v);
                    for (int w = nbrs.first(); w != -1; w = nbrs.next(w + 1))
                        if (_colour[w] != -1 && ! used[_colour[w]]) {
                            used[_colour[w]] = true;
                            ++sat;
                        }
                    int deg = _g.degree(v);
                    if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                        best = v;
                        best_sat = sat;
                        best_deg = deg;
                    }
                }
                return best;
            }

            auto search(int coloured, int colours_used) -> bool
            {
                if (coloured == _g.order())
                    return true;
                int v = pick();
                auto nbrs = _g.neighbours(v);
                // A fresh colour is interchangeable with every other unused one.
                int limit = std::min(_k, colours_used + 1);
                for (int c = 0; c < limit; ++c) {
                    bool clash = false;
                    for (int w = nbrs.first(); w != -1 && ! clash; w = nbrs.next(w + 1))
                        clash = _colour[w] == c;
                    if (clash)
                        continue;
                    _colour[v] = c;
                    if (search(coloured + 1, std::max(colours_used, c + 1)))
                        return true;
                    _colour[v] = -1;
                }
                return false;
            }

            const Graph & _g;
            int _k;
            std::vector<int> _colour;
        };

        void extend_cliques(const Graph & g, std::vector<int> & current, const VertexSet & candidates, int remaining,
            std::vector<std::vector<int>> & out)
        {
            if (remaining == 0) {
                out.push_back(current);
                return;
            }
            for (int v = candidates.first(); v != -1; v = candidates.next(v + 1)) {
                VertexSet next(g.order());
                for (int w = candidates.next(v + 1); w != -1; w = candidates.next(w + 1))
                    if (g.adjacent(v, w))
                        next.set(w);
                if (next.count() < remaining - 1)
                    continue;
                current.push_back(v);
                extend_cliques(g, current, next, remaining - 1, out);
                current.pop_back();
            }
        }
    }

    auto fold_dominated(const Graph & g) -> Fold
    {
        int n = g.order();
        auto alive = VertexSet::full(n);
        std::vector<int> parent(n, -1);

        // N(u) within the survivors, compared word by word.
        auto dominated_by = [&](int u, int v) {
            auto ru = g.row(u), rv = g.row(v);
            auto live = alive.words();
            for (std::size_t i = 0; i < ru.size(); ++i)
                if (ru[i] & live[i] & ~rv[i])
                    return false;
            return true;
        };

        bool changed = true;
        while (changed) {
            changed = false;
            for (int u = alive.first(); u != -1; u = alive.next(u + 1))
                for (int v = alive.first(); v != -1; v = alive.next(v + 1))
                    if (v != u && dominated_by(u, v)) {
                        parent[u] = v;
                        alive.reset(u);
                        changed = true;
                        break;
                    }
        }

        auto kept = alive.members();
        std::vector<int> index_in_core(n, -1);
        for (std::size_t i = 0; i < kept.size(); ++i)
            index_in_core[kept[i]] = static_cast<int>(i);

        Fold out{induced_subgraph(g, kept), kept, std::vector<int>(n)};
        for (int v = 0; v < n; ++v) {
            int w = v;
            while (parent[w] != -1)
                w = parent[w];
            out.image[v] = index_in_core[w];
        }
        return out;
    }

    auto is_valid_witness(const Graph & pattern, const Graph & target, const HomWitness & w) -> bool
    {
        return is_edge_preserving(pattern, target, w.mapping);
    }

    auto compose(const HomWitness & w1, const HomWitness & w2) -> HomWitness
    {
        HomWitness out;
        out.mapping.reserve(w1.mapping.size());
        for (int m : w1.mapping)
            out.mapping.push_back(w2.mapping.at(m));
        return out;
    }

    auto solve_homomorphism(const Graph & pattern, const Graph & target, const HomSearchOptions & options)
        -> HomSearchResult
    {
        if (options.target_orbits && static_cast<int>(options.target_orbits->size()) != target.order())
            throw InvalidParameter("target orbit labelling has the wrong length");

        if (pattern.order() == 0)
            return {HomWitness{}, 0};
        if (target.order() == 0)
            return {std::nullopt, 0};

        auto q = fold_dominated(pattern);
        auto result = HomSearcher(q.graph, target, options).run();
        if (result.witness) {
            HomWitness full;
            full.mapping.resize(pattern.order());
            for (int v = 0; v < pattern.order(); ++v)
                full.mapping[v] = result.witness->mapping[q.image[v]];
            assert(is_valid_witness(pattern, target, full));
            result.witness = std::move(full);
        }
        return result;
    }

    auto has_homomorphism(const Graph & pattern, const Graph & target) -> std::optional<HomWitness>
    {
        return solve_homomorphism(pattern, target).witness;
    }

    auto find_colouring(const Graph & g, int k) -> std::optional<std::vector<int>>
    {
        if (k < 0)
            throw InvalidParameter("number of colours must be nonnegative");
        if (g.order() == 0)
            return std::vector<int>{};
        if (k == 0)
            return std::nullopt;

        auto q = fold_dominated(g);
        auto colouring = Colourer(q.graph, k).run();
        if (! colouring)
            return std::nullopt;
        std::vector<int> full(g.order());
        for (int v = 0; v < g.order(); ++v)
            full[v] = (*colouring)[q.image[v]];
        return full;
    }

    auto is_k_colorable(const Graph & g, int k) -> bool
    {
        return find_colouring(g, k).has_value();
    }

    auto greedy_clique(const Graph & g) -> std::vector<int>
    {
        std::vector<int> order(g.order());
        for (int v = 0; v < g.order(); ++v)
            order[v] = v;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
        std::vector<int> clique;
        for (int v : order)
            if (std::all_of(clique.begin(), clique.end(), [&](int c) { return g.adjacent(v, c); }))
                clique.push_back(v);
        std::sort(clique.begin(), clique.end());
        return clique;
    }

    auto chromatic_number(const Graph & g) -> int
    {
        if (g.order() == 0)
            return 0;
        for (int k = static_cast<int>(greedy_clique(g).size());; ++k)
            if (is_k_colorable(g, k))
                return k;
    }

    auto cliques_of_size(const Graph & g, int a) -> std::vector<std::vector<int>>
    {
        if (a < 0)
            throw InvalidParameter("clique size must be nonnegative");
        std::vector<std::vector<int>> out;
        std::vector<int> current;
        extend_cliques(g, current, VertexSet::full(g.order()), a, out);
        return out;
    }

    auto clique_number(const Graph & g) -> int
    {
        int w = static_cast<int>(greedy_clique(g).size());
        while (! cliques_of_size(g, w + 1).empty())
            ++w;
        return w;
    }

    auto common_neighbourhood(const Graph & g, const std::vector<int> & clique) -> VertexSet
    {
        auto common = VertexSet::full(g.order());
        for (int v : clique)
            common &= g.row(v);
        return common;
    }

    auto is_a_locally_bipartite(const Graph & g, int a) -> LocalBipartiteness
    {
        if (a < 1)
            throw InvalidParameter("local bipartiteness needs a >= 1");
        for (auto & k : cliques_of_size(g, a))
            if (! is_bipartite(induced_subgraph(g, common_neighbourhood(g, k))))
                return {false, std::move(k)};
        return {true, std::nullopt};
    }
}
