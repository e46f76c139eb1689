#include <mdstab/errors.hh>
#include <mdstab/gallery.hh>
#include <mdstab/homomorphism.hh>

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace mdstab
{
    namespace
    {
        constexpr std::array<GalleryId, f_sequence_length> sequence = {GalleryId::K4, GalleryId::W5, GalleryId::W7,
            GalleryId::C7bar, GalleryId::W9, GalleryId::H2plus, GalleryId::W11, GalleryId::H2, GalleryId::W13,
            GalleryId::T0, GalleryId::W15, GalleryId::H1plusplus};

        constexpr int gallery_size = 13;

        struct Entry
        {
            GalleryId id;
            std::string_view name;
        };

        constexpr std::array<Entry, gallery_size> names = {{{GalleryId::K4, "K4"}, {GalleryId::W5, "W5"},
            {GalleryId::W7, "W7"}, {GalleryId::C7bar, "C7bar"}, {GalleryId::W9, "W9"}, {GalleryId::H2plus, "H2plus"},
            {GalleryId::W11, "W11"}, {GalleryId::H2, "H2"}, {GalleryId::W13, "W13"}, {GalleryId::T0, "T0"},
            {GalleryId::W15, "W15"}, {GalleryId::H1plusplus, "H1plusplus"}, {GalleryId::Petersen, "Petersen"}}};

        void add_seven_cycle(GraphBuilder & b)
        {
            for (int i = 0; i < 7; ++i)
                b.add_edge(i, (i + 1) % 7);
        }

        // Square of the 7-cycle: the drawn labelling of the 7-cycle complement.
        auto make_c7_square() -> Graph
        {
            GraphBuilder b(7);
            add_seven_cycle(b);
            for (int i = 0; i < 7; ++i)
                b.add_edge(i, (i + 2) % 7);
            return std::move(b).build();
        }

        auto make_h2() -> Graph
        {
            GraphBuilder b(make_c7_square());
            b.remove_edge(1, 6);
            return std::move(b).build();
        }

        auto make_h2plus() -> Graph
        {
            GraphBuilder b(8);
            for (auto [u, v] : make_h2().edges())
                b.add_edge(u, v);
            for (int v : {0, 2, 5})
                b.add_edge(7, v);
            return std::move(b).build();
        }

        auto make_t0() -> Graph
        {
            constexpr int u1 = 7, u6 = 8, t = 9;
            GraphBuilder b(10);
            add_seven_cycle(b);
            for (int v = 0; v < 7; ++v) {
                if (v != 1)
                    b.add_edge(u1, v);
                if (v != 6)
                    b.add_edge(u6, v);
            }
            b.add_edge(t, 0);
            b.add_edge(t, u1);
            b.add_edge(t, u6);
            return std::move(b).build();
        }

        auto make_h1plusplus() -> Graph
        {
            constexpr int ul = 7, ur = 8;
            GraphBuilder b(9);
            add_seven_cycle(b);
            for (auto [u, v] : {Edge{3, 5}, Edge{5, 0}, Edge{0, 2}, Edge{2, 4}, Edge{6, 1}})
                b.add_edge(u, v);
            for (int v : {0, 2, 3})
                b.add_edge(ul, v);
            for (int v : {0, 3, 5})
                b.add_edge(ur, v);
            return std::move(b).build();
        }

        auto build(GalleryId id) -> Graph
        {
            if (auto rim = wheel_rim(id))
                return make_wheel(*rim);
            switch (id) {
            case GalleryId::K4: return make_complete(4);
            case GalleryId::C7bar: return make_c7_square();
            case GalleryId::H2plus: return make_h2plus();
            case GalleryId::H2: return make_h2();
            case GalleryId::T0: return make_t0();
            case GalleryId::H1plusplus: return make_h1plusplus();
            case GalleryId::Petersen: return make_petersen();
            default: break;
            }
            throw std::logic_error("unhandled gallery id");
        }

        auto weights_for(GalleryId id) -> std::optional<std::vector<int>>
        {
            switch (id) {
            case GalleryId::H2plus: return std::vector<int>{2, 0, 2, 1, 1, 2, 0, 1};
            case GalleryId::H2: return std::vector<int>{3, 1, 2, 1, 1, 2, 1};
            case GalleryId::T0: return std::vector<int>{4, 0, 0, 1, 1, 0, 0, 3, 3, 1};
            case GalleryId::H1plusplus: return std::vector<int>{5, 0, 3, 2, 0, 3, 0, 1, 1};
            default: return std::nullopt;
            }
        }

        // (min degree, order) the extremal weightings must reach.
        auto expected_ratio(GalleryId id) -> std::pair<int, int>
        {
            switch (id) {
            case GalleryId::H2plus: return {5, 9};
            case GalleryId::H2: return {6, 11};
            case GalleryId::T0: return {7, 13};
            case GalleryId::H1plusplus: return {8, 15};
            default: throw std::logic_error("no extremal weighting");
            }
        }

        auto index_of(GalleryId id) -> std::size_t
        {
            return static_cast<std::size_t>(id);
        }

        auto build_checked_table() -> std::array<Graph, gallery_size>
        {
            std::array<Graph, gallery_size> table;
            for (const auto & e : names)
                table[index_of(e.id)] = build(e.id);

            for (auto id : sequence)
                if (chromatic_number(table[index_of(id)]) != 4)
                    throw std::logic_error("gallery graph " + std::string(gallery_name(id)) + " is not 4-chromatic");

            for (auto id : {GalleryId::H2plus, GalleryId::H2, GalleryId::T0, GalleryId::H1plusplus}) {
                auto blown = blow_up(Weighting(table[index_of(id)], *weights_for(id)));
                auto [deg, order] = expected_ratio(id);
                if (blown.order() != order || blown.min_degree() != deg)
                    throw std::logic_error("weighted " + std::string(gallery_name(id)) + " has min degree "
                        + std::to_string(blown.min_degree()) + " on " + std::to_string(blown.order()) + " vertices");
            }
            return table;
        }
    }

    auto f_sequence(int index) -> GalleryId
    {
        if (index < 1 || index > f_sequence_length)
            throw InvalidParameter("F-sequence index must be in 1..12, got " + std::to_string(index));
        return sequence[index - 1];
    }

    auto gallery_name(GalleryId id) -> std::string_view
    {
        return names[index_of(id)].name;
    }

    auto parse_gallery_id(std::string_view name) -> std::optional<GalleryId>
    {
        auto lower = [](std::string_view s) {
            std::string out(s);
            std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
            return out;
        };
        for (const auto & e : names)
            if (lower(e.name) == lower(name))
                return e.id;
        return std::nullopt;
    }

    auto wheel_rim(GalleryId id) -> std::optional<int>
    {
        switch (id) {
        case GalleryId::W5: return 5;
        case GalleryId::W7: return 7;
        case GalleryId::W9: return 9;
        case GalleryId::W11: return 11;
        case GalleryId::W13: return 13;
        case GalleryId::W15: return 15;
        default: return std::nullopt;
        }
    }

    auto gallery_graph(GalleryId id) -> const Graph &
    {
        static const std::array<Graph, gallery_size> table = build_checked_table();
        return table[index_of(id)];
    }

    auto has_gallery_weighting(GalleryId id) -> bool
    {
        return weights_for(id).has_value();
    }

    auto gallery_weighting(GalleryId id) -> Weighting
    {
        auto w = weights_for(id);
        if (! w)
            throw Unsupported("no extremal weighting for " + std::string(gallery_name(id)));
        return Weighting(gallery_graph(id), std::move(*w));
    }
}
