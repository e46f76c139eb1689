#include "oracles.hh"

#include <mdstab/errors.hh>
#include <mdstab/gallery.hh>
#include <mdstab/homomorphism.hh>

#include <gtest/gtest.h>

using namespace mdstab;

namespace
{
    auto is_subgraph_by_identity(const Graph & small, const Graph & big) -> bool
    {
        if (small.order() > big.order())
            return false;
        for (auto [u, v] : small.edges())
            if (! big.adjacent(u, v))
                return false;
        return true;
    }
}

TEST(Gallery, SequenceOrder)
{
    const GalleryId expected[] = {GalleryId::K4, GalleryId::W5, GalleryId::W7, GalleryId::C7bar, GalleryId::W9,
        GalleryId::H2plus, GalleryId::W11, GalleryId::H2, GalleryId::W13, GalleryId::T0, GalleryId::W15,
        GalleryId::H1plusplus};
    for (int j = 1; j <= f_sequence_length; ++j)
        EXPECT_EQ(f_sequence(j), expected[j - 1]);
    EXPECT_THROW((void)f_sequence(0), InvalidParameter);
    EXPECT_THROW((void)f_sequence(13), InvalidParameter);
}

TEST(Gallery, Names)
{
    for (int j = 1; j <= f_sequence_length; ++j) {
        auto id = f_sequence(j);
        EXPECT_EQ(parse_gallery_id(gallery_name(id)), id);
    }
    EXPECT_EQ(parse_gallery_id("h2PLUS"), GalleryId::H2plus);
    EXPECT_EQ(parse_gallery_id("petersen"), GalleryId::Petersen);
    EXPECT_EQ(parse_gallery_id("W17"), std::nullopt);
}

TEST(Gallery, AllFourChromatic)
{
    for (int j = 1; j <= f_sequence_length; ++j) {
        const auto & f = gallery_graph(f_sequence(j));
        EXPECT_EQ(chromatic_number(f), 4) << gallery_name(f_sequence(j));
        if (f.order() <= 8) {
            EXPECT_EQ(oracle::chromatic_number(f), 4) << gallery_name(f_sequence(j));
        }
    }
}

TEST(Gallery, Shapes)
{
    const auto & h2 = gallery_graph(GalleryId::H2);
    EXPECT_EQ(h2.order(), 7);
    EXPECT_EQ(h2.edge_count(), 13);

    const auto & t0 = gallery_graph(GalleryId::T0);
    EXPECT_EQ(t0.order(), 10);
    EXPECT_EQ(t0.degree(7), 7);
    EXPECT_EQ(t0.degree(8), 7);
    EXPECT_EQ(t0.degree(9), 3);

    const auto & c7 = gallery_graph(GalleryId::C7bar);
    EXPECT_EQ(degree_profile(c7), (DegreeProfile{4, 4, true}));
    EXPECT_TRUE(has_homomorphism(c7, make_cycle_complement(7)));
    EXPECT_TRUE(has_homomorphism(make_cycle_complement(7), c7));

    // W9 against K1 + C9 with the hub moved from vertex 9 to vertex 0.
    const auto & w9 = gallery_graph(GalleryId::W9);
    auto k1c9 = join(make_complete(1), make_cycle(9));
    std::vector<int> f(10);
    for (int i = 0; i < 9; ++i)
        f[i] = i + 1;
    f[9] = 0;
    EXPECT_TRUE(is_edge_preserving(w9, k1c9, f));
    EXPECT_EQ(w9.edge_count(), k1c9.edge_count());
}

TEST(Gallery, EdgeDeletionChain)
{
    EXPECT_TRUE(is_subgraph_by_identity(gallery_graph(GalleryId::H2), gallery_graph(GalleryId::H2plus)));
    EXPECT_TRUE(is_subgraph_by_identity(gallery_graph(GalleryId::H2), gallery_graph(GalleryId::C7bar)));
    EXPECT_EQ(gallery_graph(GalleryId::C7bar).edge_count() - 1, gallery_graph(GalleryId::H2).edge_count());
}

TEST(Gallery, WheelsOrLocallyBipartite)
{
    for (int j = 1; j <= f_sequence_length; ++j) {
        auto id = f_sequence(j);
        bool wheel = id == GalleryId::K4 || wheel_rim(id).has_value();
        EXPECT_EQ(is_a_locally_bipartite(gallery_graph(id), 1).holds, ! wheel) << gallery_name(id);
    }
}

TEST(Gallery, Weightings)
{
    struct Case
    {
        GalleryId id;
        int total;
        int min_degree;
    };
    for (auto [id, total, min_degree] : {Case{GalleryId::H2plus, 9, 5}, Case{GalleryId::H2, 11, 6},
             Case{GalleryId::T0, 13, 7}, Case{GalleryId::H1plusplus, 15, 8}}) {
        ASSERT_TRUE(has_gallery_weighting(id));
        auto w = gallery_weighting(id);
        EXPECT_EQ(w.total(), total);
        auto b = blow_up(w);
        EXPECT_EQ(b.order(), total);
        EXPECT_EQ(b.min_degree(), min_degree);
    }
    EXPECT_FALSE(has_gallery_weighting(GalleryId::W5));
    EXPECT_THROW((void)gallery_weighting(GalleryId::C7bar), Unsupported);
}

TEST(Gallery, HomMatrixFollowsTheSequence)
{
    // F_j -> F_i for i >= j would collapse the threshold sequence; none holds.
    for (int j = 1; j <= f_sequence_length; ++j)
        for (int i = j + 1; i <= f_sequence_length; ++i)
            EXPECT_FALSE(has_homomorphism(gallery_graph(f_sequence(j)), gallery_graph(f_sequence(i))))
                << j << " -> " << i;
}
