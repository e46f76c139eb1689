#include "oracles.hh"

#include <mdstab/errors.hh>
#include <mdstab/homomorphism.hh>
#include <mdstab/witness.hh>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

using namespace mdstab;

namespace
{
    auto ratio(const Graph & g) -> Rational
    {
        return {g.min_degree(), g.order()};
    }
}

TEST(OddCycleWitness, Examples)
{
    auto a = odd_cycle_witness(2, 10);
    EXPECT_EQ(a, blow_up_uniform(make_cycle(5), 2));
    EXPECT_EQ(degree_profile(a), (DegreeProfile{4, 4, true}));
    EXPECT_EQ(odd_cycle_witness(2, 11).min_degree(), 4);
    EXPECT_EQ(degree_profile(odd_cycle_witness(3, 21)), (DegreeProfile{6, 6, true}));
    EXPECT_THROW((void)odd_cycle_witness(2, 4), InvalidParameter);
}

TEST(RegularJoinWitness, Examples)
{
    EXPECT_EQ(degree_profile(regular_join_witness(3, 2)), (DegreeProfile{5, 5, true}));
    EXPECT_EQ(regular_join_witness(3, 2).order(), 8);
    EXPECT_EQ(regular_join_witness(4, 1), make_complete(5));
    auto w = regular_join_witness(3, 3);
    EXPECT_EQ(w.order(), 12);
    EXPECT_EQ(degree_profile(w), (DegreeProfile{7, 7, true}));
}

TEST(RegularJoinWitness, ExactIdentity)
{
    for (int r = 3; r <= 5; ++r)
        for (int g = 1; g <= 5; ++g) {
            auto w = regular_join_witness(r, g);
            auto profile = degree_profile(w);
            EXPECT_TRUE(profile.regular);
            EXPECT_EQ(w.order(), (2 * g - 1) * (r - 1) + 2);
            EXPECT_EQ(profile.min_degree, (2 * g - 1) * (r - 2) + 2);
            Rational k = 1 - 1 / (r - 1 + Rational(2, 2 * g - 1));
            EXPECT_EQ(k * w.order(), Rational(profile.min_degree));
            if (g >= 2) {
                EXPECT_EQ(k, cycle_join_threshold(r, g - 1));
            }
        }
}

TEST(GalleryJoinWitness, Examples)
{
    EXPECT_EQ(ratio(gallery_join_witness(3, GalleryId::C7bar)), Rational(4, 7));
    EXPECT_EQ(ratio(gallery_join_witness(3, GalleryId::H2plus)), Rational(5, 9));
    auto h2 = gallery_join_witness(4, GalleryId::H2);
    EXPECT_EQ(h2.order(), 16);
    EXPECT_EQ(h2.min_degree(), 11);
    EXPECT_THROW((void)gallery_join_witness(3, GalleryId::W5), InvalidParameter);
    EXPECT_THROW((void)gallery_join_witness(2, GalleryId::H2), InvalidParameter);
}

TEST(GalleryJoinWitness, ClosedForm)
{
    struct Case
    {
        GalleryId id;
        int m, d;
    };
    for (int r = 3; r <= 5; ++r) {
        EXPECT_EQ(ratio(gallery_join_witness(r, GalleryId::C7bar)), Rational(3 * r - 5, 3 * r - 2));
        for (auto [id, m, d] : {Case{GalleryId::H2plus, 9, 5}, Case{GalleryId::H2, 11, 6}, Case{GalleryId::T0, 13, 7},
                 Case{GalleryId::H1plusplus, 15, 8}}) {
            auto w = gallery_join_witness(r, id);
            Rational expected = 1 - 1 / (r - 3 + 1 / (1 - Rational(d, m)));
            EXPECT_EQ(ratio(w), expected) << gallery_name(id) << " r=" << r;
            // Zero weights drop vertices, so only the strict variant keeps chi = r + 1.
            EXPECT_LE(chromatic_number(w), r + 1);
            EXPECT_EQ(chromatic_number(gallery_join_witness(r, id, 2, true)), r + 1);
            EXPECT_TRUE(has_homomorphism(w, join(make_clique_or_empty(r - 3), gallery_graph(id))));
        }
    }
}

TEST(GalleryJoinWitness, ScaleAndStrict)
{
    auto plain = gallery_join_witness(4, GalleryId::T0);
    auto scaled = gallery_join_witness(4, GalleryId::T0, 3);
    EXPECT_EQ(scaled.order(), 3 * plain.order());
    EXPECT_EQ(ratio(scaled), ratio(plain));
    // Strict keeps a copy of every base vertex, so T0 itself embeds.
    auto strict = gallery_join_witness(3, GalleryId::T0, 4, true);
    const auto & t0 = gallery_graph(GalleryId::T0);
    EXPECT_TRUE(has_homomorphism(strict, t0));
    EXPECT_TRUE(has_homomorphism(t0, strict));
    EXPECT_LT(ratio(strict), ratio(gallery_join_witness(3, GalleryId::T0)));
    EXPECT_THROW((void)gallery_join_witness(3, GalleryId::T0, 0), InvalidParameter);
}

TEST(Witness, ChromaticNumberOfBase)
{
    for (int g = 1; g <= 3; ++g)
        EXPECT_EQ(chromatic_number(odd_cycle_witness(g, 4 * g + 2)), chromatic_number(make_cycle(2 * g + 1)));
    for (int r = 3; r <= 4; ++r)
        for (int g = 1; g <= 3; ++g)
            EXPECT_EQ(chromatic_number(regular_join_witness(r, g)), chromatic_number(cycle_join_target(r, g)));
}

TEST(EditBound, Examples)
{
    EXPECT_EQ(edit_lower_bound(5, 10), 4);
    EXPECT_EQ(edit_lower_bound(5, 11), 4);
    EXPECT_EQ(edit_lower_bound(7, 21), 9);
    EXPECT_THROW((void)edit_lower_bound(5, 4), InvalidParameter);
}

TEST(EditBound, BelowBruteForceOnSmallWitnesses)
{
    for (int g = 1; g <= 5; ++g)
        for (int n = 2 * g + 1; n <= 12; ++n) {
            auto w = odd_cycle_witness(g, n);
            EXPECT_GE(oracle::min_edits_to_k_partite(w, 2), edit_lower_bound(2 * g + 1, n)) << g << " " << n;
        }
    auto w = balanced_blow_up(regular_join_witness(3, 2), 9);
    EXPECT_GE(oracle::min_edits_to_k_partite(w, 3), edit_lower_bound(8, 9));
    auto c7 = gallery_join_witness(3, GalleryId::C7bar);
    EXPECT_GE(oracle::min_edits_to_k_partite(c7, 3), edit_lower_bound(7, 7));
}

TEST(Certify, Examples)
{
    auto k3 = certify(make_complete(3), classify(make_complete(3)), 50);
    EXPECT_TRUE(k3.passed());
    EXPECT_EQ(k3.base_order, 5);
    EXPECT_EQ(k3.witness_min_degree, 20);
    EXPECT_EQ(k3.edit_bound, 100);

    EXPECT_TRUE(certify(make_petersen(), classify(make_petersen()), 50).passed());

    auto k4 = certify(make_complete(4), classify(make_complete(4)), 40);
    EXPECT_TRUE(k4.passed());
    EXPECT_EQ(k4.base_order, 8);
    EXPECT_EQ(k4.witness_min_degree, 25);
}

TEST(Certify, WitnessBaseMatchesValue)
{
    for (const auto & h : {make_complete(3), make_complete(4), make_complete(5), make_wheel(5), make_wheel(9),
             gallery_graph(GalleryId::C7bar), gallery_graph(GalleryId::H2plus), gallery_graph(GalleryId::H2),
             gallery_graph(GalleryId::T0)}) {
        auto result = classify(h);
        auto base = witness_base(result);
        EXPECT_EQ(ratio(base), result.value());
        EXPECT_FALSE(has_homomorphism(h, base));
        EXPECT_TRUE(certify(h, result, 4 * base.order()).passed());
    }
}

TEST(Certify, IntervalBaseIsRegularJoin)
{
    DeltaResult interval{3, interval_bounds(3, 8), {}, 0};
    auto base = witness_base(interval);
    EXPECT_EQ(base, regular_join_witness(3, 8));
    EXPECT_EQ(ratio(base), interval_bounds(3, 8).lower);
}

TEST(Certify, Errors)
{
    auto result = classify(make_complete(4));
    EXPECT_THROW((void)certify(make_complete(3), result, 50), InvalidParameter);
    EXPECT_THROW((void)certify(make_complete(4), result, 7), InvalidParameter);
    auto json = to_json(certify(make_complete(4), result, 8));
    EXPECT_EQ(json["checks"].size(), 3u);
}
