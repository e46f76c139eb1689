#pragma once

#include <mdstab/graph.hh>

#include <array>
#include <optional>
#include <string_view>

namespace mdstab
{
    // Named 4-chromatic graphs of the F-sequence, in sequence order, plus Petersen.
    enum class GalleryId
    {
        K4,
        W5,
        W7,
        C7bar,
        W9,
        H2plus,
        W11,
        H2,
        W13,
        T0,
        W15,
        H1plusplus,
        Petersen
    };

    inline constexpr int f_sequence_length = 12;

    // F_index for index in 1..12; throws InvalidParameter otherwise.
    [[nodiscard]] auto f_sequence(int index) -> GalleryId;

    [[nodiscard]] auto gallery_name(GalleryId id) -> std::string_view;

    // Accepts the names produced by gallery_name, case-insensitively.
    [[nodiscard]] auto parse_gallery_id(std::string_view name) -> std::optional<GalleryId>;

    // Rim length for the wheels, nullopt otherwise.
    [[nodiscard]] auto wheel_rim(GalleryId id) -> std::optional<int>;

    // Labelling: the 7-cycle (or wheel rim) comes first as 0..6. Extra vertices:
    // H2plus u = 7; T0 u1 = 7, u6 = 8, t = 9; H1plusplus ul = 7, ur = 8; wheel hub last.
    // The table is built and checked once (chromatic number 4 for the F-sequence,
    // extremal weighting ratios); a transcription error throws std::logic_error.
    [[nodiscard]] auto gallery_graph(GalleryId id) -> const Graph &;

    [[nodiscard]] auto has_gallery_weighting(GalleryId id) -> bool;

    // Extremal weightings for H2plus, H2, T0 and H1plusplus; throws Unsupported otherwise.
    [[nodiscard]] auto gallery_weighting(GalleryId id) -> Weighting;
}
