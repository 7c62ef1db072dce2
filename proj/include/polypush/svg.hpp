#pragma once

#include "polypush/pushout.hpp"

#include <optional>
#include <string>

namespace polypush {

struct RenderOptions {
    // Coordinate pair used when the ambient dimension exceeds 2.
    std::optional<std::pair<int, int>> project;
    double width = 640;
};

// Draws the complex edges (Q highlighted), the set model's samples and full
// simplices, and optionally one push record's apex, cone rays and boundary
// images. Throws validation_error for ambient dim > 2 without a projection.
std::string render_svg(const SimplicialComplex& cx, const SetModel* sm = nullptr,
                       const PushRecord* overlay = nullptr, RenderOptions opts = {});

}  // namespace polypush
