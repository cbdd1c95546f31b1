// Minimal SVG 1.1 rendering of families, adversary outcomes and curve
// systems. Exact rationals are converted to doubles only here.
#pragma once

#include <span>
#include <string>

#include "stripcolor/adversary.hpp"
#include "stripcolor/curves.hpp"
#include "stripcolor/engine.hpp"
#include "stripcolor/geometry.hpp"

namespace stripcolor {

std::string svg_strip_family(std::span<const StripObject> objects, std::span<const Color> colors);

// Segments tinted by color, witness line dashed.
std::string svg_adversary(const AdversaryOutcome& outcome);

// Curves as polylines; stored realization lines drawn dashed when requested.
std::string svg_curve_system(const CurveSystem& sys, bool show_lines);

}  // namespace stripcolor
