#pragma once

#include <bqf/geometry.hpp>

#include <span>
#include <string>

namespace bqf::plot {

enum class Region { pi, pibar };

/// Standalone SVG 1.1 document: the region outline (its two vertical sides
/// and the unit-circle arc) plus one marker per point. Floating point is
/// used only here, rounded to 6 decimals; output is byte-stable.
///
/// At most 10^4 points (domain_error otherwise).
std::string render_svg(std::span<const AlgebraicPoint> points, Region region);

}  // namespace bqf::plot
