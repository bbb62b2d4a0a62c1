#pragma once

#include <array>
#include <string>
#include <vector>

#include "msr/graph.hpp"

namespace msr {

// Clockwise circular embedding: the vertex at rank k sits at angle
// start_angle - 2*pi*k/n, so consecutive ranks subtend an arc of 2*pi/n.
struct CircularLayout {
  VertexOrdering order;
  std::vector<std::array<double, 2>> positions;  // positions[v-1] for vertex v
  double radius = 1.0;
  double start_angle = 0.0;
};

constexpr double kDefaultStartAngle = 1.5707963267948966;  // pi/2, first vertex on top

CircularLayout circular_layout(const Graph& g, const VertexOrdering& order,
                               double radius = 1.0,
                               double start_angle = kDefaultStartAngle);

// Deterministic emitters: byte-identical output for identical inputs.
// SVG uses a 600x600 viewbox with fixed 6-decimal coordinates.
std::string emit_svg(const CircularLayout& layout, const Graph& g);
std::string emit_dot(const CircularLayout& layout, const Graph& g);

}  // namespace msr
