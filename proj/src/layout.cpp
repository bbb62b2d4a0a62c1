#include "msr/layout.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace msr {

namespace {

constexpr double kTwoPi = 6.283185307179586;

std::string fmt6(double v) {
  if (std::fabs(v) < 5e-7) v = 0.0;  // avoid "-0.000000"
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

void check_sizes(const CircularLayout& layout, const Graph& g) {
  if (static_cast<int>(layout.positions.size()) != g.order())
    throw std::invalid_argument("layout / graph size mismatch");
}

}  // namespace

CircularLayout circular_layout(const Graph& g, const VertexOrdering& order,
                               double radius, double start_angle) {
  int n = g.order();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("ordering size mismatch");
  std::vector<char> seen(n + 1, 0);
  for (int v : order) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("ordering is not a permutation");
    seen[v] = 1;
  }
  if (radius <= 0) throw std::invalid_argument("radius must be positive");
  CircularLayout layout;
  layout.order = order;
  layout.radius = radius;
  layout.start_angle = start_angle;
  layout.positions.resize(n);
  for (int k = 0; k < n; ++k) {
    double ang = start_angle - kTwoPi * k / n;
    layout.positions[order[k] - 1] = {radius * std::cos(ang), radius * std::sin(ang)};
  }
  return layout;
}

std::string emit_svg(const CircularLayout& layout, const Graph& g) {
  check_sizes(layout, g);
  double scale = 250.0 / layout.radius;
  auto px = [&](double x) { return 300.0 + scale * x; };
  auto py = [&](double y) { return 300.0 - scale * y; };
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 600 600\">\n";
  out += "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  for (const auto& [u, v] : g.edges()) {
    const auto& a = layout.positions[u - 1];
    const auto& b = layout.positions[v - 1];
    out += "<line x1=\"" + fmt6(px(a[0])) + "\" y1=\"" + fmt6(py(a[1])) +
           "\" x2=\"" + fmt6(px(b[0])) + "\" y2=\"" + fmt6(py(b[1])) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  for (int v = 1; v <= g.order(); ++v) {
    const auto& p = layout.positions[v - 1];
    out += "<circle cx=\"" + fmt6(px(p[0])) + "\" cy=\"" + fmt6(py(p[1])) +
           "\" r=\"14\" fill=\"white\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fmt6(px(p[0])) + "\" y=\"" + fmt6(py(p[1])) +
           "\" text-anchor=\"middle\" dominant-baseline=\"central\" font-size=\"13\">" +
           std::to_string(v) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string emit_dot(const CircularLayout& layout, const Graph& g) {
  check_sizes(layout, g);
  std::string out;
  out += "graph G {\n";
  out += "  layout=\"neato\";\n";
  out += "  node [shape=circle, fixedsize=true, width=0.4];\n";
  for (int v = 1; v <= g.order(); ++v) {
    const auto& p = layout.positions[v - 1];
    out += "  " + std::to_string(v) + " [pos=\"" + fmt6(p[0]) + "," + fmt6(p[1]) + "!\"];\n";
  }
  for (const auto& [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace msr
