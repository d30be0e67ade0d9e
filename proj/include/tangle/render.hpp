#pragma once

#include <string>
#include <vector>

#include "tangle/layout.hpp"

namespace tangle {

// Abstract drawing units. Leaf k (0-based along the order) sits at height
// k * unit; the left leaves on x = 0 and the right leaves on x = gutter.
struct DrawingSpec {
  double unit = 1.0;
  double gutter = 2.0;
  // Horizontal distance of an internal vertex from its leaf line, per unit of
  // its leaf span.
  double spread = 0.5;
  double px_per_unit = 40.0;  // SVG only
  double tree_stroke = 1.5;
  double match_stroke = 1.0;
  std::string dash = "4,3";  // SVG stroke-dasharray; TikZ always uses [dashed]
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Segment {
  Point a;
  Point b;
};

struct PlacedLeaf {
  Label label;
  Point at;
};

// Coordinates in drawing units with y pointing up (first leaf at the bottom).
// Internal vertices sit at the apex of the triangle over their leaf block, so
// every tree edge lies on its parent's triangle boundary and no two tree
// edges cross.
struct Drawing {
  std::vector<PlacedLeaf> left_leaves;
  std::vector<PlacedLeaf> right_leaves;
  std::vector<Point> left_internal;
  std::vector<Point> right_internal;
  std::vector<Segment> left_edges;
  std::vector<Segment> right_edges;
  std::vector<Segment> matching;  // in left order
};

Drawing compute_drawing(const Layout& layout, const DrawingSpec& spec = {});

std::string to_svg(const Layout& layout, const DrawingSpec& spec = {});
std::string to_tikz(const Layout& layout, const DrawingSpec& spec = {});
// Plain listing of both orders and the crossing count.
std::string to_text(const Layout& layout);

}  // namespace tangle
