#include "tangle/render.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>

#include "tangle/error.hpp"

namespace tangle {

namespace {

void place_tree(const RootedBinaryTree& tree, const std::vector<Label>& order, double line_x, double dir,
                const DrawingSpec& spec, std::vector<PlacedLeaf>& leaves, std::vector<Point>& internal,
                std::vector<Segment>& edges) {
  std::unordered_map<Label, int> pos;
  for (std::size_t k = 0; k < order.size(); ++k) pos.emplace(order[k], static_cast<int>(k));
  const auto count = tree.node_count();
  std::vector<int> lo(count), hi(count);
  std::vector<Point> at(count);
  for (auto v = static_cast<NodeId>(count) - 1; v >= 0; --v) {
    if (tree.is_leaf(v)) {
      lo[v] = hi[v] = pos.at(tree.label(v));
    } else {
      auto [a, b] = tree.children(v);
      lo[v] = std::min(lo[a], lo[b]);
      hi[v] = std::max(hi[a], hi[b]);
    }
    const double span = hi[v] - lo[v];
    at[v] = {line_x + dir * span * spec.unit * spec.spread, (lo[v] + hi[v]) * 0.5 * spec.unit};
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    leaves.push_back({order[k], at[*tree.find_leaf(order[k])]});
  }
  for (NodeId v : tree.internal_preorder()) {
    internal.push_back(at[v]);
    auto [a, b] = tree.children(v);
    edges.push_back({at[v], at[a]});
    edges.push_back({at[v], at[b]});
  }
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string tex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '#': case '$': case '%': case '&': case '_': case '{': case '}':
        out += '\\';
        out += c;
        break;
      case '\\': out += "\\textbackslash{}"; break;
      case '~': out += "\\textasciitilde{}"; break;
      case '^': out += "\\textasciicircum{}"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

Drawing compute_drawing(const Layout& layout, const DrawingSpec& spec) {
  if (!(spec.unit > 0) || !(spec.gutter > 0) || !(spec.spread > 0)) {
    throw InvalidArgument("drawing spec needs positive unit, gutter and spread");
  }
  const Tanglegram& t = layout.tanglegram();
  Drawing d;
  place_tree(t.left(), layout.left_order(), 0.0, -1.0, spec, d.left_leaves, d.left_internal, d.left_edges);
  place_tree(t.right(), layout.right_order(), spec.gutter, 1.0, spec, d.right_leaves, d.right_internal,
             d.right_edges);
  std::unordered_map<Label, Point> right_at;
  for (const auto& leaf : d.right_leaves) right_at.emplace(leaf.label, leaf.at);
  for (const auto& leaf : d.left_leaves) {
    d.matching.push_back({leaf.at, right_at.at(*t.partner_of_left(leaf.label))});
  }
  return d;
}

std::string to_svg(const Layout& layout, const DrawingSpec& spec) {
  const Drawing d = compute_drawing(layout, spec);
  const double n = static_cast<double>(layout.left_order().size());
  const double min_x = d.left_internal.empty() ? 0.0 : d.left_internal.front().x;
  const double max_x = d.right_internal.empty() ? spec.gutter : d.right_internal.front().x;
  const double top = (n - 1) * spec.unit;
  const double margin = 20.0;
  const double px = spec.px_per_unit;
  auto sx = [&](double x) { return num(margin + (x - min_x) * px); };
  auto sy = [&](double y) { return num(margin + (top - y) * px); };
  const double width = 2 * margin + (max_x - min_x) * px;
  const double height = 2 * margin + top * px;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  out += "  <rect class=\"background\" x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" fill=\"white\"/>\n";
  auto edges = [&](const std::vector<Segment>& segs, const char* cls) {
    out += std::string("  <g class=\"") + cls + "\" stroke=\"black\" stroke-width=\"" + num(spec.tree_stroke) +
           "\">\n";
    for (const auto& s : segs) {
      out += std::string("    <line class=\"tree\" x1=\"") + sx(s.a.x) + "\" y1=\"" + sy(s.a.y) + "\" x2=\"" +
             sx(s.b.x) + "\" y2=\"" + sy(s.b.y) + "\"/>\n";
    }
    out += "  </g>\n";
  };
  edges(d.left_edges, "left-tree");
  edges(d.right_edges, "right-tree");

  out += "  <g class=\"matching\" stroke=\"black\" stroke-width=\"" + num(spec.match_stroke) +
         "\" stroke-dasharray=\"" + xml_escape(spec.dash) + "\">\n";
  for (const auto& s : d.matching) {
    out += "    <line class=\"match\" x1=\"" + sx(s.a.x) + "\" y1=\"" + sy(s.a.y) + "\" x2=\"" + sx(s.b.x) +
           "\" y2=\"" + sy(s.b.y) + "\"/>\n";
  }
  out += "  </g>\n";

  out += "  <g class=\"vertices\" fill=\"black\">\n";
  for (const auto* pts : {&d.left_internal, &d.right_internal}) {
    for (const auto& p : *pts) {
      out += "    <circle class=\"internal\" cx=\"" + sx(p.x) + "\" cy=\"" + sy(p.y) + "\" r=\"3.000\"/>\n";
    }
  }
  out += "  </g>\n";

  out += "  <g class=\"leaves\" font-family=\"sans-serif\" font-size=\"11\">\n";
  auto leaves = [&](const std::vector<PlacedLeaf>& ls, const char* side, double dx, const char* anchor) {
    for (const auto& l : ls) {
      out += std::string("    <rect class=\"leaf ") + side + "\" x=\"" + num(margin + (l.at.x - min_x) * px - 3) +
             "\" y=\"" + num(margin + (top - l.at.y) * px - 3) + "\" width=\"6.000\" height=\"6.000\"/>\n";
      out += std::string("    <text class=\"leaf-label ") + side + "\" x=\"" + sx(l.at.x + dx / px) + "\" y=\"" +
             sy(l.at.y) + "\" dy=\"-4\" text-anchor=\"" + anchor + "\">" + xml_escape(l.label) + "</text>\n";
    }
  };
  leaves(d.left_leaves, "left", 6.0, "start");
  leaves(d.right_leaves, "right", -6.0, "end");
  out += "  </g>\n";
  out += "</svg>\n";
  return out;
}

std::string to_tikz(const Layout& layout, const DrawingSpec& spec) {
  const Drawing d = compute_drawing(layout, spec);
  auto pt = [](Point p) { return "(" + num(p.x) + "," + num(p.y) + ")"; };
  std::string out = "\\begin{tikzpicture}\n";
  for (const auto* segs : {&d.left_edges, &d.right_edges}) {
    for (const auto& s : *segs) out += "  \\draw " + pt(s.a) + "--" + pt(s.b) + ";\n";
  }
  for (const auto& s : d.matching) out += "  \\draw [dashed] " + pt(s.a) + "--" + pt(s.b) + ";\n";
  for (const auto* pts : {&d.left_internal, &d.right_internal}) {
    for (const auto& p : *pts) out += "  \\node[fill=black,circle,inner sep=1.5pt] at " + pt(p) + " {};\n";
  }
  for (const auto& l : d.left_leaves) {
    out += "  \\node[fill=black,rectangle,inner sep=2pt,label=right:{" + tex_escape(l.label) + "}] at " +
           pt(l.at) + " {};\n";
  }
  for (const auto& l : d.right_leaves) {
    out += "  \\node[fill=black,rectangle,inner sep=2pt,label=left:{" + tex_escape(l.label) + "}] at " +
           pt(l.at) + " {};\n";
  }
  out += "\\end{tikzpicture}\n";
  return out;
}

std::string to_text(const Layout& layout) {
  auto join = [](const std::vector<Label>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) s += ' ';
      s += v[k];
    }
    return s;
  };
  return "left: " + join(layout.left_order()) + "\nright: " + join(layout.right_order()) +
         "\ncrossings: " + std::to_string(count_crossings(layout)) + "\n";
}

}  // namespace tangle
