#include <gtest/gtest.h>

#include <cmath>
#include <regex>

#include "hypergvl/hypergvl.hpp"
#include "hypergvl/selfcheck.hpp"

using namespace hgvl;

namespace {

std::size_t count_class(const std::string& svg, const std::string& cls) {
  const std::string needle = "class=\"" + cls + "\"";
  std::size_t count = 0;
  for (std::size_t at = svg.find(needle); at != std::string::npos; at = svg.find(needle, at + 1)) ++count;
  return count;
}

std::vector<std::string> labels_of(const std::string& svg, const std::string& cls) {
  const std::regex text("<text class=\"" + cls + "\"[^>]*>([^<]*)</text>");
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), text); it != std::sregex_iterator(); ++it)
    out.push_back((*it)[1]);
  return out;
}

double dist(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace

TEST(Visual, FormatNames) {
  EXPECT_EQ(visual_format_name(VisualFormat::Cli_Exp), "Cli-Exp");
  EXPECT_EQ(find_visual_format("St-Inc"), VisualFormat::St_Inc);
  EXPECT_FALSE(find_visual_format("Star"));
}

TEST(Layout, StressTwoNodesAtUnitDistance) {
  const auto l = layout_stress(2, {{0, 1}}, 3);
  EXPECT_NEAR(dist(l.positions[0], l.positions[1]), 1.0, 1e-3);
}

TEST(Layout, StressPathIsCollinear) {
  const auto l = layout_stress(3, {{0, 1}, {1, 2}}, 5);
  const auto& p = l.positions;
  EXPECT_NEAR(dist(p[0], p[1]), 1.0, 1e-2);
  EXPECT_NEAR(dist(p[1], p[2]), 1.0, 1e-2);
  EXPECT_NEAR(dist(p[0], p[2]), 2.0, 1e-2);
}

TEST(Layout, StressFourCycleIsSymmetric) {
  const auto l = layout_stress(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 7);
  const auto& p = l.positions;
  const double side = dist(p[0], p[1]);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_NEAR(dist(p[i], p[(i + 1) % 4]), side, 1e-2);
  EXPECT_NEAR(dist(p[0], p[2]), dist(p[1], p[3]), 1e-2);
}

TEST(Layout, StressDeterministic) {
  const NodeEdges e{{0, 1}, {1, 2}, {2, 3}, {1, 4}};
  EXPECT_EQ(layout_stress(5, e, 11), layout_stress(5, e, 11));
  EXPECT_EQ(layout_spring(5, e, 11), layout_spring(5, e, 11));
}

TEST(Layout, SpringCenteredAndScaled) {
  const auto l = layout_spring(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}, 2);
  double mx = 0, my = 0, lim = 0;
  for (const Point& p : l.positions) {
    mx += p.x / 6, my += p.y / 6;
    lim = std::max({lim, std::abs(p.x), std::abs(p.y)});
  }
  EXPECT_NEAR(mx, 0, 1e-9);
  EXPECT_NEAR(my, 0, 1e-9);
  EXPECT_NEAR(lim, 3.0, 1e-9);
}

TEST(Layout, ShellAngles) {
  const Box box{0, 0, 1000, 1000};
  const auto l = layout_shell(4, 2, box);
  const Point c = box.center();
  const double r = 400;
  // inner ring radius 0.5R starting at +x, counter-clockwise with y down
  EXPECT_NEAR(l.positions[0].x, c.x + 0.5 * r, 1e-9);
  EXPECT_NEAR(l.positions[0].y, c.y, 1e-9);
  EXPECT_NEAR(l.positions[1].x, c.x, 1e-9);
  EXPECT_NEAR(l.positions[1].y, c.y - 0.5 * r, 1e-9);
  EXPECT_NEAR(l.positions[4].x, c.x + r, 1e-9);
  EXPECT_NEAR(l.positions[5].x, c.x - r, 1e-9);
  EXPECT_THROW(layout_shell(0, 2, box), contract_error);
}

TEST(Layout, RowsCentered) {
  const Box box{0, 0, 900, 1000};
  const auto l = layout_rows(2, 1, box);
  EXPECT_DOUBLE_EQ(l.positions[0].x, 300);
  EXPECT_DOUBLE_EQ(l.positions[1].x, 600);
  EXPECT_DOUBLE_EQ(l.positions[0].y, 150);
  EXPECT_DOUBLE_EQ(l.positions[2].x, 450);
  EXPECT_DOUBLE_EQ(l.positions[2].y, 850);
}

TEST(Layout, FitToBoxKeepsInside) {
  const Layout raw{{{-3, 0}, {3, 1}, {0, -2}}};
  const Box box{100, 50, 400, 300};
  const auto fit = fit_to_box(raw, box, 20);
  for (const Point& p : fit.positions) {
    EXPECT_GE(p.x, 120 - 1e-9);
    EXPECT_LE(p.x, 480 + 1e-9);
    EXPECT_GE(p.y, 70 - 1e-9);
    EXPECT_LE(p.y, 330 + 1e-9);
  }
}

TEST(Hull, SquareWithInteriorPoint) {
  const auto hull = convex_hull({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}, {1, 0}});
  ASSERT_EQ(hull.size(), 4u);
  EXPECT_EQ(hull[0], (Point{0, 0}));
  EXPECT_EQ(hull[1], (Point{2, 0}));
  EXPECT_EQ(hull[2], (Point{2, 2}));
  EXPECT_EQ(hull[3], (Point{0, 2}));
}

TEST(Hull, TriangleAndDegenerate) {
  EXPECT_EQ(convex_hull({{0, 0}, {4, 0}, {1, 3}}).size(), 3u);
  EXPECT_THROW(convex_hull({{0, 0}, {1, 1}}), contract_error);
}

TEST(Svg, WorkedExampleCounts) {
  const auto h = worked_example();
  const auto cli = render_svg(h, VisualFormat::Cli_Exp);
  EXPECT_EQ(count_class(cli, "clique-edge"), 7u);
  EXPECT_EQ(count_class(cli, "vertex"), 5u);
  const auto labels = labels_of(cli, "pair-label");
  EXPECT_EQ(labels.size(), 7u);
  EXPECT_NE(std::find(labels.begin(), labels.end(), "e0,e1"), labels.end());  // v1-v2
  const auto enc = render_svg(h, VisualFormat::Enc_Hy);
  EXPECT_EQ(count_class(enc, "hull"), 3u);
  EXPECT_EQ(labels_of(enc, "edge-label"), (std::vector<std::string>{"e0", "e1", "e2"}));
  for (VisualFormat f : {VisualFormat::Bi_Inc, VisualFormat::Sh_Inc, VisualFormat::St_Inc}) {
    const auto svg = render_svg(h, f);
    EXPECT_EQ(count_class(svg, "incidence"), 9u) << visual_format_name(f);
    EXPECT_EQ(count_class(svg, "edge-node"), 3u) << visual_format_name(f);
  }
}

TEST(Svg, PairHullForOrderTwo) {
  const Hypergraph h(4, {{0, 1}, {1, 2, 3}});
  const auto svg = render_svg(h, VisualFormat::Enc_Hy);
  EXPECT_EQ(count_class(svg, "pair-hull"), 1u);
  EXPECT_EQ(count_class(svg, "hull"), 1u);
}

TEST(Svg, Pair) {
  const auto h = worked_example();
  const auto svg = render_svg_pair(h, h, VisualFormat::Bi_Inc);
  EXPECT_EQ(labels_of(svg, "title"), (std::vector<std::string>{"H", "G"}));
  EXPECT_EQ(count_class(svg, "panel"), 2u);
  EXPECT_EQ(count_class(svg, "vertex"), 10u);
}

TEST(Svg, ConfigValidation) {
  RenderConfig cfg;
  cfg.width = 0;
  EXPECT_THROW(render_svg(worked_example(), VisualFormat::Enc_Hy, cfg), contract_error);
  RenderConfig no_palette;
  no_palette.palette.clear();
  EXPECT_THROW(render_svg(worked_example(), VisualFormat::Enc_Hy, no_palette), contract_error);
}

TEST(SvgProperty, LabelsCompleteAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto h = gen_random_connected({static_cast<ScaleClass>(seed % 3), Source::synthetic, seed});
    std::size_t incidences = 0;
    for (const Edge& e : h.edges()) incidences += e.size();
    std::vector<std::string> vnames, enames;
    for (std::size_t v = 0; v < h.num_vertices(); ++v) vnames.push_back("v" + std::to_string(v));
    for (std::size_t j = 0; j < h.num_edges(); ++j) enames.push_back("e" + std::to_string(j));
    for (VisualFormat f : kAllVisualFormats) {
      RenderConfig cfg;
      cfg.seed = seed;
      const auto svg = render_svg(h, f, cfg);
      EXPECT_EQ(svg, render_svg(h, f, cfg));
      EXPECT_EQ(labels_of(svg, "vertex-label"), vnames) << visual_format_name(f);
      if (f == VisualFormat::Cli_Exp) {
        EXPECT_EQ(count_class(svg, "clique-edge"), clique_pairs(h).size());
      } else {
        EXPECT_EQ(labels_of(svg, "edge-label"), enames) << visual_format_name(f);
      }
      if (f == VisualFormat::Bi_Inc || f == VisualFormat::Sh_Inc || f == VisualFormat::St_Inc) {
        EXPECT_EQ(count_class(svg, "incidence"), incidences);
      }
      EXPECT_FALSE(std::regex_search(svg, std::regex("\"-?(nan|inf)")));
      EXPECT_EQ(svg.rfind("</svg>\n"), svg.size() - 7);
    }
  }
}
