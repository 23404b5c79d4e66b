#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>

#include "hypergvl/core.hpp"
#include "hypergvl/rng.hpp"

namespace hgvl {

enum class VisualFormat { Enc_Hy, Bi_Inc, Sh_Inc, St_Inc, Cli_Exp };

inline constexpr std::array<VisualFormat, 5> kAllVisualFormats = {VisualFormat::Enc_Hy, VisualFormat::Bi_Inc,
                                                                  VisualFormat::Sh_Inc, VisualFormat::St_Inc,
                                                                  VisualFormat::Cli_Exp};

inline std::string_view visual_format_name(VisualFormat f) {
  switch (f) {
    case VisualFormat::Enc_Hy: return "Enc-Hy";
    case VisualFormat::Bi_Inc: return "Bi-Inc";
    case VisualFormat::Sh_Inc: return "Sh-Inc";
    case VisualFormat::St_Inc: return "St-Inc";
    case VisualFormat::Cli_Exp: return "Cli-Exp";
  }
  return "?";
}

inline std::optional<VisualFormat> find_visual_format(std::string_view name) {
  for (VisualFormat f : kAllVisualFormats)
    if (visual_format_name(f) == name) return f;
  return std::nullopt;
}

struct Point {
  double x = 0;
  double y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Layout {
  std::vector<Point> positions;  // indexed by node id
  friend bool operator==(const Layout&, const Layout&) = default;
};

using NodeEdges = std::vector<std::pair<std::size_t, std::size_t>>;

struct RenderConfig {
  double width = 1400;
  double height = 1100;
  std::uint64_t seed = 0;
  std::vector<std::string> palette = {"#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4",
                                      "#f032e6", "#9a9a00", "#469990", "#9a6324", "#800000", "#000075"};

  void validate() const {
    if (!(width > 0) || !(height > 0)) throw contract_error("canvas dimensions must be positive");
    if (palette.empty()) throw contract_error("palette must not be empty");
  }
  const std::string& color(std::size_t edge) const { return palette[edge % palette.size()]; }
};

inline constexpr double kVertexRadius = 20;
inline constexpr double kEdgeSquare = 18;
inline constexpr double kLabelSize = 14;

namespace detail {

inline std::vector<std::vector<std::size_t>> hop_distances(std::size_t n, const NodeEdges& edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  constexpr std::size_t inf = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, inf));
  for (std::size_t s = 0; s < n; ++s) {
    std::queue<std::size_t> q;
    dist[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t w : adj[u])
        if (dist[s][w] == inf) {
          dist[s][w] = dist[s][u] + 1;
          q.push(w);
        }
    }
  }
  return dist;
}

}  // namespace detail

// Stress layout (unit edge length) by per-node majorization sweeps, which
// descend the weighted stress monotonically. Separate components sit one hop
// beyond the largest finite distance.
inline Layout layout_stress(std::size_t nodes, const NodeEdges& edges, std::uint64_t seed) {
  Layout out{std::vector<Point>(nodes)};
  if (nodes <= 1) return out;
  auto hops = detail::hop_distances(nodes, edges);
  std::size_t far = 0;
  for (auto& row : hops)
    for (std::size_t d : row)
      if (d != static_cast<std::size_t>(-1)) far = std::max(far, d);
  std::vector<std::vector<double>> d(nodes, std::vector<double>(nodes));
  for (std::size_t i = 0; i < nodes; ++i)
    for (std::size_t j = 0; j < nodes; ++j)
      d[i][j] = hops[i][j] == static_cast<std::size_t>(-1) ? double(far + 1) : double(hops[i][j]);

  Rng rng(seed);
  const double spread = std::sqrt(double(nodes));
  for (Point& p : out.positions) p = {rng.real() * spread, rng.real() * spread};

  auto stress = [&] {
    double e = 0;
    for (std::size_t i = 0; i < nodes; ++i)
      for (std::size_t j = i + 1; j < nodes; ++j) {
        double dist = std::hypot(out.positions[i].x - out.positions[j].x, out.positions[i].y - out.positions[j].y);
        double r = dist - d[i][j];
        e += r * r / (d[i][j] * d[i][j]);
      }
    return e;
  };

  double prev = stress();
  for (int it = 0; it < 500 && prev > 0; ++it) {
    for (std::size_t i = 0; i < nodes; ++i) {
      double nx = 0, ny = 0, wsum = 0;
      for (std::size_t j = 0; j < nodes; ++j) {
        if (j == i) continue;
        const double w = 1.0 / (d[i][j] * d[i][j]);
        double dx = out.positions[i].x - out.positions[j].x, dy = out.positions[i].y - out.positions[j].y;
        double dist = std::hypot(dx, dy);
        if (dist < 1e-9) {
          dx = 1e-3 * double(i + 1);
          dy = 1e-3;
          dist = std::hypot(dx, dy);
        }
        nx += w * (out.positions[j].x + d[i][j] * dx / dist);
        ny += w * (out.positions[j].y + d[i][j] * dy / dist);
        wsum += w;
      }
      out.positions[i] = {nx / wsum, ny / wsum};
    }
    const double cur = stress();
    if (std::abs(prev - cur) / prev < 1e-4) break;
    prev = cur;
  }
  return out;
}

// Fruchterman-Reingold: repulsion k^2/d, attraction d^2/k, temperature cooled
// linearly, result centered and rescaled so the largest coordinate is `scale`.
inline Layout layout_spring(std::size_t nodes, const NodeEdges& edges, std::uint64_t seed, double k = 2.0,
                            int iterations = 100, double scale = 3.0) {
  Layout out{std::vector<Point>(nodes)};
  if (nodes <= 1) return out;
  std::vector<std::vector<bool>> linked(nodes, std::vector<bool>(nodes, false));
  for (auto [a, b] : edges) linked[a][b] = linked[b][a] = true;

  Rng rng(seed);
  auto& pos = out.positions;
  for (Point& p : pos) p = {rng.real(), rng.real()};

  double minx = 1, maxx = 0, miny = 1, maxy = 0;
  for (const Point& p : pos) {
    minx = std::min(minx, p.x), maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y), maxy = std::max(maxy, p.y);
  }
  double t = std::max(maxx - minx, maxy - miny) * 0.1;
  const double dt = t / double(iterations + 1);

  std::vector<Point> disp(nodes);
  for (int it = 0; it < iterations; ++it) {
    for (std::size_t i = 0; i < nodes; ++i) {
      Point f{};
      for (std::size_t j = 0; j < nodes; ++j) {
        if (i == j) continue;
        const double dx = pos[i].x - pos[j].x, dy = pos[i].y - pos[j].y;
        const double dist = std::max(std::hypot(dx, dy), 0.01);
        const double coeff = k * k / (dist * dist) - (linked[i][j] ? dist / k : 0.0);
        f.x += dx * coeff;
        f.y += dy * coeff;
      }
      disp[i] = f;
    }
    for (std::size_t i = 0; i < nodes; ++i) {
      const double len = std::max(std::hypot(disp[i].x, disp[i].y), 0.01);
      pos[i].x += disp[i].x * t / len;
      pos[i].y += disp[i].y * t / len;
    }
    t -= dt;
  }

  Point mean{};
  for (const Point& p : pos) mean.x += p.x / double(nodes), mean.y += p.y / double(nodes);
  double lim = 0;
  for (Point& p : pos) {
    p.x -= mean.x, p.y -= mean.y;
    lim = std::max({lim, std::abs(p.x), std::abs(p.y)});
  }
  if (lim > 0)
    for (Point& p : pos) p.x *= scale / lim, p.y *= scale / lim;
  return out;
}

// Canvas-space rectangle a drawing is confined to.
struct Box {
  double x = 0, y = 0, w = 0, h = 0;
  Point center() const { return {x + w / 2, y + h / 2}; }
};

// Uniformly scales a raw layout into `box` minus `margin`, centered.
inline Layout fit_to_box(const Layout& raw, const Box& box, double margin) {
  Layout out = raw;
  if (raw.positions.empty()) return out;
  double minx = raw.positions[0].x, maxx = minx, miny = raw.positions[0].y, maxy = miny;
  for (const Point& p : raw.positions) {
    minx = std::min(minx, p.x), maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y), maxy = std::max(maxy, p.y);
  }
  const double sx = maxx - minx, sy = maxy - miny;
  const double avail_w = box.w - 2 * margin, avail_h = box.h - 2 * margin;
  double s = 0;
  if (sx > 1e-12) s = avail_w / sx;
  if (sy > 1e-12) s = s > 0 ? std::min(s, avail_h / sy) : avail_h / sy;
  const Point c = box.center();
  for (Point& p : out.positions) p = {c.x + (p.x - (minx + maxx) / 2) * s, c.y + (p.y - (miny + maxy) / 2) * s};
  return out;
}

// Two concentric circles around the box center; node i of a ring sits at
// angle 2*pi*i/count, measured counter-clockwise from the positive x axis.
inline Layout layout_shell(std::size_t inner, std::size_t outer, const Box& box, double inner_ratio = 0.5) {
  if (inner == 0 || outer == 0) throw contract_error("shell layout needs nonempty rings");
  const Point c = box.center();
  const double r = 0.4 * std::min(box.w, box.h);
  Layout out;
  auto ring = [&](std::size_t count, double radius) {
    for (std::size_t i = 0; i < count; ++i) {
      const double a = 2 * M_PI * double(i) / double(count);
      out.positions.push_back({c.x + radius * std::cos(a), c.y - radius * std::sin(a)});
    }
  };
  ring(inner, inner_ratio * r);
  ring(outer, r);
  return out;
}

inline Layout layout_rows(std::size_t top, std::size_t bottom, const Box& box) {
  if (top == 0 || bottom == 0) throw contract_error("row layout needs nonempty rows");
  Layout out;
  auto row = [&](std::size_t count, double y) {
    for (std::size_t i = 0; i < count; ++i)
      out.positions.push_back({box.x + box.w * double(i + 1) / double(count + 1), box.y + y});
  };
  row(top, 0.15 * box.h);
  row(bottom, 0.85 * box.h);
  return out;
}

// Andrew's monotone chain; counter-clockwise in a y-up frame, collinear points dropped.
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
  if (pts.size() < 3) throw contract_error("convex hull needs at least 3 points");
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
  auto cross = [](const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

inline std::string join_ids(const std::vector<std::size_t>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? ",e" : "e") + std::to_string(ids[i]);
  return out;
}

class SvgWriter {
 public:
  explicit SvgWriter(const RenderConfig& cfg) : cfg_(cfg) {}

  void line(const Point& a, const Point& b, std::string_view cls, const std::string& stroke, double width,
            double opacity = 1.0) {
    out_ << "<line class=\"" << cls << "\" x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x)
         << "\" y2=\"" << num(b.y) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width) << "\"";
    if (opacity < 1.0) out_ << " stroke-opacity=\"" << num(opacity) << "\" stroke-linecap=\"round\"";
    out_ << "/>\n";
  }

  void polygon(const std::vector<Point>& pts, const std::string& color) {
    out_ << "<polygon class=\"hull\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) out_ << (i ? " " : "") << num(pts[i].x) << "," << num(pts[i].y);
    out_ << "\" fill=\"" << color << "\" fill-opacity=\"0.15\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
  }

  void text(const Point& at, std::string_view cls, const std::string& fill, const std::string& body,
            double size = kLabelSize) {
    out_ << "<text class=\"" << cls << "\" x=\"" << num(at.x) << "\" y=\"" << num(at.y) << "\" font-size=\""
         << num(size) << "\" font-family=\"sans-serif\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\""
         << fill << "\">" << body << "</text>\n";
  }

  void vertex(const Point& at, std::size_t v) {
    out_ << "<circle class=\"vertex\" cx=\"" << num(at.x) << "\" cy=\"" << num(at.y) << "\" r=\"" << num(kVertexRadius)
         << "\" fill=\"#1f3b73\"/>\n";
    text(at, "vertex-label", "white", "v" + std::to_string(v));
  }

  // White box with the id in the hyperedge's color.
  void edge_tag(const Point& at, std::size_t e) {
    const std::string label = "e" + std::to_string(e);
    const double w = 12 + 9 * double(label.size()), h = 22;
    out_ << "<rect class=\"edge-label-box\" x=\"" << num(at.x - w / 2) << "\" y=\"" << num(at.y - h / 2)
         << "\" width=\"" << num(w) << "\" height=\"" << num(h) << "\" fill=\"white\" stroke=\"" << cfg_.color(e)
         << "\" stroke-width=\"1.5\"/>\n";
    text(at, "edge-label", cfg_.color(e), label);
  }

  void edge_node(const Point& at, std::size_t e, const Point& label_at) {
    out_ << "<rect class=\"edge-node\" x=\"" << num(at.x - kEdgeSquare / 2) << "\" y=\"" << num(at.y - kEdgeSquare / 2)
         << "\" width=\"" << num(kEdgeSquare) << "\" height=\"" << num(kEdgeSquare) << "\" fill=\"" << cfg_.color(e)
         << "\"/>\n";
    text(label_at, "edge-label", "#222222", "e" + std::to_string(e));
  }

  void raw(const std::string& s) { out_ << s; }

  std::string finish(const std::string& body_prefix = {}) const {
    std::ostringstream doc;
    doc << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(cfg_.width) << "\" height=\""
        << num(cfg_.height) << "\" viewBox=\"0 0 " << num(cfg_.width) << " " << num(cfg_.height) << "\">\n"
        << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << num(cfg_.width) << "\" height=\""
        << num(cfg_.height) << "\" fill=\"white\"/>\n"
        << body_prefix << out_.str() << "</svg>\n";
    return doc.str();
  }

  const RenderConfig& config() const { return cfg_; }

 private:
  const RenderConfig& cfg_;
  std::ostringstream out_;
};

inline Point outward(const Point& p, const Point& c, double by) {
  const double dx = p.x - c.x, dy = p.y - c.y, len = std::hypot(dx, dy);
  if (len < 1e-9) return {p.x, p.y - by};
  return {p.x + dx / len * by, p.y + dy / len * by};
}

inline void draw_incidence(SvgWriter& svg, const Hypergraph& h, const std::vector<Point>& vpos,
                           const std::vector<Point>& epos, const std::vector<Point>& elabel) {
  for (std::size_t j = 0; j < h.num_edges(); ++j)
    for (std::size_t v : h.edges()[j]) svg.line(vpos[v], epos[j], "incidence", svg.config().color(j), 1.5);
  for (std::size_t j = 0; j < h.num_edges(); ++j) svg.edge_node(epos[j], j, elabel[j]);
  for (std::size_t v = 0; v < vpos.size(); ++v) svg.vertex(vpos[v], v);
}

inline void draw(SvgWriter& svg, const Hypergraph& h, VisualFormat fmt, const Box& box) {
  const RenderConfig& cfg = svg.config();
  const std::size_t n = h.num_vertices(), m = h.num_edges();
  const double margin = 90;

  switch (fmt) {
    case VisualFormat::Enc_Hy: {
      const auto pos = fit_to_box(layout_stress(n, clique_pairs(h), cfg.seed), box, margin).positions;
      for (std::size_t j = 0; j < m; ++j) {
        const Edge& e = h.edges()[j];
        if (e.size() == 2) {
          svg.line(pos[e[0]], pos[e[1]], "pair-hull", cfg.color(j), 16, 0.35);
          continue;
        }
        std::vector<Point> cloud;
        for (std::size_t v : e)
          for (int s = 0; s < 16; ++s) {
            const double a = 2 * M_PI * s / 16;
            cloud.push_back({pos[v].x + 32 * std::cos(a), pos[v].y + 32 * std::sin(a)});
          }
        svg.polygon(convex_hull(cloud), cfg.color(j));
      }
      for (std::size_t j = 0; j < m; ++j) {
        Point c{};
        for (std::size_t v : h.edges()[j]) c.x += pos[v].x, c.y += pos[v].y;
        const double k = double(h.edges()[j].size());
        svg.edge_tag({c.x / k, c.y / k}, j);
      }
      for (std::size_t v = 0; v < n; ++v) svg.vertex(pos[v], v);
      break;
    }
    case VisualFormat::Bi_Inc: {
      if (m == 0) {
        for (std::size_t v = 0; v < n; ++v) svg.vertex({box.x + box.w * double(v + 1) / double(n + 1), box.y + 0.15 * box.h}, v);
        break;
      }
      const auto pos = layout_rows(n, m, box).positions;
      std::vector<Point> vpos(pos.begin(), pos.begin() + long(n)), epos(pos.begin() + long(n), pos.end());
      std::vector<Point> labels;
      for (const Point& p : epos) labels.push_back({p.x, p.y + 24});
      draw_incidence(svg, h, vpos, epos, labels);
      break;
    }
    case VisualFormat::Sh_Inc:
    case VisualFormat::St_Inc: {
      const bool star = fmt == VisualFormat::St_Inc;
      const Point c = box.center();
      std::vector<Point> vpos, epos;
      if (m == 0) {
        vpos = layout_shell(n, 1, box, star ? 1.0 : 0.5).positions;
        vpos.pop_back();
      } else if (star) {
        auto outer = layout_shell(m, n, box, 0.15).positions;
        epos.assign(outer.begin(), outer.begin() + long(m));
        vpos.assign(outer.begin() + long(m), outer.end());
        if (m == 1) epos[0] = c;
      } else {
        auto shell = layout_shell(n, m, box).positions;
        vpos.assign(shell.begin(), shell.begin() + long(n));
        epos.assign(shell.begin() + long(n), shell.end());
      }
      std::vector<Point> labels;
      for (std::size_t j = 0; j < m; ++j)
        labels.push_back(star ? Point{epos[j].x, epos[j].y + 22} : outward(epos[j], c, 24));
      draw_incidence(svg, h, vpos, epos, labels);
      break;
    }
    case VisualFormat::Cli_Exp: {
      const auto pairs = clique_pairs(h);
      const auto pos = fit_to_box(layout_spring(n, pairs, cfg.seed), box, margin).positions;
      for (auto [u, v] : pairs) svg.line(pos[u], pos[v], "clique-edge", "#555555", 2);
      for (auto [u, v] : pairs) {
        std::vector<std::size_t> ids;
        for (std::size_t j : h.incident(VertexId{u}))
          if (h.contains(HyperedgeId{j}, VertexId{v})) ids.push_back(j);
        const Point mid{(pos[u].x + pos[v].x) / 2, (pos[u].y + pos[v].y) / 2};
        svg.text(mid, "pair-label", cfg.color(ids.front()), join_ids(ids), 12);
      }
      for (std::size_t v = 0; v < n; ++v) svg.vertex(pos[v], v);
      break;
    }
  }
}

}  // namespace detail

inline std::string render_svg(const Hypergraph& h, VisualFormat fmt, const RenderConfig& cfg = {}) {
  cfg.validate();
  detail::SvgWriter svg(cfg);
  detail::draw(svg, h, fmt, {0, 0, cfg.width, cfg.height});
  return svg.finish();
}

// Two hypergraphs side by side, each titled, laid out with the same seed.
inline std::string render_svg_pair(const Hypergraph& left, const Hypergraph& right, VisualFormat fmt,
                                   const RenderConfig& cfg = {}, std::string_view left_name = "H",
                                   std::string_view right_name = "G") {
  cfg.validate();
  detail::SvgWriter svg(cfg);
  const double half = cfg.width / 2;
  svg.text({half / 2, 30}, "title", "#000000", std::string(left_name), 24);
  svg.text({half + half / 2, 30}, "title", "#000000", std::string(right_name), 24);
  svg.line({half, 0}, {half, cfg.height}, "divider", "#999999", 1);
  svg.raw("<g class=\"panel\">\n");
  detail::draw(svg, left, fmt, {0, 40, half, cfg.height - 40});
  svg.raw("</g>\n<g class=\"panel\">\n");
  detail::draw(svg, right, fmt, {half, 40, half, cfg.height - 40});
  svg.raw("</g>\n");
  return svg.finish();
}

}  // namespace hgvl
