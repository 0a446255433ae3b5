#include "sa2/render.hpp"

#include <climits>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace sa2 {

namespace {

const std::vector<std::pair<Layer, std::string>>& layer_table() {
  static const std::vector<std::pair<Layer, std::string>> t{
      {Layer::Lattice, "lattice"},   {Layer::Chambers, "chambers"}, {Layer::Hexagon, "hexagon"},
      {Layer::Shells, "shells"},     {Layer::QHeatmap, "q-heatmap"}, {Layer::Smooth, "smooth"},
      {Layer::Special, "special"},   {Layer::Diagonals, "diagonals"}};
  return t;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Canvas {
  double scale;
  double px(double a, double b) const { return scale * (a + b / 2) / 3; }
  double py(double, double b) const { return -scale * (b * std::sqrt(3.0) / 2) / 3; }
  std::string xy(Point p) const { return fmt(px(p.a, p.b)) + "," + fmt(py(p.a, p.b)); }
};

std::array<Point, 3> triangle(Point c) {
  if (is_up(c)) return {Point{c.a - 1, c.b - 1}, Point{c.a + 2, c.b - 1}, Point{c.a - 1, c.b + 2}};
  return {Point{c.a + 1, c.b + 1}, Point{c.a - 2, c.b + 1}, Point{c.a + 1, c.b - 2}};
}

std::vector<Point> centers_in(const Viewport& v) {
  std::vector<Point> out;
  for (int b = v.b_min; b <= v.b_max; ++b)
    for (int a = v.a_min; a <= v.a_max; ++a)
      if (is_center({a, b})) out.push_back({a, b});
  return out;
}

std::string polygon(const Canvas& c, const std::array<Point, 3>& t, const std::string& fill,
                    const std::string& stroke, double width) {
  return "<polygon points=\"" + c.xy(t[0]) + " " + c.xy(t[1]) + " " + c.xy(t[2]) + "\" fill=\"" + fill +
         "\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(width) + "\"/>\n";
}

std::string polyline(const Canvas& c, const std::vector<Point>& pts, const std::string& stroke, double width,
                     bool closed = false) {
  std::string s = closed ? "<polygon" : "<polyline";
  s += " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + c.xy(pts[i]);
  return s + "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(width) + "\"/>\n";
}

std::string text(const Canvas& c, Point p, const std::string& t, double size, const std::string& color) {
  return "<text x=\"" + fmt(c.px(p.a, p.b)) + "\" y=\"" + fmt(c.py(p.a, p.b) + size / 3) + "\" font-size=\"" +
         fmt(size) + "\" text-anchor=\"middle\" fill=\"" + color + "\">" + escape(t) + "</text>\n";
}

Viewport default_viewport(const Hull& h) {
  constexpr int kMargin = 6;
  Viewport v{INT_MAX, INT_MIN, INT_MAX, INT_MIN};
  std::vector<Point> pts{kQ};
  for (const Element& x : h.vertices) pts.push_back(center(x));
  for (Point p : pts) {
    v.a_min = std::min(v.a_min, p.a);
    v.a_max = std::max(v.a_max, p.a);
    v.b_min = std::min(v.b_min, p.b);
    v.b_max = std::max(v.b_max, p.b);
  }
  v.a_min -= kMargin;
  v.a_max += kMargin;
  v.b_min -= kMargin;
  v.b_max += kMargin;
  return v;
}

}  // namespace

Layer parse_layer(const std::string& name) {
  for (const auto& [l, n] : layer_table())
    if (n == name) return l;
  throw ParseError("unknown layer: " + name);
}

std::string layer_name(Layer l) {
  for (const auto& [k, n] : layer_table())
    if (k == l) return n;
  return "?";
}

LabelMode parse_label_mode(const std::string& name) {
  if (name == "none") return LabelMode::None;
  if (name == "q-values" || name == "q") return LabelMode::QValues;
  if (name == "words") return LabelMode::Words;
  throw ParseError("unknown label mode: " + name);
}

RenderConfig RenderConfig::from_json_text(const std::string& text) {
  RenderConfig c;
  c.colors = {{"background", "#ffffff"}, {"lattice", "#c8c8c8"},  {"strip", "#eef2fb"},
              {"chamber-label", "#7a8fb8"}, {"hexagon", "#1f3f8f"}, {"shell", "#6b8e23"},
              {"smooth", "#b0b0b0"},    {"singular", "#f4c7c3"}, {"special", "#d62728"},
              {"diagonal", "#9467bd"},  {"owner", "#222222"},    {"label", "#111111"}};
  c.q_palette = {"#ffffff", "#fde0c5", "#facba6", "#f8b58b", "#f59e72",
                 "#f2855d", "#ef6a4c", "#eb4a40", "#c0363d"};
  if (text.empty()) return c;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("render config: ") + e.what());
  }
  if (j.contains("scale")) c.scale = j.at("scale").get<double>();
  if (j.contains("colors"))
    for (auto& [k, v] : j.at("colors").items()) c.colors[k] = v.get<std::string>();
  if (j.contains("q_palette")) c.q_palette = j.at("q_palette").get<std::vector<std::string>>();
  if (c.scale <= 0 || c.q_palette.empty()) throw ParseError("render config: bad scale or palette");
  return c;
}

RenderConfig RenderConfig::load() {
  const char* path = std::getenv("SCHUBERT_A2_CONFIG");
  if (!path || !*path) return from_json_text("");
  std::ifstream in(path);
  if (!in) throw ParseError(std::string("render config not readable: ") + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

RenderPayload make_payload(const Element& w, const RenderSpec& spec) {
  RenderPayload p{w, hull_of(w), std::nullopt, std::nullopt, std::nullopt};
  bool spiral = is_spiral(w);
  auto wants = [&](Layer l) { return spec.layers.count(l) > 0; };
  if (!spiral && (wants(Layer::Hexagon) || wants(Layer::Shells) || wants(Layer::Special) || wants(Layer::Diagonals)))
    p.hexagon = hexagon(w);
  if (wants(Layer::QHeatmap) || spec.labels == LabelMode::QValues) p.q = q_table(w);
  if (wants(Layer::Smooth)) p.locus = locus_report(w);
  return p;
}

std::string render_svg(const RenderSpec& spec, const RenderPayload& pl, const RenderConfig& cfg) {
  if ((pl.hexagon && !(pl.hexagon->owner == pl.owner)) || (pl.q && !(pl.q->owner == pl.owner)) ||
      (pl.locus && !(pl.locus->owner == pl.owner)) || !(pl.hull.owner == pl.owner))
    throw PreconditionError("render: payload parts belong to different owners");
  Viewport v = spec.viewport ? *spec.viewport : default_viewport(pl.hull);
  if (v.a_min > v.a_max || v.b_min > v.b_max) throw PreconditionError("render: empty viewport");
  auto cells = centers_in(v);
  if (cells.empty()) throw PreconditionError("render: viewport holds no alcove");

  Canvas cv{cfg.scale};
  auto color = [&](const std::string& k) { return cfg.colors.at(k); };
  auto wants = [&](Layer l) { return spec.layers.count(l) > 0; };

  double x0 = 1e18, x1 = -1e18, y0 = 1e18, y1 = -1e18;
  for (Point p : cells)
    for (Point q : triangle(p)) {
      x0 = std::min(x0, cv.px(q.a, q.b));
      x1 = std::max(x1, cv.px(q.a, q.b));
      y0 = std::min(y0, cv.py(q.a, q.b));
      y1 = std::max(y1, cv.py(q.a, q.b));
    }

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fmt(x0) << " " << fmt(y0) << " "
    << fmt(x1 - x0) << " " << fmt(y1 - y0) << "\" width=\"" << fmt(x1 - x0) << "\" height=\"" << fmt(y1 - y0)
    << "\">\n";
  s << "<title>alcoves below " << escape(word_of(pl.owner)) << "</title>\n";
  s << "<rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y0) << "\" width=\"" << fmt(x1 - x0) << "\" height=\""
    << fmt(y1 - y0) << "\" fill=\"" << color("background") << "\"/>\n";

  if (wants(Layer::Chambers)) {
    s << "<g id=\"chambers\">\n";
    for (Point p : cells) {
      bool in_strip = false;
      for (Root r : kDirRoots) in_strip = in_strip || (pairing(r, p) > 0 && pairing(r, p) < 3);
      if (in_strip) s << polygon(cv, triangle(p), color("strip"), "none", 0);
    }
    for (int c = 1; c <= 6; ++c) {
      Point d = root_vector(chamber_root(c));
      Point at{kQ.a + d.a, kQ.b + d.b};
      if (at.a >= v.a_min && at.a <= v.a_max && at.b >= v.b_min && at.b <= v.b_max)
        s << text(cv, at, Region{Region::Kind::Chamber, c}.name(), cfg.scale * 0.45, color("chamber-label"));
    }
    s << "</g>\n";
  }

  if (wants(Layer::QHeatmap) && pl.q) {
    s << "<g id=\"q-heatmap\">\n";
    for (const QEntry& e : pl.q->entries) {
      auto idx = std::min<std::size_t>(e.q, cfg.q_palette.size() - 1);
      s << polygon(cv, triangle(center(e.x)), cfg.q_palette[idx], "none", 0);
    }
    s << "</g>\n";
  }

  if (wants(Layer::Smooth) && pl.locus) {
    s << "<g id=\"smooth\">\n";
    for (const LocusRecord& r : pl.locus->records)
      s << polygon(cv, triangle(center(r.x)), r.smooth ? color("smooth") : color("singular"), "none", 0);
    s << "</g>\n";
  }

  if (wants(Layer::Lattice)) {
    s << "<g id=\"lattice\">\n";
    for (Point p : cells) s << polygon(cv, triangle(p), "none", color("lattice"), 0.5);
    s << "</g>\n";
  }

  if (wants(Layer::Shells) && pl.hexagon) {
    s << "<g id=\"shells\">\n";
    for (Point p : cells)
      if (pl.hexagon->contains(p) && pl.hexagon->slabs.depth(p) % 2 == 1)
        s << polygon(cv, triangle(p), "none", color("shell"), 1.2);
    s << "</g>\n";
  }

  if (wants(Layer::Hexagon)) {
    s << "<g id=\"hexagon\">\n";
    if (pl.hexagon) {
      for (int i = 0; i < 6; ++i) s << polyline(cv, pl.hexagon->edge(i).centers, color("hexagon"), 2.5);
      for (int i = 0; i < 6; ++i)
        s << text(cv, pl.hexagon->centers[i], "w" + std::to_string(i), cfg.scale * 0.3, color("hexagon"));
    } else {
      std::vector<Point> pts;
      for (const Element& x : pl.hull.vertices) pts.push_back(center(x));
      if (pts.size() == 4) std::swap(pts[2], pts[3]);  // cyclic order
      s << polyline(cv, pts, color("hexagon"), 2.5, pts.size() > 2);
    }
    s << polygon(cv, triangle(center(pl.owner)), "none", color("owner"), 2);
    s << "</g>\n";
  }

  if (wants(Layer::Diagonals) && pl.hexagon) {
    s << "<g id=\"diagonals\">\n";
    for (int i = 0; i < 6; ++i) {
      auto d = pl.hexagon->diagonal(i);
      if (d.size() >= 2) s << polyline(cv, d, color("diagonal"), 1.2);
    }
    s << "</g>\n";
  }

  if (wants(Layer::Special) && pl.hexagon) {
    s << "<g id=\"special\">\n";
    for (const SpecialSegment& seg : pl.hexagon->special_segments()) {
      for (Point p : seg.centers) s << polygon(cv, triangle(p), "none", color("special"), 2);
      if (seg.centers.size() >= 2) s << polyline(cv, seg.centers, color("special"), 3);
    }
    s << "</g>\n";
  }

  if (spec.labels != LabelMode::None) {
    s << "<g id=\"labels\">\n";
    double size = cfg.scale * (spec.labels == LabelMode::Words ? 0.16 : 0.3);
    if (spec.labels == LabelMode::QValues && pl.q) {
      for (const QEntry& e : pl.q->entries) s << text(cv, center(e.x), std::to_string(e.q), size, color("label"));
    } else if (spec.labels == LabelMode::Words) {
      for (const Element& x : interval(pl.hull)) s << text(cv, center(x), word_of(x), size, color("label"));
    }
    s << "</g>\n";
  }

  s << "</svg>\n";
  return s.str();
}

}  // namespace sa2
