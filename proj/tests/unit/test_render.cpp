#include <doctest.h>

#include "sa2/render.hpp"
#include "sa2/serialize.hpp"

using namespace sa2;

namespace {

Element el(const char* s) { return word_to_element(parse_word(s)); }

RenderSpec all_layers() {
  RenderSpec s;
  s.layers = {Layer::Lattice,  Layer::Chambers, Layer::Hexagon, Layer::Shells,
              Layer::QHeatmap, Layer::Smooth,   Layer::Special, Layer::Diagonals};
  s.labels = LabelMode::QValues;
  return s;
}

int count(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("rendering is deterministic and self-contained") {
  RenderConfig cfg = RenderConfig::from_json_text("");
  for (const char* w : {"0102010", "012010210", "0120", "1", ""}) {
    RenderSpec spec = all_layers();
    std::string a = render_svg(spec, make_payload(el(w), spec), cfg);
    std::string b = render_svg(spec, make_payload(el(w), spec), cfg);
    CHECK(a == b);
    CHECK(a.rfind("<?xml", 0) == 0);
    CHECK(count(a, "<svg") == 1);
    CHECK(count(a, "</svg>") == 1);
    CHECK(count(a, "<g ") == count(a, "</g>"));
    CHECK(a.find("href") == std::string::npos);
    CHECK(a.find("version=\"1.1\"") != std::string::npos);
  }
}

TEST_CASE("one heatmap cell per alcove below w") {
  RenderSpec spec;
  spec.layers = {Layer::QHeatmap};
  Element w = el("012010210");
  std::string svg = render_svg(spec, make_payload(w, spec), RenderConfig::from_json_text(""));
  CHECK(count(svg, "<polygon") == static_cast<int>(interval(w).size()));
}

TEST_CASE("smooth layer shades smooth alcoves") {
  RenderSpec spec;
  spec.layers = {Layer::Smooth};
  RenderConfig cfg = RenderConfig::from_json_text(R"({"colors": {"smooth": "#010203"}})");
  Element w = el("01020102010");
  std::string svg = render_svg(spec, make_payload(w, spec), cfg);
  CHECK(count(svg, "#010203") == 36);
}

TEST_CASE("empty viewport and mismatched payloads are errors") {
  RenderSpec spec;
  spec.viewport = Viewport{5, 1, 0, 3};
  CHECK_THROWS_AS(render_svg(spec, make_payload(el("012"), spec)), PreconditionError);
  spec.viewport = Viewport{3, 3, 3, 3};  // no alcove center at (3,3)
  CHECK_THROWS_AS(render_svg(spec, make_payload(el("012"), spec)), PreconditionError);

  RenderSpec q;
  q.layers = {Layer::QHeatmap};
  RenderPayload p = make_payload(el("0102010"), q);
  p.q = q_table(el("012010210"));
  CHECK_THROWS_AS(render_svg(q, p), PreconditionError);
}

TEST_CASE("layer and label parsing") {
  CHECK(parse_layer("q-heatmap") == Layer::QHeatmap);
  CHECK(layer_name(Layer::Special) == "special");
  CHECK_THROWS_AS(parse_layer("bogus"), ParseError);
  CHECK(parse_label_mode("words") == LabelMode::Words);
  CHECK_THROWS_AS(parse_label_mode("bogus"), ParseError);
  CHECK_THROWS_AS(RenderConfig::from_json_text("{"), ParseError);
  CHECK_THROWS_AS(RenderConfig::from_json_text(R"({"scale": -1})"), ParseError);
  CHECK(RenderConfig::from_json_text(R"({"scale": 20})").scale == 20);
}

TEST_CASE("JSON serialization") {
  Element w = el("0102010");
  Json h = to_json(hexagon(w));
  CHECK(h["vertices"].size() == 6);
  CHECK(h["edges"].size() == 6);
  CHECK(h["owner"] == "0102010");
  Json r = to_json(locus_report(w));
  CHECK(r["records"].size() == interval(w).size());
  CHECK(r["classification"] == "singular");
  Json t = to_json(q_table(w));
  CHECK(t["entries"].size() == interval(w).size());
  Json e = to_json(enumerate_smooth_varieties());
  std::size_t total = 0;
  for (const auto& row : e) total += row["count"].get<std::size_t>();
  CHECK(total == 31);
  CHECK(to_json(identity())["word"] == "");
}
