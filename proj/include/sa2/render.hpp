#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "sa2/loci.hpp"

namespace sa2 {

enum class Layer { Lattice, Chambers, Hexagon, Shells, QHeatmap, Smooth, Special, Diagonals };
Layer parse_layer(const std::string& name);
std::string layer_name(Layer l);

enum class LabelMode { None, QValues, Words };
LabelMode parse_label_mode(const std::string& name);

// Bounding box in scaled point coordinates, inclusive.
struct Viewport {
  int a_min = 0, a_max = 0, b_min = 0, b_max = 0;
};

struct RenderConfig {
  double scale = 40;  // units per alcove edge
  std::map<std::string, std::string> colors;
  std::vector<std::string> q_palette;
  // Defaults, overridden by the JSON file named in $SCHUBERT_A2_CONFIG.
  static RenderConfig load();
  static RenderConfig from_json_text(const std::string& text);
};

struct RenderSpec {
  std::optional<Viewport> viewport;  // default: hull plus a margin
  std::set<Layer> layers{Layer::Lattice, Layer::Hexagon};
  LabelMode labels = LabelMode::None;
};

struct RenderPayload {
  Element owner;
  Hull hull;
  std::optional<Hexagon> hexagon;
  std::optional<QTable> q;
  std::optional<LocusReport> locus;
};

// Computes exactly what the requested layers and labels need.
RenderPayload make_payload(const Element& w, const RenderSpec& spec);

std::string render_svg(const RenderSpec& spec, const RenderPayload& payload,
                       const RenderConfig& config = RenderConfig::load());

}  // namespace sa2
