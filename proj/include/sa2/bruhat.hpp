#pragma once

#include <optional>
#include <unordered_set>

#include "sa2/alcove.hpp"

namespace sa2 {

using ElementSet = std::unordered_set<Element, ElementHash>;

// Convex polygon with edges along root strings, kept as three slabs
// lo[d] <= string_key(d, p) <= hi[d].
struct Slabs {
  std::array<int, 3> lo{}, hi{};
  bool contains(Point p) const;
  // Number of strings between p and the nearest boundary string.
  int depth(Point p) const;
  static Slabs of(const std::vector<Point>& pts);
};

// Centers on the d-string from one center to another, inclusive.
std::vector<Point> string_walk(Point from, Point to, int d);

struct Edge {
  int from = 0, to = 0;       // vertex indices
  int dir = 0;                // string direction
  std::vector<Point> centers; // from -> to, inclusive
  int alcoves() const { return static_cast<int>(centers.size()); }
};

struct SpecialSegment {
  int edge = 0;  // 1 for w1w2, 4 for w4w5
  std::vector<Point> centers;  // empty when the carrier edge is short
};

struct Hexagon {
  Element owner;
  Region region;
  std::array<Hyperplane, 3> planes;  // alpha (ccw wall), beta (cw wall), gamma
  std::array<Element, 6> vertices;   // w0 = owner, counterclockwise
  std::array<Point, 6> centers;
  Slabs slabs;

  bool odd() const { return region.odd(); }
  bool contains(Point p) const { return slabs.contains(p); }
  // Edge i joins vertex i to vertex i+1 (mod 6).
  Edge edge(int i) const;
  int diagonal_dir(int vertex) const;
  // Alcove centers on the diagonal string through a vertex, inside the hexagon.
  std::vector<Point> diagonal(int vertex) const;
  // Odd chambers only: segments on edges w1w2 and w4w5.
  std::vector<SpecialSegment> special_segments() const;
};

Hexagon hexagon(const Element& w);

// Hull of a spiral element: the chain {e, w} or a quadrilateral.
struct DegenerateHull {
  Element owner;
  std::vector<Element> vertices;
  Slabs slabs;
  bool contains(Point p) const { return slabs.contains(p); }
};

DegenerateHull degenerate_hull(const Element& w);

// Either kind, for membership and enumeration.
struct Hull {
  Element owner;
  std::vector<Element> vertices;
  Slabs slabs;
  bool contains(Point p) const { return slabs.contains(p); }
  bool contains(const Element& x) const { return slabs.contains(center(x)); }
  // Range of pairing(r, .) over the hull.
  std::pair<int, int> pairing_range(Root r) const;
};

Hull hull_of(const Element& w);

bool leq(const Element& x, const Element& w);
bool leq_oracle(const Element& x, const Element& w);
ElementSet oracle_interval(const Element& w);

// All x <= w, canonical order.
std::vector<Element> interval(const Element& w);
std::vector<Element> interval(const Hull& h);

int shell_index(const Hexagon& h, const Element& x);

// Bruhat-maximal elements of a set.
std::vector<Element> maximal_elements(const std::vector<Element>& xs);

}  // namespace sa2
