#include "sa2/bruhat.hpp"

#include <algorithm>
#include <climits>

namespace sa2 {

namespace {

// Edge i of a hexagon runs along alpha, gamma, beta, alpha, gamma, beta.
constexpr int kEdgePlane[6] = {0, 2, 1, 0, 2, 1};
// The diagonal through vertex v runs along the root of neither adjacent edge.
constexpr int kDiagPlane[6] = {2, 1, 0, 2, 1, 0};

std::vector<Point> centers_of(const std::vector<Element>& vs) {
  std::vector<Point> out;
  out.reserve(vs.size());
  for (const Element& v : vs) out.push_back(center(v));
  return out;
}

}  // namespace

bool Slabs::contains(Point p) const {
  for (int d = 0; d < 3; ++d) {
    int k = string_key(d, p);
    if (k < lo[d] || k > hi[d]) return false;
  }
  return true;
}

int Slabs::depth(Point p) const {
  int best = INT_MAX;
  for (int d = 0; d < 3; ++d) {
    int k = string_key(d, p);
    best = std::min({best, k - lo[d], hi[d] - k});
  }
  return best / 3;
}

Slabs Slabs::of(const std::vector<Point>& pts) {
  Slabs s;
  for (int d = 0; d < 3; ++d) {
    s.lo[d] = INT_MAX;
    s.hi[d] = INT_MIN;
    for (Point p : pts) {
      int k = string_key(d, p);
      s.lo[d] = std::min(s.lo[d], k);
      s.hi[d] = std::max(s.hi[d], k);
    }
  }
  return s;
}

std::vector<Point> string_walk(Point from, Point to, int d) {
  std::vector<Point> out{from};
  if (from == to) return out;
  int da = string_step(d).a;
  int sign = (to.a - from.a) * da > 0 ? 1 : -1;
  Point p = from;
  while (!(p == to)) {
    p = next_center(p, d, sign);
    out.push_back(p);
    if ((to.a - p.a) * da * sign < 0 || string_key(d, p) != string_key(d, to))
      throw std::logic_error("edge endpoints are not on a common string");
  }
  return out;
}

Hexagon hexagon(const Element& w) {
  Region r = classify(w);
  if (r.kind != Region::Kind::Chamber)
    throw PreconditionError("hexagon needs a non-spiral element; use degenerate_hull");
  Hexagon h;
  h.owner = w;
  h.region = r;
  auto walls = chamber_walls(r.id);
  Root gamma;
  for (Root c : kDirRoots)
    if (!(c == walls[0].root) && !(c == walls[1].root)) gamma = c;
  int pg = pairing(gamma, center(w));
  int k = std::abs(pg) < std::abs(pg - 3) ? 0 : 1;
  h.planes = {walls[0], walls[1], Hyperplane{gamma, k}};

  Element sa = reflection(walls[0].root, walls[0].level);
  Element sb = reflection(walls[1].root, walls[1].level);
  Element sg = reflection(gamma, k);
  Element w1 = sa * w, w5 = sb * w;
  h.vertices = {w, w1, sg * w1, sg * w, sg * w5, w5};
  for (int i = 0; i < 6; ++i) h.centers[i] = center(h.vertices[i]);
  h.slabs = Slabs::of(std::vector<Point>(h.centers.begin(), h.centers.end()));
  return h;
}

Edge Hexagon::edge(int i) const {
  Edge e;
  e.from = i;
  e.to = (i + 1) % 6;
  e.dir = dir_of(planes[kEdgePlane[i]].root);
  e.centers = string_walk(centers[e.from], centers[e.to], e.dir);
  return e;
}

int Hexagon::diagonal_dir(int vertex) const { return dir_of(planes[kDiagPlane[vertex]].root); }

std::vector<Point> Hexagon::diagonal(int vertex) const {
  int d = diagonal_dir(vertex);
  std::vector<Point> back, fwd;
  for (Point p = next_center(centers[vertex], d, -1); contains(p); p = next_center(p, d, -1))
    back.push_back(p);
  for (Point p = next_center(centers[vertex], d, 1); contains(p); p = next_center(p, d, 1))
    fwd.push_back(p);
  std::vector<Point> out(back.rbegin(), back.rend());
  out.push_back(centers[vertex]);
  out.insert(out.end(), fwd.begin(), fwd.end());
  return out;
}

std::vector<SpecialSegment> Hexagon::special_segments() const {
  std::vector<SpecialSegment> out;
  if (!odd()) return out;
  for (int i : {1, 4}) {
    Edge e = edge(i);
    SpecialSegment s{i, {}};
    int n = e.alcoves();
    if (n >= 6) s.centers.assign(e.centers.begin() + 2, e.centers.end() - 2);
    out.push_back(std::move(s));
  }
  return out;
}

DegenerateHull degenerate_hull(const Element& w) {
  if (!is_spiral(w)) throw PreconditionError("degenerate_hull needs a spiral element");
  DegenerateHull h;
  h.owner = w;
  if (length(w) <= 1) {
    h.vertices = {identity(), w};
  } else {
    Word word = element_to_word(w);
    Relabel sigma{3 - word[0] - word[1], word[0], word[1]};
    Relabel inv{};
    for (int t = 0; t < 3; ++t) inv[sigma[t]] = t;
    Element u = relabel(w, inv);
    Element s1 = simple(1), s0 = reflection(kAlphaT, 0);
    for (const Element& v : {u, s1 * u, s0 * u, s1 * s0 * u}) h.vertices.push_back(relabel(v, sigma));
  }
  h.slabs = Slabs::of(centers_of(h.vertices));
  return h;
}

Hull hull_of(const Element& w) {
  Hull h;
  h.owner = w;
  if (is_spiral(w)) {
    DegenerateHull d = degenerate_hull(w);
    h.vertices = std::move(d.vertices);
    h.slabs = d.slabs;
  } else {
    Hexagon x = hexagon(w);
    h.vertices.assign(x.vertices.begin(), x.vertices.end());
    h.slabs = x.slabs;
  }
  return h;
}

std::pair<int, int> Hull::pairing_range(Root r) const {
  int lo = INT_MAX, hi = INT_MIN;
  for (const Element& v : vertices) {
    int p = pairing(r, center(v));
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  return {lo, hi};
}

bool leq(const Element& x, const Element& w) {
  if (length(x) > length(w)) return false;
  return hull_of(w).contains(x);
}

ElementSet oracle_interval(const Element& w) {
  ElementSet s{identity()};
  for (int i : element_to_word(w)) {
    std::vector<Element> add;
    add.reserve(s.size());
    for (const Element& y : s) add.push_back(y * simple(i));
    s.insert(add.begin(), add.end());
  }
  return s;
}

bool leq_oracle(const Element& x, const Element& w) { return oracle_interval(w).count(x) > 0; }

std::vector<Element> interval(const Hull& h) {
  int amin = INT_MAX, amax = INT_MIN, bmin = INT_MAX, bmax = INT_MIN;
  for (const Element& v : h.vertices) {
    Point p = center(v);
    amin = std::min(amin, p.a);
    amax = std::max(amax, p.a);
    bmin = std::min(bmin, p.b);
    bmax = std::max(bmax, p.b);
  }
  std::vector<Element> out;
  for (int a = amin; a <= amax; ++a)
    for (int b = bmin; b <= bmax; ++b) {
      Point p{a, b};
      if (is_center(p) && h.contains(p)) out.push_back(from_center(p));
    }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Element> interval(const Element& w) { return interval(hull_of(w)); }

int shell_index(const Hexagon& h, const Element& x) {
  Point p = center(x);
  if (!h.contains(p)) throw PreconditionError("shell_index: x is not below the hexagon owner");
  return h.slabs.depth(p);
}

std::vector<Element> maximal_elements(const std::vector<Element>& xs) {
  std::vector<Hull> hulls;
  hulls.reserve(xs.size());
  for (const Element& y : xs) hulls.push_back(hull_of(y));
  std::vector<Element> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < xs.size() && !dominated; ++j)
      dominated = j != i && !(xs[i] == xs[j]) && hulls[j].contains(xs[i]);
    if (!dominated) out.push_back(xs[i]);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace sa2
