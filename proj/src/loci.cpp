#include "sa2/loci.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sa2 {

std::string class_name(SchubertClass c) {
  switch (c) {
    case SchubertClass::Smooth: return "smooth";
    case SchubertClass::RationallySmoothOnly: return "rationally-smooth-only";
    case SchubertClass::Singular: return "singular";
  }
  return "?";
}

namespace {

std::vector<Point> segment(Point from, Point to) {
  for (int d = 0; d < 3; ++d)
    if (string_key(d, from) == string_key(d, to)) return string_walk(from, to, d);
  throw std::logic_error("points share no string");
}

void add_orbit(ElementSet& out, const Element& x, const std::vector<Element>& group) {
  for (const Element& g : group) out.insert(x * g);
}

std::vector<Element> sorted(const ElementSet& s) {
  std::vector<Element> v(s.begin(), s.end());
  std::sort(v.begin(), v.end(), canonical_less);
  return v;
}

}  // namespace

std::array<std::vector<Point>, 2> attached_edges(const Element& w) {
  if (!is_spiral(w)) {
    Hexagon h = hexagon(w);
    auto e0 = h.edge(0).centers;
    auto e5 = h.edge(5).centers;
    std::reverse(e5.begin(), e5.end());
    return {e0, e5};
  }
  if (length(w) == 0) return {std::vector<Point>{center(w)}, std::vector<Point>{center(w)}};
  if (length(w) == 1) {
    auto e = segment(center(w), kQ);
    return {e, e};
  }
  DegenerateHull h = degenerate_hull(w);
  return {segment(center(w), center(h.vertices[1])), segment(center(w), center(h.vertices[2]))};
}

bool has_long_attached_edge(const Element& w) {
  auto e = attached_edges(w);
  return e[0].size() >= 6 || e[1].size() >= 6;
}

std::vector<Element> smooth_points(const Element& w) {
  if (is_spiral(w)) return kumar_smooth_points(w);
  Hexagon h = hexagon(w);
  auto group = descent_group(w, Side::Right);
  ElementSet out;
  if (type_of(w) == 1) {
    for (const Element& v : h.vertices) add_orbit(out, v, group);
    return sorted(out);
  }
  for (int i = 0; i < 6; ++i) {
    add_orbit(out, h.vertices[i], group);
    auto fwd = h.edge(i).centers;
    auto back = h.edge((i + 5) % 6).centers;
    if (fwd.size() >= 2) add_orbit(out, from_center(fwd[1]), group);
    if (back.size() >= 2) add_orbit(out, from_center(back[back.size() - 2]), group);
  }
  return sorted(out);
}

bool rationally_smooth(const Element& w) { return nrs_points(w).empty(); }

SchubertClass classify_schubert(const Element& w) {
  if (!rationally_smooth(w)) return SchubertClass::Singular;
  return kumar_smooth(w, identity()) ? SchubertClass::Smooth : SchubertClass::RationallySmoothOnly;
}

std::vector<Element> maximal_singular_kumar(const Element& w) {
  std::vector<Element> sing;
  ElementSet ok;
  for (const Element& x : kumar_smooth_points(w)) ok.insert(x);
  for (const Element& x : interval(w))
    if (!ok.count(x)) sing.push_back(x);
  return maximal_elements(sing);
}

std::vector<Element> maximal_singular(const Element& w) {
  if (classify_schubert(w) == SchubertClass::Smooth) return {};
  if (is_spiral(w)) return maximal_singular_kumar(w);
  // Two from w along each long attached edge.
  std::vector<Element> xs;
  for (const auto& e : attached_edges(w))
    if (e.size() >= 6) xs.push_back(from_center(e[2]));
  std::vector<Element> cand = xs;
  for (const Element& z : maximal_nrs(w)) {
    bool below = std::any_of(xs.begin(), xs.end(), [&](const Element& x) { return leq(z, x); });
    if (!below) cand.push_back(z);
  }
  return maximal_elements(cand);
}

std::optional<int> singular_codim(const Element& w) {
  auto m = maximal_singular(w);
  if (m.empty()) return std::nullopt;
  int top = 0;
  for (const Element& x : m) top = std::max(top, length(x));
  return length(w) - top;
}

std::vector<Word> reduced_words(const Element& w) {
  if (length(w) == 0) return {Word{}};
  std::vector<Word> out;
  for (int s : descents(w, Side::Right))
    for (Word v : reduced_words(w * simple(s))) {
      v.push_back(s);
      out.push_back(std::move(v));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::string word_shape(const Word& w) {
  std::map<int, char> name;
  std::string out;
  for (int s : w) {
    auto it = name.find(s);
    if (it == name.end()) it = name.emplace(s, static_cast<char>('a' + name.size())).first;
    out += it->second;
  }
  return out;
}

std::vector<SmoothRow> enumerate_smooth_varieties() {
  // A smooth X_w has e as a smooth point, so l(w) <= 6.
  std::map<std::pair<int, std::string>, std::vector<Element>> groups;
  for (const Element& w : elements_up_to(6)) {
    if (classify_schubert(w) != SchubertClass::Smooth) continue;
    std::string shape;
    for (const Word& r : reduced_words(w)) {
      std::string s = word_shape(r);
      if (shape.empty() || s < shape) shape = s;
    }
    groups[{length(w), shape}].push_back(w);
  }
  std::vector<SmoothRow> rows;
  for (auto& [key, members] : groups) {
    SmoothRow r;
    r.length = key.first;
    r.pattern = key.second.empty() ? "e" : key.second;
    r.members = std::move(members);
    rows.push_back(std::move(r));
  }
  return rows;
}

bool dim_bound_check(const Element& w) {
  int len = length(w);
  int slack = 6;
  if (!is_spiral(w)) {
    bool even = classify(w).even();
    slack = type_of(w) == 1 ? (even ? 6 : 5) : (even ? 5 : 4);
  }
  for (const Element& x : smooth_points(w))
    if (length(x) < len - slack) return false;
  return true;
}

LocusReport locus_report(const Element& w) {
  LocusReport rep;
  rep.owner = w;
  QTable qt = q_table(w);
  auto smooth = smooth_points(w);
  ElementSet smooth_set(smooth.begin(), smooth.end());
  auto nrs_list = nrs_points(w);
  ElementSet nrs_set(nrs_list.begin(), nrs_list.end());
  auto mn = maximal_nrs(w);
  ElementSet mn_set(mn.begin(), mn.end());
  rep.classification = classify_schubert(w);
  auto ms = rep.classification == SchubertClass::Smooth ? std::vector<Element>{} : maximal_singular(w);
  ElementSet ms_set(ms.begin(), ms.end());
  std::optional<Hexagon> hex;
  if (!is_spiral(w)) hex = hexagon(w);
  for (const QEntry& e : qt.entries) {
    LocusRecord r;
    r.x = e.x;
    r.length = length(e.x);
    r.q = e.q;
    r.nrs = nrs_set.count(e.x) > 0;
    r.smooth = smooth_set.count(e.x) > 0;
    if (hex) r.shell = shell_index(*hex, e.x);
    r.maximal_nrs = mn_set.count(e.x) > 0;
    r.maximal_singular = ms_set.count(e.x) > 0;
    rep.records.push_back(r);
  }
  rep.nrs_codim = nrs_codimension(w);
  if (!ms.empty()) {
    int top = 0;
    for (const Element& x : ms) top = std::max(top, length(x));
    rep.singular_codim = length(w) - top;
  }
  rep.smooth_count = static_cast<int>(smooth.size());
  return rep;
}

}  // namespace sa2
