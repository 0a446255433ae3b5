#include "sa2/serialize.hpp"

namespace sa2 {

namespace {

Json point_json(Point p) { return Json::array({p.a, p.b}); }

Json words(const std::vector<Element>& xs) {
  Json a = Json::array();
  for (const Element& x : xs) a.push_back(word_of(x));
  return a;
}

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const Element& w) {
  return Json{{"word", word_of(w)},
              {"length", length(w)},
              {"translation", Json::array({w.lam.c1, w.lam.c2})},
              {"finite", w.f.name()},
              {"center", point_json(center(w))},
              {"region", classify(w).name()}};
}

Json to_json(const Hexagon& h) {
  Json j{{"owner", word_of(h.owner)}, {"region", h.region.name()}, {"type", type_of(h.owner)}};
  Json planes = Json::array();
  for (const Hyperplane& p : h.planes) planes.push_back({{"root", p.root.name()}, {"level", p.level}});
  j["planes"] = planes;
  Json verts = Json::array();
  for (const Element& v : h.vertices) verts.push_back(to_json(v));
  j["vertices"] = verts;
  Json edges = Json::array();
  for (int i = 0; i < 6; ++i) {
    Edge e = h.edge(i);
    Json cs = Json::array();
    for (Point p : e.centers) cs.push_back(word_of(from_center(p)));
    edges.push_back({{"from", e.from}, {"to", e.to}, {"direction", kDirRoots[e.dir].name()},
                     {"alcoves", e.alcoves()}, {"elements", cs}});
  }
  j["edges"] = edges;
  Json slabs = Json::array();
  for (int d = 0; d < 3; ++d)
    slabs.push_back({{"direction", kDirRoots[d].name()}, {"lo", h.slabs.lo[d]}, {"hi", h.slabs.hi[d]}});
  j["slabs"] = slabs;
  Json segs = Json::array();
  for (const SpecialSegment& s : h.special_segments()) {
    Json cs = Json::array();
    for (Point p : s.centers) cs.push_back(word_of(from_center(p)));
    segs.push_back({{"edge", s.edge}, {"elements", cs}});
  }
  j["special_segments"] = segs;
  return j;
}

Json to_json(const Hull& h) {
  Json j{{"owner", word_of(h.owner)}, {"spiral", is_spiral(h.owner)}};
  j["vertices"] = words(h.vertices);
  Json slabs = Json::array();
  for (int d = 0; d < 3; ++d)
    slabs.push_back({{"direction", kDirRoots[d].name()}, {"lo", h.slabs.lo[d]}, {"hi", h.slabs.hi[d]}});
  j["slabs"] = slabs;
  return j;
}

Json to_json(const QTable& t) {
  Json rows = Json::array();
  for (const QEntry& e : t.entries)
    rows.push_back({{"x", word_of(e.x)}, {"length", length(e.x)}, {"q", e.q}, {"rule", tag_name(e.tag)}});
  return Json{{"owner", word_of(t.owner)}, {"length", length(t.owner)}, {"entries", rows}};
}

Json to_json(const LocusRecord& r) {
  return Json{{"x", word_of(r.x)},
              {"length", r.length},
              {"q", r.q},
              {"nrs", r.nrs},
              {"smooth", r.smooth},
              {"shell", r.shell < 0 ? Json(nullptr) : Json(r.shell)},
              {"maximal_nrs", r.maximal_nrs},
              {"maximal_singular", r.maximal_singular}};
}

Json to_json(const LocusReport& r) {
  Json recs = Json::array();
  for (const LocusRecord& x : r.records) recs.push_back(to_json(x));
  return Json{{"owner", word_of(r.owner)},
              {"length", length(r.owner)},
              {"classification", class_name(r.classification)},
              {"nrs_codimension", opt(r.nrs_codim)},
              {"singular_codimension", opt(r.singular_codim)},
              {"smooth_point_count", r.smooth_count},
              {"records", recs}};
}

Json to_json(const CheckResult& r) {
  return Json{{"criterion", r.criterion}, {"name", r.name},         {"pass", r.pass},
              {"cases", r.cases},         {"failures", r.failures}, {"note", r.note}};
}

Json to_json(const std::vector<SmoothRow>& rows) {
  Json out = Json::array();
  for (const SmoothRow& r : rows)
    out.push_back({{"length", r.length},
                   {"pattern", r.pattern},
                   {"count", r.members.size()},
                   {"members", words(r.members)}});
  return out;
}

Json to_json(const RationalNF& f) {
  Json den = Json::array();
  for (const auto& [form, mult] : f.denominator())
    den.push_back({{"form", Json::array({form[0], form[1], form[2]})}, {"power", mult}});
  return Json{{"numerator", f.numerator().str()}, {"denominator", den}, {"text", f.str()}};
}

}  // namespace sa2
