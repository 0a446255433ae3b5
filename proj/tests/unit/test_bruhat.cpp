#include <doctest.h>

#include <cmath>
#include <map>

#include "oracle/affine_perm.hpp"
#include "sa2/bruhat.hpp"

using namespace sa2;

namespace {

oracle::Perm perm_of(const Element& w) { return oracle::from_word(element_to_word(w)); }
Element el(const char* s) { return word_to_element(parse_word(s)); }

double cross(Point o, Point p, Point q) {
  auto x = [](Point r) { return r.a + r.b / 2.0; };
  auto y = [](Point r) { return r.b * std::sqrt(3.0) / 2; };
  return (x(p) - x(o)) * (y(q) - y(o)) - (y(p) - y(o)) * (x(q) - x(o));
}

}  // namespace

TEST_CASE("Bruhat order agrees with the permutation oracle on all pairs up to length 7") {
  auto all = elements_up_to(7);
  for (const Element& w : all) {
    auto below = oracle::lower_interval(perm_of(w));
    for (const Element& x : all) CHECK(leq(x, w) == (below.count(perm_of(x)) > 0));
  }
}

TEST_CASE("intervals agree with the permutation oracle up to length 10") {
  for (const Element& w : elements_up_to(10)) {
    auto below = oracle::lower_interval(perm_of(w));
    auto ours = interval(w);
    CHECK(ours.size() == below.size());
    for (const Element& x : ours) CHECK(below.count(perm_of(x)) == 1);
  }
}

TEST_CASE("interval sizes (frozen, confirmed by the oracle)") {
  const std::map<std::string, std::size_t> frozen{
      {"0120", 14}, {"012012", 30}, {"0102010", 42}, {"012010210", 82}, {"01020102010", 114}};
  for (const auto& [word, n] : frozen) {
    CHECK(oracle::lower_interval(oracle::from_word(parse_word(word))).size() == n);
    CHECK(interval(el(word.c_str())).size() == n);
  }
}

TEST_CASE("hexagon vertices: counterclockwise, convex, below w, on the boundary") {
  for (const Element& w : elements_up_to(12)) {
    if (is_spiral(w)) continue;
    Hexagon h = hexagon(w);
    CHECK(h.vertices[0] == w);
    for (int i = 0; i < 6; ++i) {
      CHECK(leq(h.vertices[i], w));
      CHECK(shell_index(h, h.vertices[i]) == 0);
      CHECK(cross(h.centers[i], h.centers[(i + 1) % 6], h.centers[(i + 2) % 6]) >= 0);
      Edge e = h.edge(i);
      CHECK(e.centers.front() == h.centers[i]);
      CHECK(e.centers.back() == h.centers[(i + 1) % 6]);
      for (Point p : e.centers) {
        CHECK(h.contains(p));
        CHECK(h.slabs.depth(p) == 0);
        CHECK(string_key(e.dir, p) == string_key(e.dir, e.centers.front()));
      }
    }
  }
}

TEST_CASE("even chamber: the vertices are the left descent orbit of w") {
  for (const Element& w : elements_up_to(12)) {
    if (!classify(w).even()) continue;
    Hexagon h = hexagon(w);
    ElementSet verts(h.vertices.begin(), h.vertices.end()), orbit;
    for (const Element& u : descent_group(w, Side::Left)) orbit.insert(u * w);
    CHECK(verts == orbit);
  }
}

TEST_CASE("owner is the unique element of maximal length") {
  for (const Element& w : elements_up_to(10)) {
    int top = 0, at_top = 0;
    for (const Element& x : interval(w)) {
      if (length(x) > top) top = length(x), at_top = 0;
      if (length(x) == top) ++at_top;
    }
    CHECK(top == length(w));
    CHECK(at_top == 1);
  }
}

TEST_CASE("degenerate hulls") {
  DegenerateHull e = degenerate_hull(identity());
  CHECK(e.vertices.size() == 2);
  CHECK(interval(identity()).size() == 1);
  for (int i = 0; i < 3; ++i) CHECK(interval(simple(i)).size() == 2);
  for (const Element& w : elements_up_to(12))
    if (is_spiral(w) && length(w) >= 2) {
      DegenerateHull h = degenerate_hull(w);
      CHECK(h.vertices.size() == 4);
      CHECK(h.vertices[0] == w);
    }
  CHECK_THROWS_AS(hexagon(el("0120")), PreconditionError);
  CHECK_THROWS_AS(degenerate_hull(el("0102")), PreconditionError);
}

TEST_CASE("maximal elements") {
  Element w = el("0102010");
  auto xs = interval(w);
  auto top = maximal_elements(xs);
  REQUIRE(top.size() == 1);
  CHECK(top[0] == w);
  std::vector<Element> co1;
  for (const Element& x : xs)
    if (length(x) == length(w) - 1) co1.push_back(x);
  CHECK(maximal_elements(co1).size() == co1.size());
}

TEST_CASE("oracle interval matches the permutation oracle") {
  for (const Element& w : elements_up_to(9)) CHECK(oracle_interval(w).size() == oracle::lower_interval(perm_of(w)).size());
}

TEST_CASE("special segments live only in odd chambers") {
  for (const Element& w : elements_up_to(12)) {
    if (is_spiral(w)) continue;
    Hexagon h = hexagon(w);
    auto segs = h.special_segments();
    if (!h.odd()) {
      CHECK(segs.empty());
      continue;
    }
    REQUIRE(segs.size() == 2);
    CHECK(segs[0].edge == 1);
    CHECK(segs[1].edge == 4);
    for (const auto& s : segs) {
      int n = h.edge(s.edge).alcoves();
      CHECK(s.centers.size() == static_cast<std::size_t>(n >= 6 ? n - 4 : 0));
    }
  }
}
