#include <doctest.h>

#include <map>

#include "oracle/affine_perm.hpp"
#include "sa2/qstat.hpp"

using namespace sa2;

namespace {

oracle::Perm perm_of(const Element& w) { return oracle::from_word(element_to_word(w)); }
Element el(const char* s) { return word_to_element(parse_word(s)); }

}  // namespace

TEST_CASE("brute-force q agrees with the permutation oracle up to length 8") {
  for (const Element& w : elements_up_to(8)) {
    auto pw = perm_of(w);
    for (const Element& x : interval(w)) CHECK(q_brute(w, x) == oracle::q_value(pw, perm_of(x)));
  }
}

TEST_CASE("q histograms (frozen, confirmed by the oracle)") {
  const std::map<std::string, std::map<int, int>> frozen{
      {"0120", {{0, 12}, {1, 2}}},
      {"012012", {{0, 24}, {1, 6}}},
      {"0102010", {{0, 36}, {2, 6}}},
      {"012010210", {{0, 36}, {1, 16}, {2, 28}, {4, 2}}},
      {"01020102010", {{0, 72}, {2, 36}, {4, 6}}}};
  for (const auto& [word, hist] : frozen) {
    auto pw = oracle::from_word(parse_word(word));
    std::map<int, int> theirs, ours;
    for (const auto& x : oracle::lower_interval(pw)) ++theirs[oracle::q_value(pw, x)];
    for (const QEntry& e : q_table(el(word.c_str())).entries) ++ours[e.q];
    CHECK(theirs == hist);
    CHECK(ours == hist);
  }
}

TEST_CASE("q is nonnegative and vanishes at the top and one step below") {
  for (const Element& w : elements_up_to(12)) {
    CHECK(q_brute(w, w) == 0);
    for (const QEntry& e : q_table(w).entries) {
      CHECK(e.q >= 0);
      if (length(e.x) >= length(w) - 1) CHECK(e.q == 0);
    }
  }
}

TEST_CASE("structured evaluation reports the rule it used") {
  std::map<QTag, int> seen;
  for (const Element& w : elements_up_to(11)) {
    if (is_spiral(w)) continue;
    QStructured qs(w);
    for (const Element& x : interval(w)) {
      QTag tag = QTag::Brute;
      int v = qs.value(x, &tag);
      CHECK(v == q_brute(w, x));
      ++seen[tag];
      if (tag == QTag::Translation) CHECK(qs.base() == 0);
      if (tag == QTag::BaseCase) CHECK(qs.base() > 0);
    }
  }
  CHECK(seen[QTag::BaseCase] > 0);
  CHECK(seen[QTag::OuterShell] > 0);
  CHECK(seen[QTag::Translation] > 0);
  CHECK(seen.count(QTag::Brute) == 0);
}

TEST_CASE("spiral owners fall back to brute force") {
  for (const Element& w : elements_up_to(9)) {
    if (!is_spiral(w)) continue;
    for (const QEntry& e : q_table(w).entries) {
      CHECK(e.tag == QTag::Brute);
      CHECK(e.q == q_brute(w, e.x));
    }
  }
}

TEST_CASE("base case 1 is exactly the twisted spirals") {
  for (const Element& w : elements_up_to(12)) {
    if (is_spiral(w)) continue;
    CHECK((base_case(w) == 1) == is_twisted_spiral(w));
  }
}

TEST_CASE("base cases are the elements not reached by translation") {
  for (const Element& w : elements_up_to(12)) {
    if (is_spiral(w)) continue;
    Element inner = translation(-chamber_root(classify(w).id)) * w;
    bool translated = classify(inner) == classify(w) && length(inner) == length(w) - 4;
    CHECK((base_case(w) == 0) == translated);
  }
}

TEST_CASE("0-shell: q is 1 on special segments and 0 elsewhere") {
  for (const Element& w : elements_up_to(12)) {
    if (is_spiral(w)) continue;
    Hexagon h = hexagon(w);
    std::vector<Point> special;
    for (const auto& s : h.special_segments()) special.insert(special.end(), s.centers.begin(), s.centers.end());
    for (int i = 0; i < 6; ++i)
      for (Point p : h.edge(i).centers) {
        bool on = std::find(special.begin(), special.end(), p) != special.end();
        int q = q_brute(w, from_center(p));
        CHECK(q <= 1);
        if (on) CHECK(q == 1);
        if (!on) CHECK(q == 0);
      }
  }
}

TEST_CASE("nrs: downward closed, top is rationally smooth") {
  for (const Element& w : elements_up_to(10)) {
    auto bad = nrs_points(w);
    ElementSet s(bad.begin(), bad.end());
    CHECK(s.count(w) == 0);
    for (const Element& x : bad)
      for (const Element& y : interval(x)) CHECK(s.count(y) == 1);
  }
}

TEST_CASE("nrs codimension (frozen)") {
  CHECK(nrs_codimension(el("0120")) == 3);
  CHECK(nrs_codimension(el("012")) == std::nullopt);
  CHECK(nrs_codimension(el("0102")) == std::nullopt);
  CHECK(nrs_codimension(el("012010210")) == 3);
  CHECK(nrs_codimension(el("01020102010")).has_value());
}

TEST_CASE("maximal nrs closed form on a few owners") {
  for (const char* s : {"012010210", "0102010", "01020102010", "120121"}) {
    Element w = el(s);
    auto a = maximal_nrs(w), b = maximal_nrs_generic(w);
    std::sort(a.begin(), a.end(), canonical_less);
    std::sort(b.begin(), b.end(), canonical_less);
    CHECK(a == b);
  }
}

TEST_CASE("translation move adds two on a sample") {
  Element w = el("0102010");
  Element t = translation(chamber_root(classify(w).id)) * w;
  CHECK(length(t) == length(w) + 4);
  for (const Element& x : interval(w)) CHECK(q_brute(t, x) == q_brute(w, x) + 2);
}

TEST_CASE("precondition errors") {
  CHECK_THROWS_AS(q_structured(el("0120"), identity()), PreconditionError);
  CHECK_THROWS_AS(q_brute(el("012"), el("0120")), PreconditionError);
}
