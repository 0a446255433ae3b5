#include <doctest.h>

#include <map>

#include "oracle/affine_perm.hpp"
#include "sa2/loci.hpp"

using namespace sa2;

namespace {

oracle::Perm perm_of(const Element& w) { return oracle::from_word(element_to_word(w)); }
Element el(const char* s) { return word_to_element(parse_word(s)); }

std::vector<Element> sorted(std::vector<Element> v) {
  std::sort(v.begin(), v.end(), canonical_less);
  return v;
}

bool is_one(const oracle::KL::Poly& p) { return p.size() == 1 && p[0] == 1; }

}  // namespace

TEST_CASE("rational smoothness agrees with Kazhdan-Lusztig polynomials up to length 8") {
  oracle::KL kl;
  for (const Element& w : elements_up_to(8)) {
    auto pw = perm_of(w);
    CHECK(rationally_smooth(w) == is_one(kl.P(oracle::Perm{}, pw)));
    auto bad = nrs_points(w);
    ElementSet b(bad.begin(), bad.end());
    for (const Element& x : interval(w)) CHECK((b.count(x) > 0) == !is_one(kl.P(perm_of(x), pw)));
  }
}

TEST_CASE("length-4 spirals: short edges, singular locus of codimension 3") {
  oracle::KL kl;
  int n = 0;
  for (const Element& w : elements_up_to(4)) {
    if (!is_spiral(w) || length(w) != 4) continue;
    ++n;
    CHECK(!has_long_attached_edge(w));
    CHECK(classify_schubert(w) == SchubertClass::Singular);
    CHECK(kl.P(oracle::Perm{}, perm_of(w)) == oracle::KL::Poly{1, 1});
    CHECK(singular_codim(w) == 3);
    CHECK(nrs_codimension(w) == 3);
  }
  CHECK(n == 6);
}

TEST_CASE("smooth points equal the Kumar scan up to length 8") {
  for (const Element& w : elements_up_to(8)) CHECK(smooth_points(w) == kumar_smooth_points(w));
}

TEST_CASE("singular set is downward closed and contains the nrs set") {
  for (const Element& w : elements_up_to(8)) {
    auto sm = smooth_points(w);
    ElementSet smooth(sm.begin(), sm.end());
    auto bad = nrs_points(w);
    for (const Element& x : bad) CHECK(smooth.count(x) == 0);
    for (const Element& x : interval(w)) {
      if (smooth.count(x)) continue;
      for (const Element& y : interval(x)) CHECK(smooth.count(y) == 0);
    }
  }
}

TEST_CASE("classification examples") {
  // s_i s_j s_i s_k and s_k s_i s_j s_i
  CHECK(classify_schubert(el("0102")) == SchubertClass::Smooth);
  CHECK(classify_schubert(el("2010")) == SchubertClass::Smooth);
  int twisted7 = 0;
  for (const Element& w : elements_up_to(12)) {
    if (length(w) == 6) CHECK(classify_schubert(w) == SchubertClass::Singular);
    if (is_twisted_spiral(w) && length(w) >= 7) {
      ++twisted7;
      CHECK(classify_schubert(w) == SchubertClass::RationallySmoothOnly);
    }
  }
  CHECK(twisted7 == 18);
}

TEST_CASE("smooth varieties: 31 in total, classes by word shape") {
  auto rows = enumerate_smooth_varieties();
  std::map<int, int> per_len;
  std::map<std::string, int> per_shape;
  for (const auto& r : rows) {
    per_len[r.length] += static_cast<int>(r.members.size());
    per_shape[r.pattern] += static_cast<int>(r.members.size());
  }
  CHECK(per_len == std::map<int, int>{{0, 1}, {1, 3}, {2, 6}, {3, 9}, {4, 6}, {5, 6}});
  CHECK(per_shape["aba"] == 3);
  CHECK(per_shape["abc"] == 6);
  CHECK(per_shape["abac"] == 3);
  CHECK(per_shape["abcb"] == 3);
  for (const auto& r : rows)
    if (r.length == 5)
      for (const Element& w : r.members) {
        bool found = false;
        for (const Word& word : reduced_words(w)) found = found || word_shape(word) == "abcac";
        CHECK(found);
      }
}

TEST_CASE("reduced words") {
  CHECK(reduced_words(identity()) == std::vector<Word>{Word{}});
  CHECK(reduced_words(el("010")).size() == 2);
  for (const Element& w : elements_up_to(8))
    for (const Word& r : reduced_words(w)) {
      CHECK(static_cast<int>(r.size()) == length(w));
      CHECK(word_to_element(r) == w);
    }
  CHECK(word_shape({2, 0, 2, 1}) == "abac");
}

TEST_CASE("maximal singular points with two long attached edges") {
  int seen = 0;
  for (const Element& w : elements_up_to(11)) {
    if (is_spiral(w)) continue;
    auto e = attached_edges(w);
    if (e[0].size() < 6 || e[1].size() < 6) continue;
    ++seen;
    auto m = sorted(maximal_singular(w));
    auto expect = sorted({from_center(e[0][2]), from_center(e[1][2])});
    CHECK(m == expect);
    for (const Element& x : m) CHECK(length(x) == length(w) - 2);
    CHECK(singular_codim(w) == 2);
  }
  CHECK(seen > 0);
}

TEST_CASE("maximal singular points agree with Kumar up to length 8") {
  for (const Element& w : elements_up_to(8))
    CHECK(sorted(maximal_singular(w)) == sorted(maximal_singular_kumar(w)));
}

TEST_CASE("singular codimension of rationally smooth but singular varieties") {
  for (const Element& w : elements_up_to(9)) {
    if (classify_schubert(w) != SchubertClass::RationallySmoothOnly) continue;
    CHECK(nrs_codimension(w) == std::nullopt);
    int top = 0;
    for (const Element& x : maximal_singular_kumar(w)) top = std::max(top, length(x));
    CHECK(singular_codim(w) == length(w) - top);
  }
}

TEST_CASE("smooth points: codimension at most one is smooth, count at most 36") {
  for (const Element& w : elements_up_to(12)) {
    auto sm = smooth_points(w);
    ElementSet s(sm.begin(), sm.end());
    CHECK(sm.size() <= 36);
    for (const Element& x : interval(w))
      if (length(x) >= length(w) - 1) CHECK(s.count(x) == 1);
    CHECK(dim_bound_check(w));
  }
}

TEST_CASE("a generic Type 1 even element has 36 smooth points") {
  Element w = el("01020102010");
  CHECK(type_of(w) == 1);
  CHECK(classify(w).even());
  Hexagon h = hexagon(w);
  for (int i = 0; i < 6; ++i) CHECK(h.edge(i).alcoves() >= 6);
  CHECK(smooth_points(w).size() == 36);
  CHECK(smooth_points(w) == kumar_smooth_points(w));
}

TEST_CASE("locus report is self-consistent") {
  for (const char* s : {"0120", "0102010", "012010210", "0102", "1201021"}) {
    Element w = el(s);
    LocusReport r = locus_report(w);
    CHECK(r.records.size() == interval(w).size());
    int smooth = 0;
    for (const auto& rec : r.records) {
      if (rec.smooth) {
        ++smooth;
        CHECK(!rec.nrs);
      }
      if (rec.maximal_nrs) CHECK(rec.nrs);
      if (rec.maximal_singular) CHECK(!rec.smooth);
      if (!is_spiral(w)) CHECK(rec.nrs == (rec.q > 0));
    }
    CHECK(smooth == r.smooth_count);
    CHECK(r.classification == classify_schubert(w));
  }
}
