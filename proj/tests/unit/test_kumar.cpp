#include <doctest.h>

#include <boost/rational.hpp>

#include "oracle/affine_perm.hpp"
#include "sa2/kumar.hpp"
#include "sa2/qstat.hpp"

using namespace sa2;

namespace {

using Q = boost::rational<Coef>;

Element el(const char* s) { return word_to_element(parse_word(s)); }
oracle::Perm perm_of(const Element& w) { return oracle::from_word(element_to_word(w)); }

// A point where no real root vanishes: alpha + n delta evaluates to 18n + {5, 11, 16}.
const std::array<long, 3> kAt{2, 5, 11};

Q eval_form(const std::array<int, 3>& f) {
  return Q(Coef(f[0] * kAt[0] + f[1] * kAt[1] + f[2] * kAt[2]));
}

Q eval(const RationalNF& r) {
  Q num(0);
  for (const auto& [m, c] : r.numerator().terms) {
    Coef t = c;
    for (int v = 0; v < 3; ++v)
      for (int e = 0; e < m[v]; ++e) t *= kAt[v];
    num += Q(t);
  }
  for (const auto& [f, k] : r.denominator())
    for (int i = 0; i < k; ++i) num /= eval_form(f);
  return num;
}

std::array<int, 3> act(int i, std::array<int, 3> r) {
  int others = 0;
  for (int j = 0; j < 3; ++j)
    if (j != i) others += r[j];
  r[i] = others - r[i];
  return r;
}

// Direct sum over all subexpressions, evaluated at kAt, products in the permutation model.
Q oracle_multiplicity(const Word& word, const oracle::Perm& x) {
  Q total(0);
  std::size_t n = word.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    oracle::Perm p;
    std::vector<int> prefix;
    Q term(1);
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1) {
        p = oracle::right_simple(p, word[j]);
        prefix.push_back(word[j]);
      }
      std::array<int, 3> beta{};
      beta[word[j]] = 1;
      for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) beta = act(*it, beta);
      term /= eval_form(beta);
    }
    if (p == x) total += term;
  }
  return n % 2 ? -total : total;
}

}  // namespace

TEST_CASE("equivariant multiplicities agree with a direct subexpression sum up to length 7") {
  for (const Element& w : elements_up_to(7)) {
    Word word = element_to_word(w);
    auto table = multiplicity_table(word);
    for (const Element& x : interval(w)) {
      auto it = table.find(x);
      Q ours = it == table.end() ? Q(0) : eval(it->second);
      CHECK(ours == oracle_multiplicity(word, perm_of(x)));
    }
  }
}

TEST_CASE("multiplicity of a simple reflection at the identity") {
  for (int i = 0; i < 3; ++i) {
    RationalNF e = equivariant_multiplicity(simple(i), identity(), {i});
    CHECK(e == -RationalNF::inverse_of(simple_root(i)));
  }
}

TEST_CASE("multiplicity does not depend on the reduced word") {
  for (const char* s : {"0120", "0102010", "012010210"}) {
    Element w = el(s);
    Word a = element_to_word(w);
    Word b = a;
    // Rotate letters via a braid move where one exists.
    for (std::size_t i = 0; i + 2 < b.size(); ++i)
      if (b[i] == b[i + 2] && b[i] != b[i + 1]) {
        std::swap(b[i], b[i + 1]);
        b[i + 2] = b[i];
        break;
      }
    REQUIRE(word_to_element(b) == w);
    auto ta = multiplicity_table(a), tb = multiplicity_table(b);
    for (const Element& x : interval(w)) {
      auto ia = ta.find(x), ib = tb.find(x);
      RationalNF ea = ia == ta.end() ? RationalNF{} : ia->second;
      RationalNF eb = ib == tb.end() ? RationalNF{} : ib->second;
      CHECK(ea == eb);
    }
  }
}

TEST_CASE("psi set has q + l(w) roots, all positive and real") {
  for (const Element& w : elements_up_to(9))
    for (const Element& x : interval(w)) {
      auto psi = psi_set(w, x);
      CHECK(static_cast<int>(psi.size()) == q_brute(w, x) + length(w));
      for (const RealRoot& b : psi) {
        CHECK(b.is_real());
        CHECK(b.positive());
        CHECK(leq(root_to_reflection(b) * x, w));
      }
    }
}

TEST_CASE("roots and reflections correspond") {
  for (Root a : kDirRoots)
    for (int k = -5; k <= 5; ++k) {
      RealRoot r = reflection_to_root(a, k);
      CHECK(r.positive());
      CHECK(root_to_reflection(r) == reflection(a, k));
      CHECK(root_of_reflection(reflection(a, k)) == r);
    }
  // w s_b w^-1 = s_{w b}
  for (const Element& w : elements_up_to(6))
    for (Root a : kDirRoots)
      for (int k = -2; k <= 2; ++k) {
        RealRoot b = reflection_to_root(a, k);
        RealRoot wb = element_action(w, b);
        RealRoot pos = wb.positive() ? wb : -wb;
        CHECK(root_to_reflection(pos) == w * reflection(a, k) * inverse(w));
      }
  for (int i = 0; i < 3; ++i) CHECK(root_to_reflection(simple_root(i)) == simple(i));
}

TEST_CASE("rational function arithmetic") {
  RationalNF a = RationalNF::inverse_of(simple_root(0));
  RationalNF b = RationalNF::inverse_of(RealRoot{{0, 1, 1}});
  RationalNF one = RationalNF::from_int(1);
  CHECK((a + b) - b == a);
  CHECK(a * b == b * a);
  CHECK((a + b) * one == a + b);
  CHECK((a - a).is_zero());
  CHECK(a.apply_simple(0) == -a);
  CHECK(a.apply_simple(0).apply_simple(0) == a);
  // 1/b0 + 1/b1 = (b0 + b1) / (b0 b1)
  RationalNF c = RationalNF::inverse_of(simple_root(1));
  RationalNF s = a + c;
  CHECK(eval(s) == Q(1, 2) + Q(1, 5));
  CHECK(s.denominator().size() == 2);
}

TEST_CASE("Kumar: the top and codimension-one points are smooth") {
  for (const Element& w : elements_up_to(9)) {
    auto sm = kumar_smooth_points(w);
    ElementSet s(sm.begin(), sm.end());
    for (const Element& x : interval(w))
      if (length(x) >= length(w) - 1) CHECK(s.count(x) == 1);
  }
}

TEST_CASE("Kumar smooth implies rationally smooth") {
  for (const Element& w : elements_up_to(9)) {
    auto bad = nrs_points(w);
    ElementSet b(bad.begin(), bad.end());
    for (const Element& x : kumar_smooth_points(w)) CHECK(b.count(x) == 0);
  }
}

TEST_CASE("setup move identities on a sample") {
  int eligible = 0;
  for (const Element& w : elements_up_to(6))
    for (const Element& x : interval(w))
      for (int s = 0; s < 3; ++s)
        for (bool left : {false, true}) {
          bool ok = false;
          try {
            ok = left ? setup_move_check_left(w, x, s) : setup_move_check(w, x, s);
          } catch (const PreconditionError&) {
            continue;
          }
          CHECK(ok);
          ++eligible;
        }
  CHECK(eligible > 0);
}

TEST_CASE("setup move preconditions are enforced") {
  CHECK_THROWS_AS(setup_move_check(el("01"), el("012"), 0), PreconditionError);
  CHECK_THROWS_AS(setup_move_check(el("01"), identity(), 1), PreconditionError);
  CHECK_THROWS_AS(kumar_smooth(el("01"), el("0120")), PreconditionError);
  CHECK_THROWS_AS(root_to_reflection(RealRoot{{1, 1, 1}}), PreconditionError);
}
