#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <unordered_map>

#include "sa2/bruhat.hpp"

namespace sa2 {

// a0*b0 + a1*b1 + a2*b2 in the simple affine roots; delta = (1,1,1).
struct RealRoot {
  std::array<int, 3> c{};
  bool operator==(const RealRoot&) const = default;
  auto operator<=>(const RealRoot&) const = default;
  RealRoot operator-() const { return {{-c[0], -c[1], -c[2]}}; }
  bool is_real() const;
  bool positive() const;
  Root finite() const { return {c[1] - c[0], c[2] - c[0]}; }
  int level() const { return c[0]; }  // coefficient of delta
  std::string name() const;
};

RealRoot simple_root(int i);
RealRoot simple_root_action(int i, RealRoot r);
RealRoot element_action(const Element& w, RealRoot r);

Element root_to_reflection(RealRoot r);
RealRoot reflection_to_root(Root alpha, int k);
// For an element that is an affine reflection.
RealRoot root_of_reflection(const Element& r);

using Mono = std::array<int, 3>;
using Coef = boost::multiprecision::cpp_int;

// Sparse polynomial in b0, b1, b2 with integer coefficients.
struct Poly {
  std::map<Mono, Coef> terms;
  static Poly constant(const Coef& c);
  static Poly linear(const std::array<int, 3>& form);
  bool is_zero() const { return terms.empty(); }
  Poly operator+(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return terms == o.terms; }
  // Exact quotient by a nonzero linear form, if it divides.
  std::optional<Poly> divide_linear(const std::array<int, 3>& form) const;
  Poly apply_simple(int i) const;
  std::string str() const;
};

// num / prod(den), den a multiset of sign-normalized linear forms.
class RationalNF {
 public:
  RationalNF() = default;
  static RationalNF from_int(long v);
  static RationalNF inverse_of(const RealRoot& form);

  const Poly& numerator() const { return num_; }
  const std::map<std::array<int, 3>, int>& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalNF operator+(const RationalNF& o) const;
  RationalNF operator-() const;
  RationalNF operator-(const RationalNF& o) const { return *this + (-o); }
  RationalNF operator*(const RationalNF& o) const;
  bool operator==(const RationalNF& o) const;
  RationalNF apply_simple(int i) const;
  std::string str() const;

 private:
  void add_form(std::array<int, 3> f, int mult);
  void cancel();
  Poly num_ = Poly::constant(0);
  std::map<std::array<int, 3>, int> den_;
};

// Positive real roots b with s_b x <= w.
std::vector<RealRoot> psi_set(const Element& w, const Element& x);
std::vector<RealRoot> psi_set(const Hull& h, const Element& x);

// e^w_x for every x reachable by a subexpression of the word.
std::unordered_map<Element, RationalNF, ElementHash> multiplicity_table(const Word& word);
RationalNF equivariant_multiplicity(const Element& w, const Element& x, const Word& word);

bool kumar_smooth(const Element& w, const Element& x);
// Kumar-smooth points of w, canonical order.
std::vector<Element> kumar_smooth_points(const Element& w);

bool setup_move_check(const Element& w, const Element& x, int s);
bool setup_move_check_left(const Element& w, const Element& x, int s);

}  // namespace sa2
