#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sa2 {

// Malformed user input (words, flags). Maps to CLI exit code 2.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside its domain. Maps to CLI exit code 3.
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

// Finite root c1*a1 + c2*a2 of A2.
struct Root {
  int c1 = 0, c2 = 0;
  constexpr Root operator-() const { return {-c1, -c2}; }
  constexpr bool operator==(const Root&) const = default;
  bool is_root() const;
  bool positive() const { return c1 >= 0 && c2 >= 0 && (c1 | c2) != 0; }
  std::string name() const;
};

inline constexpr Root kAlpha1{1, 0};
inline constexpr Root kAlpha2{0, 1};
inline constexpr Root kAlphaT{1, 1};

// String directions are indexed 0, 1, 2 by the positive roots aT, a1, a2.
inline constexpr std::array<Root, 3> kDirRoots{kAlphaT, kAlpha1, kAlpha2};
int dir_of(Root r);  // index of +-r in kDirRoots

int inner(Root x, Root y);  // (a,a)=2, (a1,a2)=-1

// Plane point stored as (3(v,a1), 3(v,a2)).
struct Point {
  int a = 0, b = 0;
  constexpr bool operator==(const Point&) const = default;
  constexpr Point operator+(Point o) const { return {a + o.a, b + o.b}; }
  constexpr Point operator-(Point o) const { return {a - o.a, b - o.b}; }
};

inline constexpr Point kQ{1, 1};

// 3(v, r)
constexpr int pairing(Root r, Point p) { return r.c1 * p.a + r.c2 * p.b; }
// scaled displacement of the translation t(r) (coroots equal roots here)
constexpr Point root_vector(Root r) {
  return {6 * r.c1 - 3 * r.c2, 6 * r.c2 - 3 * r.c1};
}

bool is_center(Point p);
bool is_up(Point p);  // requires is_center

// Constant along strings of direction d.
int string_key(int d, Point p);
// Smallest lattice step along direction d.
Point string_step(int d);
// Next alcove center on the d-string through p, moving by sign*step.
Point next_center(Point p, int d, int sign);

// Finite Weyl group element as its matrix on root coefficients;
// column j holds the image of a_{j+1}. Row-major storage.
struct FiniteMat {
  std::array<int, 4> m{1, 0, 0, 1};
  constexpr bool operator==(const FiniteMat&) const = default;
  Root apply(Root r) const {
    return {m[0] * r.c1 + m[1] * r.c2, m[2] * r.c1 + m[3] * r.c2};
  }
  FiniteMat operator*(const FiniteMat& o) const;
  FiniteMat inverse() const;
  Point act(Point p) const;
  std::string name() const;
};

// w = t(lam) f, lam in root coefficients.
struct Element {
  Root lam{};
  FiniteMat f{};
  constexpr bool operator==(const Element&) const = default;
};

struct ElementHash {
  std::size_t operator()(const Element& w) const noexcept;
};

Element identity();
Element simple(int i);
Element translation(Root lam);
Element finite_reflection(Root alpha);
Element reflection(Root alpha, int k);  // s_{alpha,k}, alpha positive

Element compose(const Element& a, const Element& b);
inline Element operator*(const Element& a, const Element& b) { return compose(a, b); }
Element inverse(const Element& w);
Point act(const Element& w, Point p);
inline Point center(const Element& w) { return act(w, kQ); }
Element from_center(Point p);

int length(const Element& w);

enum class Side { Left, Right };
std::vector<int> descents(const Element& w, Side side);
// Subgroup generated by the descents on one side (order 1, 2 or 6).
std::vector<Element> descent_group(const Element& w, Side side);

using Word = std::vector<int>;
Element word_to_element(const Word& word);
Word element_to_word(const Element& w);
Word parse_word(std::string_view text);
std::string format_word(const Word& word);
std::string word_of(const Element& w);
std::string describe(const Element& w);  // "(l1, l2; f)"

// Bruhat-compatible sort key: length, then reduced word.
bool canonical_less(const Element& x, const Element& y);

struct Region {
  enum class Kind { Identity, Strip, Chamber };
  Kind kind = Kind::Identity;
  int id = 0;  // strip 1..6 or chamber 1..6
  bool odd() const { return kind == Kind::Chamber && (id % 2 == 1); }
  bool even() const { return kind == Kind::Chamber && (id % 2 == 0); }
  bool operator==(const Region&) const = default;
  std::string name() const;
};

Region classify(const Element& w);
bool is_spiral(const Element& w);
bool is_twisted_spiral(const Element& w);
int type_of(const Element& w);

// Half-strips are numbered 1..6 counterclockwise from the one along +x;
// chamber c lies between half-strips c and c+1.
Root strip_root(int strip);
// First two letters of the reduced word of any spiral in the half-strip.
std::pair<int, int> strip_letters(int strip);
// Spiral element of length n in the half-strip (n >= 1).
Element spiral_element(int strip, int n);

Root chamber_root(int chamber);
Element translate_into_chamber(const Element& w);

struct Hyperplane {
  Root root;  // positive
  int level = 0;
  bool operator==(const Hyperplane&) const = default;
};
// Walls of a chamber: first the counterclockwise one, then the clockwise one.
std::array<Hyperplane, 2> chamber_walls(int chamber);

int wall_label(const Element& w, const Element& neighbor);

struct Factorization {
  Element u, v;
};
std::array<Factorization, 2> spiral_factorizations(const Element& w);

// All elements of length <= max_len in canonical order.
std::vector<Element> elements_up_to(int max_len);

// Diagram automorphism of the affine Dynkin triangle, as a relabelling.
using Relabel = std::array<int, 3>;
Element relabel(const Element& w, const Relabel& sigma);

}  // namespace sa2
