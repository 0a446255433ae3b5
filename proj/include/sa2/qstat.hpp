#pragma once

#include <memory>
#include <optional>

#include "sa2/bruhat.hpp"

namespace sa2 {

enum class QTag { Brute, BaseCase, OuterShell, Translation };
std::string tag_name(QTag t);

// Reflections r with r x inside the hull, as images r x.
std::vector<Element> reflected_images(const Hull& h, const Element& x);

int q_brute(const Element& w, const Element& x);
int q_brute(const Hull& h, int len_w, const Element& x);

// 1..4 for the four base cases, 0 for elements reached by translation.
int base_case(const Element& w);

// Structured evaluation for one non-spiral owner; reusable across x.
class QStructured {
 public:
  explicit QStructured(const Element& w);
  ~QStructured();
  QStructured(QStructured&&) noexcept;
  int value(const Element& x, QTag* tag = nullptr) const;
  const Hexagon& hex() const { return hex_; }
  int base() const { return base_; }

 private:
  int outer_shell(const Element& x, int shell) const;
  int base_value(const Element& x, int shell) const;
  int case4_inner(Point p) const;
  bool meets_special(const Element& x) const;

  Element w_;
  Hexagon hex_;
  int len_ = 0, type_ = 0, base_ = 0;
  std::vector<Element> rgroup_;
  std::vector<SpecialSegment> segs_;
  std::unique_ptr<QStructured> inner_;
  // Base Case 4 with length >= 7.
  struct Line {
    int dir = 0, key = 0;
  };
  std::array<Line, 6> diag_{};
};

int q_structured(const Element& w, const Element& x, QTag* tag = nullptr);

struct QEntry {
  Element x;
  int q = 0;
  QTag tag = QTag::Brute;
};

struct QTable {
  Element owner;
  std::vector<QEntry> entries;  // canonical order of x
  std::optional<int> find(const Element& x) const;
};

QTable q_table(const Element& w);

// Carrell-Peterson: x is nrs iff q > 0 somewhere on [x, w].
std::vector<Element> nrs_points(const Element& w);
bool nrs(const Element& w, const Element& x);

// Bruhat-maximal elements of the nrs set, by scanning.
std::vector<Element> maximal_nrs_generic(const Element& w);
// Closed-form list for non-spiral owners, generic scan otherwise.
std::vector<Element> maximal_nrs(const Element& w);

bool lookup_holds(const Element& w);
std::optional<int> nrs_codimension(const Element& w);

}  // namespace sa2
