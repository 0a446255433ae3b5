#include "sa2/qstat.hpp"

#include <algorithm>

namespace sa2 {

namespace {

constexpr int kKeyForm[3][2] = {{1, -1}, {1, 2}, {2, 1}};

int floor_div(int x, int d) { return x >= 0 ? x / d : -((-x + d - 1) / d); }
int ceil_div(int x, int d) { return -floor_div(-x, d); }
int sgn(long long v) { return (v > 0) - (v < 0); }

// Point a = A/D, b = B/D.
struct RatPoint {
  long long A, B, D;
};

RatPoint meet(int d1, int c1, int d2, int c2) {
  long long p = kKeyForm[d1][0], q = kKeyForm[d1][1];
  long long r = kKeyForm[d2][0], s = kKeyForm[d2][1];
  long long det = p * s - q * r;
  if (det == 0) throw std::logic_error("parallel diagonals do not meet");
  return {c1 * s - c2 * q, p * c2 - r * c1, det};
}

int side(int d, int c, const RatPoint& v) {
  long long k = kKeyForm[d][0] * v.A + kKeyForm[d][1] * v.B - static_cast<long long>(c) * v.D;
  return sgn(k) * sgn(v.D);
}

Element translate_out(const Element& w) {
  return translation(-chamber_root(classify(w).id)) * w;
}

}  // namespace

std::string tag_name(QTag t) {
  switch (t) {
    case QTag::Brute: return "brute";
    case QTag::BaseCase: return "base-case";
    case QTag::OuterShell: return "outer-shell";
    default: return "translation";
  }
}

std::vector<Element> reflected_images(const Hull& h, const Element& x) {
  Point p = center(x);
  std::vector<Element> out;
  for (Root r : kDirRoots) {
    int P = pairing(r, p);
    auto [lo, hi] = h.pairing_range(r);
    for (int k = ceil_div(lo + P, 6); k <= floor_div(hi + P, 6); ++k) {
      Element y = reflection(r, k) * x;
      if (h.contains(y)) out.push_back(y);
    }
  }
  return out;
}

int q_brute(const Hull& h, int len_w, const Element& x) {
  if (!h.contains(x)) throw PreconditionError("q: x is not below w");
  return static_cast<int>(reflected_images(h, x).size()) - len_w;
}

int q_brute(const Element& w, const Element& x) { return q_brute(hull_of(w), length(w), x); }

int base_case(const Element& w) {
  Region r = classify(w);
  if (r.kind != Region::Kind::Chamber) throw PreconditionError("base_case needs a non-spiral element");
  if (classify(translate_out(w)) == r) return 0;
  int type = type_of(w);
  return r.even() ? type : 2 + type;
}

QStructured::QStructured(const Element& w) : w_(w), hex_(hexagon(w)) {
  len_ = length(w);
  type_ = type_of(w);
  base_ = base_case(w);
  rgroup_ = descent_group(w, Side::Right);
  segs_ = hex_.special_segments();
  if (base_ == 0) inner_ = std::make_unique<QStructured>(translate_out(w));
  if (base_ == 4 && len_ >= 7) {
    int carrier = -1;
    for (const auto& s : segs_)
      if (!s.centers.empty()) {
        if (carrier >= 0) throw std::logic_error("base case 4 with two special segments");
        carrier = s.edge;
      }
    if (carrier < 0) throw std::logic_error("base case 4 without a special segment");
    bool ccw = carrier == 1;
    for (int i = 0; i < 6; ++i) {
      int v = ccw ? i : (6 - i) % 6;
      int d = hex_.diagonal_dir(v);
      diag_[i] = {d, string_key(d, hex_.centers[v])};
    }
  }
}

QStructured::~QStructured() = default;
QStructured::QStructured(QStructured&&) noexcept = default;

bool QStructured::meets_special(const Element& x) const {
  for (const Element& u : rgroup_) {
    Point p = center(x * u);
    for (const auto& s : segs_)
      if (std::find(s.centers.begin(), s.centers.end(), p) != s.centers.end()) return true;
  }
  return false;
}

int QStructured::outer_shell(const Element& x, int shell) const {
  bool odd = hex_.odd();
  if (type_ == 1) return odd && meets_special(x) ? 1 : 0;
  if (!odd) return shell <= 1 ? 0 : 1;
  if (shell <= 1) return meets_special(x) ? 1 : 0;
  int d = dir_of(hex_.planes[2].root);
  int k = string_key(d, center(x));
  return k == hex_.slabs.lo[d] + 6 || k == hex_.slabs.hi[d] - 6 ? 2 : 1;
}

int QStructured::case4_inner(Point p) const {
  const Line &D0 = diag_[0], &D1 = diag_[1], &D2 = diag_[2], &D4 = diag_[4], &D5 = diag_[5];
  auto on = [&](const Line& l, Point x) { return string_key(l.dir, x) == l.key; };
  auto red = [&](Point x) {
    const Line* ls[3] = {&D0, &D4, &D5};
    for (int i = 0; i < 3; ++i) {
      const Line& a = *ls[(i + 1) % 3];
      const Line& b = *ls[(i + 2) % 3];
      RatPoint v = meet(a.dir, a.key, b.dir, b.key);
      int sv = side(ls[i]->dir, ls[i]->key, v);
      int sx = sgn(string_key(ls[i]->dir, x) - ls[i]->key);
      if (sx != 0 && sx != sv) return false;
    }
    return true;
  };
  auto between = [](const Line& a, const Line& b, Point x) {
    int k = string_key(a.dir, x);
    return (k - a.key) * (k - b.key) < 0;
  };
  if (red(p)) return 2;
  if (on(D1, p) || on(D2, p)) return 1;
  for (const auto& [a, b] : {std::pair{&D1, &D4}, std::pair{&D2, &D5}}) {
    if (a->dir != b->dir) throw std::logic_error("diagonals are not parallel");
    if (!between(*a, *b, p)) continue;
    Point end = p;
    for (;;) {
      Point n = next_center(end, a->dir, 1);
      if (!hex_.contains(n) || hex_.slabs.depth(n) < 2 || red(n)) break;
      end = n;
    }
    return is_up(end) == is_up(p) ? 2 : 1;
  }
  throw std::logic_error("alcove outside the red, green and blue regions");
}

int QStructured::base_value(const Element& x, int shell) const {
  switch (base_) {
    case 1: return 0;
    case 2: return shell <= 1 ? 0 : 1;
    case 3:
      if (len_ == 4) return 0;
      return shell <= 2 ? outer_shell(x, shell) : 1;
    default:
      if (len_ == 5) return shell <= 1 ? 0 : 2;
      if (shell <= 1) return meets_special(x) ? 1 : 0;
      return case4_inner(center(x));
  }
}

int QStructured::value(const Element& x, QTag* tag) const {
  Point p = center(x);
  if (!hex_.contains(p)) throw PreconditionError("q: x is not below w");
  int shell = hex_.slabs.depth(p);
  if (base_ != 0) {
    if (tag) *tag = QTag::BaseCase;
    return base_value(x, shell);
  }
  if (shell <= 2) {
    if (tag) *tag = QTag::OuterShell;
    return outer_shell(x, shell);
  }
  if (tag) *tag = QTag::Translation;
  return inner_->value(x) + 2;
}

int q_structured(const Element& w, const Element& x, QTag* tag) {
  if (is_spiral(w)) throw PreconditionError("q_structured needs a non-spiral element");
  return QStructured(w).value(x, tag);
}

std::optional<int> QTable::find(const Element& x) const {
  for (const auto& e : entries)
    if (e.x == x) return e.q;
  return std::nullopt;
}

QTable q_table(const Element& w) {
  QTable t;
  t.owner = w;
  Hull h = hull_of(w);
  std::vector<Element> xs = interval(h);
  if (is_spiral(w)) {
    int l = length(w);
    for (const Element& x : xs) t.entries.push_back({x, q_brute(h, l, x), QTag::Brute});
  } else {
    QStructured qs(w);
    for (const Element& x : xs) {
      QEntry e{x, 0, QTag::Brute};
      e.q = qs.value(x, &e.tag);
      t.entries.push_back(e);
    }
  }
  return t;
}

namespace {

// Maximal elements of {y <= w : q(w,y) > 0}.
std::vector<Element> positive_q_maxima(const Element& w) {
  Hull h = hull_of(w);
  int l = length(w);
  std::vector<Element> pos;
  for (const Element& y : interval(h))
    if (q_brute(h, l, y) > 0) pos.push_back(y);
  return maximal_elements(pos);
}

}  // namespace

std::vector<Element> nrs_points(const Element& w) {
  std::vector<Hull> tops;
  for (const Element& m : positive_q_maxima(w)) tops.push_back(hull_of(m));
  std::vector<Element> out;
  for (const Element& x : interval(w))
    for (const Hull& t : tops)
      if (t.contains(x)) {
        out.push_back(x);
        break;
      }
  return out;
}

bool nrs(const Element& w, const Element& x) {
  if (!leq(x, w)) throw PreconditionError("nrs: x is not below w");
  if (!is_spiral(w)) return q_structured(w, x) > 0;
  for (const Element& m : positive_q_maxima(w))
    if (leq(x, m)) return true;
  return false;
}

std::vector<Element> maximal_nrs_generic(const Element& w) { return positive_q_maxima(w); }

std::vector<Element> maximal_nrs(const Element& w) {
  if (is_spiral(w) || is_twisted_spiral(w)) return maximal_nrs_generic(w);
  int l = length(w);
  Region reg = classify(w);
  int type = type_of(w);
  int base = base_case(w);
  if (l < 6) {
    if (reg.odd() && type == 2 && l == 5) return {translate_out(w)};
    return maximal_nrs_generic(w);
  }
  std::vector<Element> out;
  if (reg.even() && type == 1) {
    out = {translate_out(w)};
  } else {
    Hexagon h = hexagon(w);
    std::vector<Element> zs;
    if (type == 2) {
      std::vector<int> asc;
      int s = descents(w, Side::Right).front();
      for (int i = 0; i < 3; ++i)
        if (i != s) asc.push_back(i);
      Element ws = w * simple(s);
      Element z1 = ws * simple(asc[0]) * simple(asc[1]);
      Element z2 = ws * simple(asc[1]) * simple(asc[0]);
      if (base == 2 || base == 4) {
        if (!(classify(z1) == reg)) std::swap(z1, z2);
        if (base == 2) {
          zs = {z1};
        } else {
          int strip_dir = dir_of(strip_root(classify(z2).id));
          auto walls = chamber_walls(reg.id);
          const Hyperplane& other = dir_of(walls[0].root) == strip_dir ? walls[1] : walls[0];
          zs = {z1, reflection(other.root, other.level) * z2};
        }
      } else {
        zs = {z1, z2};
      }
    }
    if (reg.odd()) {
      for (const auto& seg : h.special_segments())
        if (!seg.centers.empty()) {
          // endpoint nearer w1 on w1w2, nearer w5 on w4w5
          zs.push_back(from_center(seg.edge == 1 ? seg.centers.front() : seg.centers.back()));
        }
    }
    out = zs;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool lookup_holds(const Element& w) {
  Hull h = hull_of(w);
  int l = length(w);
  std::vector<Element> xs = interval(h);
  std::vector<int> q(xs.size());
  ElementSet positive;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    q[i] = q_brute(h, l, xs[i]);
    if (q[i] > 0) positive.insert(xs[i]);
  }
  std::vector<Hull> tops;
  for (const Element& m : maximal_elements({positive.begin(), positive.end()}))
    tops.push_back(hull_of(m));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    bool is_nrs = std::any_of(tops.begin(), tops.end(), [&](const Hull& t) { return t.contains(xs[i]); });
    bool witnessed = q[i] > 0;
    int lx = length(xs[i]);
    for (const Element& y : reflected_images(h, xs[i]))
      if (!witnessed && length(y) > lx && positive.count(y)) witnessed = true;
    if (is_nrs != witnessed) return false;
  }
  return true;
}

std::optional<int> nrs_codimension(const Element& w) {
  std::vector<Element> m = maximal_nrs(w);
  if (m.empty()) return std::nullopt;
  int best = 0;
  for (const Element& z : m) best = std::max(best, length(z));
  return length(w) - best;
}

}  // namespace sa2
