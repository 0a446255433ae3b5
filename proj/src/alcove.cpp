#include "sa2/alcove.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace sa2 {

namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }
int floor_div(int x, int d) { return x >= 0 ? x / d : -((-x + d - 1) / d); }

FiniteMat mat_s1() { return FiniteMat{{-1, 1, 0, 1}}; }
FiniteMat mat_s2() { return FiniteMat{{1, 0, 1, -1}}; }

struct FiniteEntry {
  FiniteMat m;
  const char* name;
};

const std::array<FiniteEntry, 6>& finite_table() {
  static const std::array<FiniteEntry, 6> table = [] {
    FiniteMat e, a = mat_s1(), b = mat_s2();
    return std::array<FiniteEntry, 6>{{{e, "e"},
                                       {a, "s1"},
                                       {b, "s2"},
                                       {a * b, "s1s2"},
                                       {b * a, "s2s1"},
                                       {a * b * a, "s1s2s1"}}};
  }();
  return table;
}

}  // namespace

bool Root::is_root() const {
  int s = c1 * c1 + c2 * c2;
  if (s == 1) return true;
  return s == 2 && c1 == c2;
}

std::string Root::name() const {
  if (*this == kAlpha1) return "a1";
  if (*this == kAlpha2) return "a2";
  if (*this == kAlphaT) return "aT";
  if (*this == -kAlpha1) return "-a1";
  if (*this == -kAlpha2) return "-a2";
  if (*this == -kAlphaT) return "-aT";
  return "(" + std::to_string(c1) + "," + std::to_string(c2) + ")";
}

int dir_of(Root r) {
  for (int d = 0; d < 3; ++d)
    if (r == kDirRoots[d] || -r == kDirRoots[d]) return d;
  throw PreconditionError("not a finite root: " + r.name());
}

int inner(Root x, Root y) {
  return 2 * x.c1 * y.c1 - x.c1 * y.c2 - x.c2 * y.c1 + 2 * x.c2 * y.c2;
}

bool is_center(Point p) { return mod3(p.a) != 0 && mod3(p.a) == mod3(p.b); }
bool is_up(Point p) { return mod3(p.a) == 1; }

int string_key(int d, Point p) {
  switch (d) {
    case 0: return p.a - p.b;
    case 1: return p.a + 2 * p.b;
    default: return 2 * p.a + p.b;
  }
}

Point string_step(int d) {
  switch (d) {
    case 0: return {1, 1};
    case 1: return {2, -1};
    default: return {-1, 2};
  }
}

Point next_center(Point p, int d, int sign) {
  Point s = string_step(d);
  for (int t = 1; t <= 2; ++t) {
    Point c{p.a + sign * t * s.a, p.b + sign * t * s.b};
    if (is_center(c)) return c;
  }
  throw PreconditionError("next_center: start is not an alcove center");
}

FiniteMat FiniteMat::operator*(const FiniteMat& o) const {
  return FiniteMat{{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
                    m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]}};
}

FiniteMat FiniteMat::inverse() const {
  int det = m[0] * m[3] - m[1] * m[2];
  return FiniteMat{{m[3] * det, -m[1] * det, -m[2] * det, m[0] * det}};
}

Point FiniteMat::act(Point p) const {
  // (f v, a_i) = (v, f^{-1} a_i)
  FiniteMat inv = inverse();
  return {pairing(Root{inv.m[0], inv.m[2]}, p), pairing(Root{inv.m[1], inv.m[3]}, p)};
}

std::string FiniteMat::name() const {
  for (const auto& e : finite_table())
    if (e.m == *this) return e.name;
  return "?";
}

std::size_t ElementHash::operator()(const Element& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.lam.c1 * 73856093) ^
                  static_cast<std::size_t>(w.lam.c2 * 19349663);
  for (int x : w.f.m) h = h * 31 + static_cast<std::size_t>(x + 2);
  return h;
}

Element identity() { return Element{}; }

Element finite_reflection(Root alpha) {
  int g0 = 2 * alpha.c1 - alpha.c2, g1 = -alpha.c1 + 2 * alpha.c2;
  return Element{Root{}, FiniteMat{{1 - g0 * alpha.c1, -g1 * alpha.c1,
                                    -g0 * alpha.c2, 1 - g1 * alpha.c2}}};
}

Element translation(Root lam) { return Element{lam, FiniteMat{}}; }

Element reflection(Root alpha, int k) {
  Element s = finite_reflection(alpha);
  s.lam = Root{k * alpha.c1, k * alpha.c2};
  return s;
}

Element simple(int i) {
  switch (i) {
    case 0: return reflection(kAlphaT, 1);
    case 1: return reflection(kAlpha1, 0);
    case 2: return reflection(kAlpha2, 0);
    default: throw PreconditionError("simple reflection index out of range");
  }
}

Element compose(const Element& a, const Element& b) {
  Root fl = a.f.apply(b.lam);
  return Element{Root{a.lam.c1 + fl.c1, a.lam.c2 + fl.c2}, a.f * b.f};
}

Element inverse(const Element& w) {
  FiniteMat fi = w.f.inverse();
  Root l = fi.apply(w.lam);
  return Element{-l, fi};
}

Point act(const Element& w, Point p) { return w.f.act(p) + root_vector(w.lam); }

Element from_center(Point p) {
  if (!is_center(p)) throw PreconditionError("point is not an alcove center");
  for (const auto& e : finite_table()) {
    Point d = p - e.m.act(kQ);
    int x = 2 * d.a + d.b, y = d.a + 2 * d.b;
    if (x % 9 == 0 && y % 9 == 0) return Element{Root{x / 9, y / 9}, e.m};
  }
  throw PreconditionError("from_center: no element found");
}

int length(const Element& w) {
  Point c = center(w);
  int total = 0;
  for (Root r : kDirRoots) {
    int a = floor_div(pairing(r, kQ), 3), b = floor_div(pairing(r, c), 3);
    total += a > b ? a - b : b - a;
  }
  return total;
}

std::vector<int> descents(const Element& w, Side side) {
  std::vector<int> out;
  int l = length(w);
  for (int i = 0; i < 3; ++i) {
    Element v = side == Side::Right ? w * simple(i) : simple(i) * w;
    if (length(v) < l) out.push_back(i);
  }
  return out;
}

std::vector<Element> descent_group(const Element& w, Side side) {
  std::vector<int> gens = descents(w, side);
  std::vector<Element> group{identity()};
  std::unordered_set<Element, ElementHash> seen{identity()};
  for (std::size_t i = 0; i < group.size(); ++i)
    for (int g : gens) {
      Element n = group[i] * simple(g);
      if (seen.insert(n).second) group.push_back(n);
    }
  std::sort(group.begin(), group.end(), canonical_less);
  return group;
}

Element word_to_element(const Word& word) {
  Element w;
  for (int i : word) w = w * simple(i);
  return w;
}

Word element_to_word(const Element& w) {
  Word rev;
  Element cur = w;
  int l = length(cur);
  while (l > 0) {
    for (int i = 0; i < 3; ++i) {
      Element n = cur * simple(i);
      int nl = length(n);
      if (nl < l) {
        rev.push_back(i);
        cur = n;
        l = nl;
        break;
      }
    }
  }
  return Word(rev.rbegin(), rev.rend());
}

Word parse_word(std::string_view text) {
  Word w;
  if (text == "e") return w;
  for (char ch : text) {
    if (ch < '0' || ch > '2')
      throw ParseError("invalid word '" + std::string(text) + "': letters must be 0, 1 or 2");
    w.push_back(ch - '0');
  }
  return w;
}

std::string format_word(const Word& word) {
  std::string s;
  for (int i : word) s.push_back(static_cast<char>('0' + i));
  return s;
}

std::string word_of(const Element& w) { return format_word(element_to_word(w)); }

std::string describe(const Element& w) {
  std::ostringstream os;
  os << "(" << w.lam.c1 << ", " << w.lam.c2 << "; " << w.f.name() << ")";
  return os.str();
}

bool canonical_less(const Element& x, const Element& y) {
  int lx = length(x), ly = length(y);
  if (lx != ly) return lx < ly;
  return element_to_word(x) < element_to_word(y);
}

std::string Region::name() const {
  static const char* roman[] = {"", "I", "II", "III", "IV", "V", "VI"};
  switch (kind) {
    case Kind::Identity: return "identity";
    case Kind::Strip: return "strip-" + std::to_string(id);
    default: return roman[id];
  }
}

Region classify(const Element& w) {
  Point c = center(w);
  if (c == kQ) return {Region::Kind::Identity, 0};
  int p1 = c.a, p2 = c.b, pt = c.a + c.b;
  if (p2 > 0 && p2 < 3) return {Region::Kind::Strip, p1 > 0 ? 1 : 4};
  if (p1 > 0 && p1 < 3) return {Region::Kind::Strip, p2 > 0 ? 2 : 5};
  if (pt > 0 && pt < 3) return {Region::Kind::Strip, p1 < 0 ? 3 : 6};
  int id;
  if (p1 > 0 && p2 > 0) id = 1;
  else if (p1 < 0 && p2 > 0) id = pt > 0 ? 2 : 3;
  else if (p1 < 0) id = 4;
  else id = pt < 0 ? 5 : 6;
  return {Region::Kind::Chamber, id};
}

bool is_spiral(const Element& w) { return classify(w).kind != Region::Kind::Chamber; }

bool is_twisted_spiral(const Element& w) {
  if (is_spiral(w)) return false;
  int l = length(w);
  for (int i = 0; i < 3; ++i) {
    Element z = w * simple(i);
    if (length(z) == l - 1 && is_spiral(z) && (l - 1) % 2 == 0) return true;
  }
  return false;
}

int type_of(const Element& w) {
  if (w == identity()) throw PreconditionError("the identity has no type");
  int l = length(w), up = 0;
  for (int i = 0; i < 3; ++i)
    if (length(w * simple(i)) > l) ++up;
  return up;
}

Root strip_root(int strip) {
  static const Root roots[] = {kAlpha2, kAlpha1, kAlphaT};
  if (strip < 1 || strip > 6) throw PreconditionError("strip id out of range");
  return roots[(strip - 1) % 3];
}

std::pair<int, int> strip_letters(int strip) {
  static const std::array<std::pair<int, int>, 7> table = [] {
    std::array<std::pair<int, int>, 7> t{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        Region r = classify(simple(i) * simple(j));
        t[r.id] = {i, j};
      }
    return t;
  }();
  if (strip < 1 || strip > 6) throw PreconditionError("strip id out of range");
  return table[strip];
}

Element spiral_element(int strip, int n) {
  auto [i, j] = strip_letters(strip);
  int letters[3] = {i, j, 3 - i - j};
  Word w;
  for (int t = 0; t < n; ++t) w.push_back(letters[t % 3]);
  return word_to_element(w);
}

Root chamber_root(int chamber) {
  static const Root roots[] = {kAlphaT, kAlpha2, -kAlpha1, -kAlphaT, -kAlpha2, kAlpha1};
  if (chamber < 1 || chamber > 6) throw PreconditionError("chamber id out of range");
  return roots[chamber - 1];
}

Element translate_into_chamber(const Element& w) {
  Region r = classify(w);
  if (r.kind != Region::Kind::Chamber)
    throw PreconditionError("translate_into_chamber needs a non-spiral element");
  return translation(chamber_root(r.id)) * w;
}

std::array<Hyperplane, 2> chamber_walls(int chamber) {
  Point dir = root_vector(chamber_root(chamber));
  auto wall = [&](int strip) {
    Root r = strip_root(strip);
    return Hyperplane{r, pairing(r, dir) > 0 ? 1 : 0};
  };
  return {wall(chamber % 6 + 1), wall(chamber)};
}

int wall_label(const Element& w, const Element& neighbor) {
  Element d = inverse(w) * neighbor;
  for (int i = 0; i < 3; ++i)
    if (d == simple(i)) return i;
  throw PreconditionError("alcoves do not share a wall");
}

std::array<Factorization, 2> spiral_factorizations(const Element& w) {
  Region r = classify(w);
  if (r.kind != Region::Kind::Chamber)
    throw PreconditionError("spiral_factorizations needs a non-spiral element");
  int l = length(w);
  std::array<Factorization, 2> out;
  int strips[2] = {r.id, r.id % 6 + 1};
  for (int s = 0; s < 2; ++s) {
    bool found = false;
    for (int n = l - 1; n >= 1 && !found; --n) {
      Element u = spiral_element(strips[s], n);
      Element v = inverse(u) * w;
      if (length(u) + length(v) == l && is_spiral(v)) {
        out[s] = {u, v};
        found = true;
      }
    }
    if (!found) throw std::logic_error("no spiral factorization for " + word_of(w));
  }
  return out;
}

std::vector<Element> elements_up_to(int max_len) {
  std::vector<Element> all{identity()};
  std::vector<Element> level{identity()};
  for (int l = 1; l <= max_len; ++l) {
    std::unordered_set<Element, ElementHash> next;
    for (const Element& w : level)
      for (int i = 0; i < 3; ++i) {
        Element n = w * simple(i);
        if (length(n) == l) next.insert(n);
      }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end(), canonical_less);
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

Element relabel(const Element& w, const Relabel& sigma) {
  Word word = element_to_word(w);
  for (int& i : word) i = sigma[i];
  return word_to_element(word);
}

}  // namespace sa2
