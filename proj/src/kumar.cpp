#include "sa2/kumar.hpp"

#include <algorithm>
#include <sstream>

#include "sa2/qstat.hpp"

namespace sa2 {

namespace {

using Form = std::array<int, 3>;
using Mat3 = std::array<std::array<int, 3>, 3>;  // column j = image of b_j

Mat3 simple_mat(int i) {
  Mat3 m{};
  for (int j = 0; j < 3; ++j) {
    RealRoot r = simple_root_action(i, simple_root(j));
    for (int k = 0; k < 3; ++k) m[k][j] = r.c[k];
  }
  return m;
}

Mat3 mul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Mat3 identity_mat() {
  Mat3 m{};
  for (int i = 0; i < 3; ++i) m[i][i] = 1;
  return m;
}

int floor_div(int x, int d) { return x >= 0 ? x / d : -((-x + d - 1) / d); }

// Lex order with variable v most significant.
bool lead_less(const Mono& a, const Mono& b, int v) {
  if (a[v] != b[v]) return a[v] < b[v];
  return a < b;
}

std::string mono_str(const Mono& m) {
  std::string s;
  for (int v = 0; v < 3; ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += "b" + std::to_string(v);
    if (m[v] > 1) s += "^" + std::to_string(m[v]);
  }
  return s;
}

Poly form_power(const Form& f, int e) {
  Poly p = Poly::constant(1), lf = Poly::linear(f);
  for (int i = 0; i < e; ++i) p = p * lf;
  return p;
}

}  // namespace

bool RealRoot::is_real() const { return finite().is_root(); }

bool RealRoot::positive() const {
  return c[0] >= 0 && c[1] >= 0 && c[2] >= 0 && (c[0] | c[1] | c[2]) != 0;
}

std::string RealRoot::name() const {
  return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + ")";
}

RealRoot simple_root(int i) {
  RealRoot r;
  r.c[i] = 1;
  return r;
}

RealRoot simple_root_action(int i, RealRoot r) {
  int others = 0;
  for (int j = 0; j < 3; ++j)
    if (j != i) others += r.c[j];
  r.c[i] = others - r.c[i];
  return r;
}

RealRoot element_action(const Element& w, RealRoot r) {
  Word word = element_to_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = simple_root_action(*it, r);
  return r;
}

Element root_to_reflection(RealRoot r) {
  if (!r.is_real() || !r.positive()) throw PreconditionError("not a positive real root: " + r.name());
  Root a = r.finite();
  return a.positive() ? reflection(a, -r.level()) : reflection(-a, r.level());
}

RealRoot reflection_to_root(Root alpha, int k) {
  if (!alpha.positive() || !alpha.is_root()) throw PreconditionError("reflection needs a positive root");
  Root a = k <= 0 ? alpha : -alpha;
  int n = k <= 0 ? -k : k;
  return RealRoot{{n, a.c1 + n, a.c2 + n}};
}

RealRoot root_of_reflection(const Element& r) {
  for (Root rho : kDirRoots) {
    if (!(finite_reflection(rho).f == r.f)) continue;
    int k = rho.c1 != 0 ? r.lam.c1 / rho.c1 : r.lam.c2 / rho.c2;
    if (reflection(rho, k) == r) return reflection_to_root(rho, k);
  }
  throw PreconditionError("element is not a reflection");
}

Poly Poly::constant(const Coef& c) {
  Poly p;
  if (c != 0) p.terms[{0, 0, 0}] = c;
  return p;
}

Poly Poly::linear(const Form& form) {
  Poly p;
  for (int v = 0; v < 3; ++v)
    if (form[v] != 0) {
      Mono m{};
      m[v] = 1;
      p.terms[m] = form[v];
    }
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms) {
    Coef& t = r.terms[m];
    t += c;
    if (t == 0) r.terms.erase(m);
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms) c = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [m1, c1] : terms)
    for (const auto& [m2, c2] : o.terms) {
      Mono m{m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]};
      Coef& t = r.terms[m];
      t += c1 * c2;
    }
  for (auto it = r.terms.begin(); it != r.terms.end();)
    it = it->second == 0 ? r.terms.erase(it) : std::next(it);
  return r;
}

std::optional<Poly> Poly::divide_linear(const Form& form) const {
  int v = 0;
  while (v < 3 && form[v] == 0) ++v;
  if (v == 3) throw std::domain_error("division by the zero form");
  Poly rem = *this, quot;
  while (!rem.is_zero()) {
    auto lead = rem.terms.begin();
    for (auto it = rem.terms.begin(); it != rem.terms.end(); ++it)
      if (lead_less(lead->first, it->first, v)) lead = it;
    Mono m = lead->first;
    if (m[v] == 0 || lead->second % form[v] != 0) return std::nullopt;
    Poly q;
    --m[v];
    q.terms[m] = lead->second / form[v];
    quot = quot + q;
    rem = rem + -(q * linear(form));
  }
  return quot;
}

Poly Poly::apply_simple(int i) const {
  std::array<Poly, 3> sub;
  for (int j = 0; j < 3; ++j) sub[j] = Poly::linear(simple_root_action(i, simple_root(j)).c);
  Poly r;
  for (const auto& [m, c] : terms) {
    Poly t = Poly::constant(c);
    for (int j = 0; j < 3; ++j)
      for (int e = 0; e < m[j]; ++e) t = t * sub[j];
    r = r + t;
  }
  return r;
}

std::string Poly::str() const {
  if (terms.empty()) return "0";
  std::vector<std::pair<Mono, Coef>> ts(terms.begin(), terms.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int da = a.first[0] + a.first[1] + a.first[2], db = b.first[0] + b.first[1] + b.first[2];
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ts) {
    Coef a = c < 0 ? Coef(-c) : c;
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    std::string ms = mono_str(m);
    if (ms.empty()) os << a;
    else if (a == 1) os << ms;
    else os << a << "*" << ms;
    first = false;
  }
  return os.str();
}

RationalNF RationalNF::from_int(long v) {
  RationalNF r;
  r.num_ = Poly::constant(v);
  return r;
}

RationalNF RationalNF::inverse_of(const RealRoot& form) {
  RationalNF r = from_int(1);
  r.add_form(form.c, 1);
  return r;
}

void RationalNF::add_form(Form f, int mult) {
  int v = 0;
  while (v < 3 && f[v] == 0) ++v;
  if (v == 3) throw std::domain_error("zero linear form in a denominator");
  if (f[v] < 0) {
    for (int& x : f) x = -x;
    if (mult % 2) num_ = -num_;
  }
  den_[f] += mult;
}

void RationalNF::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0) {
      auto q = num_.divide_linear(it->first);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

RationalNF RationalNF::operator+(const RationalNF& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  RationalNF r;
  r.den_ = den_;
  for (const auto& [f, m] : o.den_) r.den_[f] = std::max(r.den_[f], m);
  Poly a = num_, b = o.num_;
  for (const auto& [f, m] : r.den_) {
    auto ia = den_.find(f);
    auto ib = o.den_.find(f);
    a = a * form_power(f, m - (ia == den_.end() ? 0 : ia->second));
    b = b * form_power(f, m - (ib == o.den_.end() ? 0 : ib->second));
  }
  r.num_ = a + b;
  r.cancel();
  return r;
}

RationalNF RationalNF::operator-() const {
  RationalNF r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalNF RationalNF::operator*(const RationalNF& o) const {
  RationalNF r;
  r.num_ = num_ * o.num_;
  if (r.num_.is_zero()) return r;
  r.den_ = den_;
  for (const auto& [f, m] : o.den_) r.den_[f] += m;
  r.cancel();
  return r;
}

bool RationalNF::operator==(const RationalNF& o) const {
  Poly a = num_, b = o.num_;
  std::map<Form, int> all = den_;
  for (const auto& [f, m] : o.den_) all[f];
  for (const auto& [f, unused] : all) {
    auto ia = den_.find(f);
    auto ib = o.den_.find(f);
    int ma = ia == den_.end() ? 0 : ia->second, mb = ib == o.den_.end() ? 0 : ib->second;
    int common = std::min(ma, mb);
    a = a * form_power(f, mb - common);
    b = b * form_power(f, ma - common);
  }
  return a == b;
}

RationalNF RationalNF::apply_simple(int i) const {
  RationalNF r;
  r.num_ = num_.apply_simple(i);
  for (const auto& [f, m] : den_) r.add_form(simple_root_action(i, RealRoot{f}).c, m);
  r.cancel();
  return r;
}

std::string RationalNF::str() const {
  if (den_.empty()) return num_.str();
  std::string s = "(" + num_.str() + ") / ";
  for (const auto& [f, m] : den_) {
    s += "(" + Poly::linear(f).str() + ")";
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s;
}

std::vector<RealRoot> psi_set(const Hull& h, const Element& x) {
  if (!h.contains(x)) throw PreconditionError("psi: x is not below w");
  Point p = center(x);
  std::vector<RealRoot> out;
  for (Root r : kDirRoots) {
    int P = pairing(r, p);
    auto [lo, hi] = h.pairing_range(r);
    for (int k = -floor_div(-(lo + P), 6); k <= floor_div(hi + P, 6); ++k)
      if (h.contains(reflection(r, k) * x)) out.push_back(reflection_to_root(r, k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RealRoot> psi_set(const Element& w, const Element& x) { return psi_set(hull_of(w), x); }

std::unordered_map<Element, RationalNF, ElementHash> multiplicity_table(const Word& word) {
  if (length(word_to_element(word)) != static_cast<int>(word.size()))
    throw PreconditionError("word is not reduced: " + format_word(word));
  struct Entry {
    Mat3 m;
    RationalNF c;
  };
  std::array<Mat3, 3> smat{simple_mat(0), simple_mat(1), simple_mat(2)};
  std::unordered_map<Element, Entry, ElementHash> cur{{identity(), {identity_mat(), RationalNF::from_int(1)}}};
  for (int i : word) {
    std::unordered_map<Element, Entry, ElementHash> next;
    for (const auto& [p, e] : cur) {
      RealRoot f{{e.m[0][i], e.m[1][i], e.m[2][i]}};
      if (!f.is_real() || !(f.positive() || (-f).positive()))
        throw std::logic_error("denominator form is not a real root: " + f.name());
      RationalNF t = e.c * RationalNF::inverse_of(f);
      auto stay = next.try_emplace(p, Entry{e.m, RationalNF{}}).first;
      stay->second.c = stay->second.c + t;
      Element ps = p * simple(i);
      auto move = next.try_emplace(ps, Entry{mul(e.m, smat[i]), RationalNF{}}).first;
      move->second.c = move->second.c + -t;
    }
    cur = std::move(next);
  }
  std::unordered_map<Element, RationalNF, ElementHash> out;
  bool flip = word.size() % 2 == 1;
  for (auto& [p, e] : cur)
    if (!e.c.is_zero()) out.emplace(p, flip ? -e.c : e.c);
  return out;
}

RationalNF equivariant_multiplicity(const Element& w, const Element& x, const Word& word) {
  if (!(word_to_element(word) == w)) throw PreconditionError("word does not evaluate to w");
  auto table = multiplicity_table(word);
  auto it = table.find(x);
  return it == table.end() ? RationalNF{} : it->second;
}

namespace {

RationalNF kumar_target(const Hull& h, int lw, const Element& x) {
  RationalNF t = RationalNF::from_int((lw - length(x)) % 2 ? -1 : 1);
  for (const RealRoot& b : psi_set(h, x)) t = t * RationalNF::inverse_of(b);
  return t;
}

}  // namespace

bool kumar_smooth(const Element& w, const Element& x) {
  Hull h = hull_of(w);
  if (!h.contains(x)) throw PreconditionError("kumar_smooth: x is not below w");
  auto table = multiplicity_table(element_to_word(w));
  auto it = table.find(x);
  RationalNF e = it == table.end() ? RationalNF{} : it->second;
  return e == kumar_target(h, length(w), x);
}

std::vector<Element> kumar_smooth_points(const Element& w) {
  Hull h = hull_of(w);
  int lw = length(w);
  auto table = multiplicity_table(element_to_word(w));
  std::vector<Element> out;
  for (const Element& x : interval(h)) {
    auto it = table.find(x);
    RationalNF e = it == table.end() ? RationalNF{} : it->second;
    if (e == kumar_target(h, lw, x)) out.push_back(x);
  }
  return out;
}

namespace {

RationalNF multiplicity(const Element& w, const Element& x) {
  auto table = multiplicity_table(element_to_word(w));
  auto it = table.find(x);
  return it == table.end() ? RationalNF{} : it->second;
}

void require_setup(const Element& w, const Element& x, const Element& ws, const Element& xs) {
  if (!leq(x, w)) throw PreconditionError("setup move: x <= w fails");
  if (length(ws) <= length(w)) throw PreconditionError("setup move: w < ws fails");
  if (leq(xs, w)) throw PreconditionError("setup move: xs not <= w fails");
}

}  // namespace

bool setup_move_check(const Element& w, const Element& x, int s) {
  Element ws = w * simple(s), xs = x * simple(s);
  require_setup(w, x, ws, xs);
  if (!leq(xs, ws)) return false;
  RealRoot xb = element_action(x, simple_root(s));
  std::vector<RealRoot> psi = psi_set(w, x);
  if (std::find(psi.begin(), psi.end(), xb) != psi.end()) return false;
  psi.push_back(xb);
  std::sort(psi.begin(), psi.end());
  if (psi != psi_set(ws, xs)) return false;
  return multiplicity(ws, xs) == RationalNF::inverse_of(xb) * multiplicity(w, x);
}

bool setup_move_check_left(const Element& w, const Element& x, int s) {
  Element sw = simple(s) * w, sx = simple(s) * x;
  require_setup(w, x, sw, sx);
  if (!leq(sx, sw)) return false;
  RealRoot b = simple_root(s);
  std::vector<RealRoot> psi;
  for (const RealRoot& r : psi_set(w, x)) psi.push_back(simple_root_action(s, r));
  if (std::find(psi.begin(), psi.end(), b) != psi.end()) return false;
  psi.push_back(b);
  std::sort(psi.begin(), psi.end());
  if (psi != psi_set(sw, sx)) return false;
  return multiplicity(sw, sx) == RationalNF::inverse_of(b) * multiplicity(w, x).apply_simple(s);
}

}  // namespace sa2
