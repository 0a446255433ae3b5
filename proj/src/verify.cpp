#include "sa2/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

namespace sa2 {

namespace {

constexpr std::size_t kMaxFailures = 5;

struct Partial {
  long cases = 0;
  std::vector<std::string> failures;
  void fail(const std::string& s) {
    if (failures.size() < kMaxFailures) failures.push_back(s);
  }
};

// Runs f over items on a worker pool; results come back in input order.
template <class F>
std::vector<Partial> par_map(const std::vector<Element>& items, int jobs, F f) {
  std::vector<Partial> out(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < items.size();) out[i] = f(items[i]);
  };
  int n = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

CheckResult merge(int criterion, std::string name, const std::vector<Partial>& parts) {
  CheckResult r;
  r.criterion = criterion;
  r.name = std::move(name);
  for (const Partial& p : parts) {
    r.cases += p.cases;
    for (const auto& f : p.failures) {
      r.pass = false;
      if (r.failures.size() < kMaxFailures) r.failures.push_back(f);
    }
  }
  return r;
}

void absorb(CheckResult& r, const Partial& p) {
  r.cases += p.cases;
  for (const auto& f : p.failures) {
    r.pass = false;
    if (r.failures.size() < kMaxFailures) r.failures.push_back(f);
  }
}

std::vector<Element> select(int max_len, bool want_spiral) {
  std::vector<Element> out;
  for (const Element& w : elements_up_to(max_len))
    if (is_spiral(w) == want_spiral) out.push_back(w);
  return out;
}

std::string pair_str(const Element& w, const Element& x) {
  return "w=" + word_of(w) + " x=" + word_of(x);
}

template <class T>
std::string str(const T& v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

std::string list_str(const std::vector<Element>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + word_of(xs[i]);
  return s + "}";
}

bool has_shape(const Element& w, const std::string& shape) {
  for (const Word& r : reduced_words(w))
    if (word_shape(r) == shape) return true;
  return false;
}

bool same_set(std::vector<Element> a, std::vector<Element> b) {
  std::sort(a.begin(), a.end(), canonical_less);
  std::sort(b.begin(), b.end(), canonical_less);
  return a == b;
}

RationalNF lookup_mult(const std::unordered_map<Element, RationalNF, ElementHash>& t, const Element& x) {
  auto it = t.find(x);
  return it == t.end() ? RationalNF{} : it->second;
}

}  // namespace

VerifyOptions options_for_length(int n, int jobs) {
  VerifyOptions o;
  o.max_length = n;
  o.translation_length = std::min(o.translation_length, n);
  o.kumar_length = std::min(o.kumar_length, n);
  o.move_length = std::min(o.move_length, n);
  o.jobs = jobs;
  return o;
}

int inversion_count(const Element& w) {
  int lw = length(w), n = 0;
  Point c = center(w);
  for (Root a : kDirRoots) {
    int lo = std::min(pairing(a, kQ), pairing(a, c)), hi = std::max(pairing(a, kQ), pairing(a, c));
    for (int k = lo / 3 - 1; k <= hi / 3 + 1; ++k)
      if (length(reflection(a, k) * w) < lw) ++n;
  }
  return n;
}

bool rationally_smooth_by_cases(const Element& w) {
  int l = length(w);
  if (l <= 3) return true;
  Region r = classify(w);
  if (l == 4 && r.even() && has_shape(w, "abac")) return true;
  if (l == 4 && r.odd() && has_shape(w, "abcb")) return true;
  return is_twisted_spiral(w);
}

Element generic_type1_even_witness() {
  for (int n = 1;; ++n)
    for (const Element& w : elements_up_to(n)) {
      if (length(w) != n || is_spiral(w) || type_of(w) != 1 || !classify(w).even()) continue;
      Hexagon h = hexagon(w);
      bool all_long = true;
      for (int i = 0; i < 6; ++i) all_long = all_long && h.edge(i).alcoves() >= 6;
      if (all_long) return w;
    }
}

CheckResult check_hexagon_intervals(const VerifyOptions& o) {
  auto parts = par_map(select(o.max_length, false), o.jobs, [](const Element& w) {
    Partial p;
    p.cases = 1;
    auto fast = interval(w);
    ElementSet oracle = oracle_interval(w);
    if (fast.size() != oracle.size() ||
        !std::all_of(fast.begin(), fast.end(), [&](const Element& x) { return oracle.count(x) > 0; }))
      p.fail("w=" + word_of(w) + " hull " + str(fast.size()) + " oracle " + str(oracle.size()));
    return p;
  });
  return merge(1, "hexagon intervals equal subexpression oracle", parts);
}

CheckResult check_spiral_intervals(const VerifyOptions& o) {
  auto parts = par_map(select(o.max_length, true), o.jobs, [](const Element& w) {
    Partial p;
    p.cases = 1;
    auto fast = interval(w);
    ElementSet oracle = oracle_interval(w);
    if (fast.size() != oracle.size() ||
        !std::all_of(fast.begin(), fast.end(), [&](const Element& x) { return oracle.count(x) > 0; }))
      p.fail("w=" + word_of(w) + " hull " + str(fast.size()) + " oracle " + str(oracle.size()));
    return p;
  });
  return merge(2, "spiral hulls equal subexpression oracle", parts);
}

CheckResult check_q_structured(const VerifyOptions& o) {
  auto parts = par_map(select(o.max_length, false), o.jobs, [](const Element& w) {
    Partial p;
    QStructured qs(w);
    Hull h = hull_of(w);
    int lw = length(w);
    for (const Element& x : interval(h)) {
      ++p.cases;
      int a = qs.value(x), b = q_brute(h, lw, x);
      if (a != b) p.fail(pair_str(w, x) + " structured " + str(a) + " brute " + str(b));
    }
    return p;
  });
  return merge(3, "structured q equals brute-force q", parts);
}

CheckResult check_translation_move(const VerifyOptions& o) {
  auto parts = par_map(select(o.translation_length, false), o.jobs, [](const Element& w) {
    Partial p;
    Element w2 = translation(chamber_root(classify(w).id)) * w;
    ++p.cases;
    if (length(w2) != length(w) + 4)
      p.fail("w=" + word_of(w) + " length of translate " + str(length(w2)));
    Hull h = hull_of(w), h2 = hull_of(w2);
    int l1 = length(w), l2 = length(w2);
    for (const Element& x : interval(h)) {
      ++p.cases;
      int a = q_brute(h, l1, x), b = q_brute(h2, l2, x);
      if (b != a + 2) p.fail(pair_str(w, x) + " q " + str(a) + " after translation " + str(b));
    }
    return p;
  });
  return merge(4, "translation adds 4 to length and 2 to q", parts);
}

CheckResult check_heredity_lookup(const VerifyOptions& o) {
  auto parts = par_map(elements_up_to(o.max_length), o.jobs, [](const Element& w) {
    Partial p;
    ++p.cases;
    if (!lookup_holds(w)) p.fail("lookup fails for w=" + word_of(w));
    if (is_spiral(w)) return p;
    Hull h = hull_of(w);
    int lw = length(w);
    auto xs = interval(h);
    std::vector<int> q(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) q[i] = q_brute(h, lw, xs[i]);
    auto bad = nrs_points(w);
    ElementSet bad_set(bad.begin(), bad.end());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      ++p.cases;
      if ((q[i] > 0) != (bad_set.count(xs[i]) > 0))
        p.fail(pair_str(w, xs[i]) + " nrs disagrees with q>0");
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < xs.size(); ++j)
        if (q[j] == 0 && length(xs[j]) < length(xs[i]) && leq(xs[j], xs[i]))
          p.fail(pair_str(w, xs[i]) + " q>0 but y=" + word_of(xs[j]) + " has q=0");
    }
    return p;
  });
  return merge(5, "q heredity, nrs iff q>0, lookup", parts);
}

CheckResult check_kumar(const VerifyOptions& o) {
  auto parts = par_map(elements_up_to(o.kumar_length), o.jobs, [](const Element& w) {
    Partial p;
    ++p.cases;
    auto sp = smooth_points(w), kp = kumar_smooth_points(w);
    if (!same_set(sp, kp))
      p.fail("w=" + word_of(w) + " closed form " + str(sp.size()) + " Kumar " + str(kp.size()));
    auto words = reduced_words(w);
    auto t1 = multiplicity_table(words.front()), t2 = multiplicity_table(words.back());
    for (const Element& x : interval(w)) {
      ++p.cases;
      if (!(lookup_mult(t1, x) == lookup_mult(t2, x)))
        p.fail(pair_str(w, x) + " multiplicity depends on the reduced word");
    }
    return p;
  });
  return merge(6, "smooth points equal Kumar scan; word independence", parts);
}

CheckResult check_moves(const VerifyOptions& o) {
  auto parts = par_map(elements_up_to(o.move_length), o.jobs, [&](const Element& w) {
    Partial p;
    int lw = length(w);
    auto xs = interval(w);
    auto smooth = kumar_smooth_points(w);
    ElementSet smooth_set(smooth.begin(), smooth.end());
    auto bad = nrs_points(w);
    ElementSet bad_set(bad.begin(), bad.end());
    QTable qt = q_table(w);
    for (const Element& x : xs)
      for (int s = 0; s < 3; ++s) {
        for (bool left : {false, true}) {
          bool ok;
          try {
            ok = left ? setup_move_check_left(w, x, s) : setup_move_check(w, x, s);
          } catch (const PreconditionError&) {
            continue;
          }
          ++p.cases;
          if (!ok) p.fail(pair_str(w, x) + " s=" + str(s) + (left ? " left" : " right") + " setup identity");
          Element w2 = left ? simple(s) * w : w * simple(s);
          Element x2 = left ? simple(s) * x : x * simple(s);
          if (kumar_smooth(w2, x2) != (smooth_set.count(x) > 0))
            p.fail(pair_str(w, x) + " s=" + str(s) + " setup move changes smoothness");
        }
      }
    // Simple moves by the right and left descent groups.
    auto near = elements_up_to(lw + 3);
    ElementSet below(xs.begin(), xs.end());
    for (Side side : {Side::Right, Side::Left})
      for (const Element& u : descent_group(w, side)) {
        auto mv = [&](const Element& x) { return side == Side::Right ? x * u : u * x; };
        for (const Element& x : near) {
          ++p.cases;
          if ((below.count(x) > 0) != (below.count(mv(x)) > 0))
            p.fail(pair_str(w, x) + " u=" + word_of(u) + " order not preserved");
        }
        for (const Element& x : xs) {
          Element y = mv(x);
          ++p.cases;
          if (qt.find(x) != qt.find(y)) p.fail(pair_str(w, x) + " u=" + word_of(u) + " q differs");
          if ((bad_set.count(x) > 0) != (bad_set.count(y) > 0))
            p.fail(pair_str(w, x) + " u=" + word_of(u) + " rational smoothness differs");
          if ((smooth_set.count(x) > 0) != (smooth_set.count(y) > 0))
            p.fail(pair_str(w, x) + " u=" + word_of(u) + " smoothness differs");
        }
      }
    return p;
  });
  return merge(7, "setup and simple move identities", parts);
}

CheckResult check_enumerations(const VerifyOptions& o) {
  CheckResult r;
  r.criterion = 8;
  r.name = "smooth and small-edge enumerations, rational smoothness cases";
  Partial p;

  auto rows = enumerate_smooth_varieties();
  std::map<int, int> per_len;
  int total = 0;
  for (const auto& row : rows) {
    per_len[row.length] += static_cast<int>(row.members.size());
    total += static_cast<int>(row.members.size());
  }
  ++p.cases;
  if (total != 31) p.fail("smooth varieties: " + str(total) + " expected 31");
  const int expect[] = {1, 3, 6, 9, 6, 6};
  for (int l = 0; l < 6; ++l) {
    ++p.cases;
    if (per_len[l] != expect[l])
      p.fail("smooth varieties of length " + str(l) + ": " + str(per_len[l]) + " expected " + str(expect[l]));
  }

  auto all = elements_up_to(o.max_length);
  auto parts = par_map(all, o.jobs, [](const Element& w) {
    Partial q;
    ++q.cases;
    SchubertClass c = classify_schubert(w);
    bool rs = c != SchubertClass::Singular;
    if (rs != rationally_smooth_by_cases(w))
      q.fail("w=" + word_of(w) + " rational smoothness disagrees with the four cases");
    if (c == SchubertClass::Smooth && length(w) > 5) q.fail("w=" + word_of(w) + " smooth beyond length 5");
    if (c == SchubertClass::Smooth && length(w) == 4 && !has_shape(w, classify(w).even() ? "abac" : "abcb"))
      q.fail("w=" + word_of(w) + " length-4 smooth class mismatch");
    if (c == SchubertClass::Smooth && length(w) == 5 && !has_shape(w, "abcac"))
      q.fail("w=" + word_of(w) + " length-5 smooth class mismatch");
    if (c == SchubertClass::RationallySmoothOnly && (!is_twisted_spiral(w) || length(w) < 7))
      q.fail("w=" + word_of(w) + " rationally smooth only but not a long twisted spiral");
    return q;
  });
  for (const auto& q : parts) {
    p.cases += q.cases;
    for (const auto& f : q.failures) p.fail(f);
  }

  int small = 0, small_singular = 0, small_spiral = 0;
  for (const Element& w : all) {
    if (has_long_attached_edge(w)) continue;
    ++small;
    if (classify_schubert(w) == SchubertClass::Singular) {
      ++small_singular;
      if (is_spiral(w)) ++small_spiral;
    }
  }
  ++p.cases;
  if (small != 64 || small_singular != 33)
    p.fail("small-edge family: " + str(small) + " elements, " + str(small_singular) +
           " singular; expected 64 and 33");
  r.note = "small-edge family " + str(small) + " (" + str(small_singular) + " singular, " +
           str(small_spiral) + " of them spiral)";
  absorb(r, p);
  return r;
}

CheckResult check_loci(const VerifyOptions& o) {
  CheckResult r;
  r.criterion = 9;
  r.name = "maximal nrs and singular points, codimensions, smooth-point bounds";

  auto all = elements_up_to(o.max_length);
  auto parts = par_map(all, o.jobs, [&](const Element& w) {
    Partial p;
    int lw = length(w);
    bool spiral = is_spiral(w);
    if (!spiral && lw >= 6) {
      ++p.cases;
      auto a = maximal_nrs(w), b = maximal_nrs_generic(w);
      if (!same_set(a, b)) p.fail("w=" + word_of(w) + " maximal nrs " + list_str(a) + " scan " + list_str(b));
    }
    if (lw <= o.kumar_length) {
      ++p.cases;
      auto a = maximal_singular(w), b = maximal_singular_kumar(w);
      if (!same_set(a, b))
        p.fail("w=" + word_of(w) + " maximal singular " + list_str(a) + " Kumar " + list_str(b));
    }
    SchubertClass c = classify_schubert(w);
    if (c != SchubertClass::Smooth && has_long_attached_edge(w)) {
      ++p.cases;
      auto cd = singular_codim(w);
      if (cd != 2) p.fail("w=" + word_of(w) + " long edge but singular codim " + (cd ? str(*cd) : "none"));
    }
    if (c == SchubertClass::Singular) {
      ++p.cases;
      auto nc = nrs_codimension(w);
      if (!nc || (*nc != 3 && *nc != 4))
        p.fail("w=" + word_of(w) + " nrs codim " + (nc ? str(*nc) : "none"));
    }
    auto sp = smooth_points(w);
    ++p.cases;
    if (sp.size() > 36) p.fail("w=" + word_of(w) + " has " + str(sp.size()) + " smooth points");
    ++p.cases;
    if (!dim_bound_check(w)) p.fail("w=" + word_of(w) + " smooth point below the length bound");
    for (const Element& x : sp) {
      ++p.cases;
      if (length(x) <= lw - 7) p.fail(pair_str(w, x) + " smooth in codimension >= 7");
    }
    return p;
  });
  for (const auto& p : parts) absorb(r, p);

  // Generic witness with exactly 36 smooth points, confirmed by Kumar.
  Partial p;
  Element g = generic_type1_even_witness();
  ++p.cases;
  auto gs = smooth_points(g);
  if (gs.size() != 36) p.fail("witness " + word_of(g) + " has " + str(gs.size()) + " smooth points");
  if (!same_set(gs, kumar_smooth_points(g))) p.fail("witness " + word_of(g) + " smooth points disagree with Kumar");

  // Sharpness of each length bound.
  struct Cls {
    int type;
    bool even;
    int slack;
    const char* name;
  };
  for (Cls k : {Cls{1, true, 6, "Type 1 even"}, Cls{1, false, 5, "Type 1 odd"}, Cls{2, true, 5, "Type 2 even"},
                Cls{2, false, 4, "Type 2 odd"}}) {
    ++p.cases;
    bool found = false;
    for (const Element& w : all) {
      if (is_spiral(w) || type_of(w) != k.type || classify(w).even() != k.even || length(w) < 7) continue;
      for (const Element& x : smooth_points(w))
        if (length(x) == length(w) - k.slack) found = true;
      if (found) {
        r.note += std::string(r.note.empty() ? "" : "; ") + k.name + " bound attained by " + word_of(w);
        break;
      }
    }
    if (!found) p.fail(std::string("no sharpness witness for ") + k.name);
  }
  r.note += "; 36-point witness " + word_of(g);
  absorb(r, p);
  return r;
}

CheckResult check_inversions(const VerifyOptions& o) {
  auto parts = par_map(elements_up_to(o.max_length), o.jobs, [](const Element& w) {
    Partial p;
    ++p.cases;
    int n = inversion_count(w);
    if (n != length(w)) p.fail("w=" + word_of(w) + " inversions " + str(n) + " length " + str(length(w)));
    ++p.cases;
    if (q_brute(w, w) != 0) p.fail("w=" + word_of(w) + " q at the top is nonzero");
    return p;
  });
  return merge(10, "inversion count equals length", parts);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hexagon", "q", "lookup", "kumar", "loci", "all"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& o) {
  std::vector<CheckResult> out;
  bool all = suite == "all";
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw ParseError("unknown suite: " + suite);
  if (all || suite == "hexagon") {
    out.push_back(check_hexagon_intervals(o));
    out.push_back(check_spiral_intervals(o));
  }
  if (all || suite == "q") {
    out.push_back(check_q_structured(o));
    out.push_back(check_translation_move(o));
  }
  if (all || suite == "lookup") out.push_back(check_heredity_lookup(o));
  if (all || suite == "kumar") {
    out.push_back(check_kumar(o));
    out.push_back(check_moves(o));
  }
  if (all || suite == "loci") {
    out.push_back(check_enumerations(o));
    out.push_back(check_loci(o));
  }
  if (all || suite == "q") out.push_back(check_inversions(o));
  std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.criterion < b.criterion; });
  return out;
}

}  // namespace sa2
