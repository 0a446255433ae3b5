// Command-line front end for the affine A2 Schubert toolkit.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "sa2/serialize.hpp"

using namespace sa2;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerify = 4;

Element element(const std::string& s) { return word_to_element(parse_word(s)); }

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

std::string join(const std::vector<Element>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + (xs[i] == identity() ? "e" : word_of(xs[i]));
  return s.empty() ? "(none)" : s;
}

std::string w_or_e(const Element& w) { return w == identity() ? "e" : word_of(w); }

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<Element> pick(const LocusReport& r, bool LocusRecord::*flag) {
  std::vector<Element> out;
  for (const auto& rec : r.records)
    if (rec.*flag) out.push_back(rec.x);
  return out;
}

Viewport parse_viewport(const std::string& s) {
  Viewport v;
  char c1, c2, c3;
  std::istringstream in(s);
  if (!(in >> v.a_min >> c1 >> v.a_max >> c2 >> v.b_min >> c3 >> v.b_max) || c1 != ',' || c2 != ',' || c3 != ',')
    throw ParseError("viewport must be amin,amax,bmin,bmax");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bruhat hexagons, q-values and singular loci of affine A2 Schubert varieties"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON");

  std::string w_s, x_s;
  auto* order = app.add_subcommand("order", "Compare X <= W (membership and subexpression oracle)");
  order->add_option("X", x_s)->required();
  order->add_option("W", w_s)->required();

  auto* hex = app.add_subcommand("hexagon", "Bruhat hexagon (or degenerate hull) of W");
  hex->add_option("W", w_s)->required();

  auto* q = app.add_subcommand("q", "q-values of W, or the single value at X");
  q->add_option("W", w_s)->required();
  q->add_option("X", x_s);

  auto* nrs_cmd = app.add_subcommand("nrs", "Rationally singular points of X_W");
  nrs_cmd->add_option("W", w_s)->required();
  auto* smooth_cmd = app.add_subcommand("smooth", "Smooth points and maximal singular points of X_W");
  smooth_cmd->add_option("W", w_s)->required();
  auto* classify_cmd = app.add_subcommand("classify", "Smooth / rationally smooth / singular, with codimensions");
  classify_cmd->add_option("W", w_s)->required();

  auto* mult = app.add_subcommand("mult", "Equivariant multiplicity e^W_X and Kumar's verdict");
  mult->add_option("W", w_s)->required();
  mult->add_option("X", x_s)->required();

  int max_length = 12, jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--max-length", max_length, "Length bound")->check(CLI::Range(0, 20));
  verify->add_option("--suite", suite, "hexagon|q|lookup|kumar|loci|all")
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  app.add_subcommand("enumerate-smooth", "All smooth Schubert varieties");

  std::string out_path, layers_s = "lattice,hexagon", labels_s = "none", viewport_s;
  auto* render = app.add_subcommand("render", "SVG alcove diagram");
  render->add_option("W", w_s)->required();
  render->add_option("--out", out_path, "Output SVG file")->required();
  render->add_option("--layers", layers_s,
                     "Comma list: lattice,chambers,hexagon,shells,q-heatmap,smooth,special,diagonals");
  render->add_option("--labels", labels_s, "none|q-values|words");
  render->add_option("--viewport", viewport_s, "amin,amax,bmin,bmax in scaled coordinates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (*order) {
      Element x = element(x_s), w = element(w_s);
      bool fast = leq(x, w), oracle = leq_oracle(x, w);
      if (json)
        print(Json{{"x", w_or_e(x)}, {"w", w_or_e(w)}, {"fast", fast}, {"oracle", oracle}, {"agree", fast == oracle}});
      else
        std::cout << std::boolalpha << fast << " " << oracle << "\n";
    } else if (*hex) {
      Element w = element(w_s);
      if (is_spiral(w)) {
        Hull h = hull_of(w);
        if (json) {
          print(to_json(h));
        } else {
          std::cout << "spiral " << w_or_e(w) << ", degenerate hull vertices: " << join(h.vertices) << "\n";
        }
      } else {
        Hexagon h = hexagon(w);
        if (json) {
          print(to_json(h));
        } else {
          std::cout << "owner " << word_of(w) << "  chamber " << h.region.name() << "  type " << type_of(w) << "\n";
          for (int i = 0; i < 6; ++i)
            std::cout << "w" << i << " = " << w_or_e(h.vertices[i]) << "  edge to w" << (i + 1) % 6 << ": "
                      << h.edge(i).alcoves() << " alcoves\n";
          for (const auto& s : h.special_segments())
            std::cout << "special segment on edge " << s.edge << ": " << s.centers.size() << " alcoves\n";
        }
      }
    } else if (*q) {
      Element w = element(w_s);
      if (!x_s.empty()) {
        Element x = element(x_s);
        if (!leq(x, w)) throw PreconditionError("x is not below w");
        QTag tag = QTag::Brute;
        int v = q_structured(w, x, &tag);
        int b = q_brute(w, x);
        if (json)
          print(Json{{"w", w_or_e(w)}, {"x", w_or_e(x)}, {"q", v}, {"rule", tag_name(tag)}, {"brute", b},
                     {"agree", v == b}});
        else
          std::cout << v << " (" << tag_name(tag) << "; brute force " << b << ")\n";
      } else {
        QTable t = q_table(w);
        if (json) {
          print(to_json(t));
        } else {
          for (const auto& e : t.entries) std::cout << w_or_e(e.x) << "\t" << e.q << "\t" << tag_name(e.tag) << "\n";
        }
      }
    } else if (*nrs_cmd || *smooth_cmd || *classify_cmd) {
      Element w = element(w_s);
      LocusReport r = locus_report(w);
      if (json) {
        Json j = to_json(r);
        if (*nrs_cmd) {
          Json slice{{"owner", j["owner"]}, {"nrs_codimension", j["nrs_codimension"]}};
          slice["nrs"] = Json::array();
          slice["maximal_nrs"] = Json::array();
          for (const auto& rec : r.records) {
            if (rec.nrs) slice["nrs"].push_back(w_or_e(rec.x));
            if (rec.maximal_nrs) slice["maximal_nrs"].push_back(w_or_e(rec.x));
          }
          print(slice);
        } else if (*smooth_cmd) {
          Json slice{{"owner", j["owner"]}, {"smooth_point_count", r.smooth_count},
                     {"singular_codimension", j["singular_codimension"]}};
          slice["smooth"] = Json::array();
          slice["maximal_singular"] = Json::array();
          for (const auto& rec : r.records) {
            if (rec.smooth) slice["smooth"].push_back(w_or_e(rec.x));
            if (rec.maximal_singular) slice["maximal_singular"].push_back(w_or_e(rec.x));
          }
          print(slice);
        } else {
          print(j);
        }
      } else if (*nrs_cmd) {
        std::cout << "nrs points: " << join(pick(r, &LocusRecord::nrs)) << "\n"
                  << "maximal nrs: " << join(pick(r, &LocusRecord::maximal_nrs)) << "\n"
                  << "nrs codimension: " << opt_str(r.nrs_codim) << "\n";
      } else if (*smooth_cmd) {
        std::cout << "smooth points (" << r.smooth_count << "): " << join(pick(r, &LocusRecord::smooth)) << "\n"
                  << "maximal singular: " << join(pick(r, &LocusRecord::maximal_singular)) << "\n"
                  << "singular codimension: " << opt_str(r.singular_codim) << "\n";
      } else {
        std::cout << w_or_e(w) << ": " << class_name(r.classification) << "  nrs codim " << opt_str(r.nrs_codim)
                  << "  singular codim " << opt_str(r.singular_codim) << "  smooth points " << r.smooth_count
                  << "\n";
      }
    } else if (*mult) {
      Element w = element(w_s), x = element(x_s);
      if (!leq(x, w)) throw PreconditionError("x is not below w");
      RationalNF e = equivariant_multiplicity(w, x, element_to_word(w));
      bool smooth = kumar_smooth(w, x);
      if (json) {
        Json j{{"w", w_or_e(w)}, {"x", w_or_e(x)}, {"multiplicity", to_json(e)}, {"kumar_smooth", smooth}};
        Json psi = Json::array();
        for (const RealRoot& b : psi_set(w, x)) psi.push_back(b.name());
        j["psi"] = psi;
        print(j);
      } else {
        std::cout << "e = " << e.str() << "\n" << (smooth ? "smooth" : "singular") << "\n";
      }
    } else if (*verify) {
      auto results = run_suite(suite, options_for_length(max_length, jobs));
      bool ok = true;
      for (const auto& r : results) ok = ok && r.pass;
      if (json) {
        Json a = Json::array();
        for (const auto& r : results) a.push_back(to_json(r));
        print(Json{{"suite", suite}, {"max_length", max_length}, {"pass", ok}, {"results", a}});
      } else {
        for (const auto& r : results) {
          std::cout << (r.pass ? "PASS" : "FAIL") << " [" << r.criterion << "] " << r.name << " (" << r.cases
                    << " cases)";
          if (!r.note.empty()) std::cout << "  " << r.note;
          std::cout << "\n";
          for (const auto& f : r.failures) std::cout << "    " << f << "\n";
        }
        std::cout << (ok ? "all passed" : "failures present") << "\n";
      }
      return ok ? 0 : kExitVerify;
    } else if (app.got_subcommand("enumerate-smooth")) {
      auto rows = enumerate_smooth_varieties();
      if (json) {
        print(to_json(rows));
      } else {
        std::size_t total = 0;
        for (const auto& r : rows) {
          std::cout << r.length << "\t" << r.pattern << "\t" << r.members.size() << "\t" << join(r.members) << "\n";
          total += r.members.size();
        }
        std::cout << "total\t" << total << "\n";
      }
    } else if (*render) {
      RenderSpec spec;
      spec.layers.clear();
      std::stringstream ls(layers_s);
      for (std::string item; std::getline(ls, item, ',');)
        if (!item.empty()) spec.layers.insert(parse_layer(item));
      spec.labels = parse_label_mode(labels_s);
      if (!viewport_s.empty()) spec.viewport = parse_viewport(viewport_s);
      Element w = element(w_s);
      std::string svg = render_svg(spec, make_payload(w, spec));
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw PreconditionError("cannot write " + out_path);
      out << svg;
      if (json) print(Json{{"out", out_path}, {"bytes", svg.size()}});
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return 0;
}
