#pragma once

#include "sa2/kumar.hpp"
#include "sa2/qstat.hpp"

namespace sa2 {

enum class SchubertClass { Smooth, RationallySmoothOnly, Singular };
std::string class_name(SchubertClass c);

// Alcoves on the two hull edges through w, each listed from w outward.
std::array<std::vector<Point>, 2> attached_edges(const Element& w);
bool has_long_attached_edge(const Element& w);

std::vector<Element> smooth_points(const Element& w);
std::vector<Element> maximal_singular(const Element& w);
// Maximal elements of the Kumar-singular set.
std::vector<Element> maximal_singular_kumar(const Element& w);
std::optional<int> singular_codim(const Element& w);

bool rationally_smooth(const Element& w);
SchubertClass classify_schubert(const Element& w);

struct SmoothRow {
  int length = 0;
  std::string pattern;
  std::vector<Element> members;
};
// Every w with smooth X_w, grouped by length and reduced-word pattern.
std::vector<SmoothRow> enumerate_smooth_varieties();

std::vector<Word> reduced_words(const Element& w);
// Letters renamed a, b, c in order of first appearance.
std::string word_shape(const Word& w);

bool dim_bound_check(const Element& w);

struct LocusRecord {
  Element x;
  int length = 0;
  int q = 0;
  bool nrs = false;
  bool smooth = false;
  int shell = -1;  // -1 for spiral owners
  bool maximal_nrs = false;
  bool maximal_singular = false;
};

struct LocusReport {
  Element owner;
  std::vector<LocusRecord> records;
  SchubertClass classification = SchubertClass::Smooth;
  std::optional<int> nrs_codim, singular_codim;
  int smooth_count = 0;
};

LocusReport locus_report(const Element& w);

}  // namespace sa2
