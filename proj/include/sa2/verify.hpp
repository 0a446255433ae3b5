#pragma once

#include <string>
#include <vector>

#include "sa2/loci.hpp"

namespace sa2 {

struct VerifyOptions {
  int max_length = 12;       // order, q, lookup suites
  int translation_length = 10;
  int kumar_length = 9;
  int move_length = 8;
  int jobs = 1;
};

// Caps every bound at n (the Kumar bounds keep their own smaller defaults).
VerifyOptions options_for_length(int n, int jobs = 1);

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool pass = true;
  long cases = 0;
  std::vector<std::string> failures;  // first few only
  std::string note;
};

CheckResult check_hexagon_intervals(const VerifyOptions& o);
CheckResult check_spiral_intervals(const VerifyOptions& o);
CheckResult check_q_structured(const VerifyOptions& o);
CheckResult check_translation_move(const VerifyOptions& o);
CheckResult check_heredity_lookup(const VerifyOptions& o);
CheckResult check_kumar(const VerifyOptions& o);
CheckResult check_moves(const VerifyOptions& o);
CheckResult check_enumerations(const VerifyOptions& o);
CheckResult check_loci(const VerifyOptions& o);
CheckResult check_inversions(const VerifyOptions& o);

// hexagon, q, lookup, kumar, loci or all.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& o);
const std::vector<std::string>& suite_names();

// Number of reflections r with rw < w.
int inversion_count(const Element& w);

// The four-case description of rationally smooth X_w.
bool rationally_smooth_by_cases(const Element& w);

// Some Type 1 even-chamber w whose hexagon edges all hold >= 6 alcoves.
Element generic_type1_even_witness();

}  // namespace sa2
