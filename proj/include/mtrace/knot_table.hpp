#pragma once

#include <string>
#include <vector>

#include "mtrace/braid.hpp"
#include "mtrace/parity_scalar.hpp"

namespace mtrace {

struct KnotRecord {
  std::string name;
  int strands = 1;
  std::string word;
  bool has_expected = false;
  ParityScalar expected;  // value at x = 2a
  std::string kind;       // knot | link | composite
  std::string provenance;

  BraidWord braid() const { return parse_braid(word, strands); }
  // Records marked optional are computed and reported but never gate.
  bool optional() const { return provenance.rfind("optional", 0) == 0; }
};

// Parses the TSV format (header line required); validates every record.
std::vector<KnotRecord> parse_knot_table(const std::string& text);
std::vector<KnotRecord> load_knot_table(const std::string& path);
const std::vector<KnotRecord>& embedded_knot_table();
std::string embedded_knot_table_text();

// Parse errors, component count against kind, odd determinant for knots.
void validate_record(const KnotRecord& r);

// Crossing number from a Rolfsen-style name ("8_17" -> 8, "3_1#4_1" -> 7);
// 0 when the name has no such prefix.
int crossing_number_of(const std::string& name);

}  // namespace mtrace
