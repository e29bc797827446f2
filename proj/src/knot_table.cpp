#include "mtrace/knot_table.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mtrace/skein.hpp"

namespace mtrace {

extern const char* const kEmbeddedKnotTable;

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == '\t') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

const char* const kHeader = "name\tstrands\tword\texpected_x2a\tkind\tprovenance";

}  // namespace

void validate_record(const KnotRecord& r) {
  if (r.kind != "knot" && r.kind != "link" && r.kind != "composite")
    throw std::invalid_argument(r.name + ": unknown kind '" + r.kind + "'");
  BraidWord w = r.braid();
  int comps = component_count(w);
  if ((r.kind == "knot" || r.kind == "composite") && comps != 1)
    throw std::invalid_argument(r.name + ": expected one component, braid closes to " + std::to_string(comps));
  if (r.kind == "link" && comps < 2) throw std::invalid_argument(r.name + ": link record closes to a knot");
  if (comps == 1 && alexander_det(w) % 2 == 0) throw std::invalid_argument(r.name + ": knot determinant is even");
}

std::vector<KnotRecord> parse_knot_table(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<KnotRecord> out;
  bool header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != kHeader) throw std::invalid_argument("knot table: bad header");
      header = true;
      continue;
    }
    auto f = split_tabs(line);
    if (f.size() != 6) throw std::invalid_argument("knot table line " + std::to_string(lineno) + ": expected 6 fields");
    KnotRecord r;
    r.name = f[0];
    try {
      r.strands = std::stoi(f[1]);
    } catch (const std::exception&) {
      throw std::invalid_argument("knot table line " + std::to_string(lineno) + ": bad strand count");
    }
    r.word = f[2];
    if (f[3] != "unknown") {
      r.has_expected = true;
      r.expected = ParityScalar::parse(f[3]);
    }
    r.kind = f[4];
    r.provenance = f[5];
    validate_record(r);
    out.push_back(std::move(r));
  }
  if (!header) throw std::invalid_argument("knot table: missing header");
  return out;
}

std::vector<KnotRecord> load_knot_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_knot_table(ss.str());
}

std::string embedded_knot_table_text() { return kEmbeddedKnotTable; }

const std::vector<KnotRecord>& embedded_knot_table() {
  static const std::vector<KnotRecord> table = parse_knot_table(kEmbeddedKnotTable);
  return table;
}

int crossing_number_of(const std::string& name) {
  int total = 0;
  std::size_t pos = 0;
  while (pos < name.size()) {
    std::size_t us = name.find('_', pos);
    if (us == std::string::npos || us == pos) return 0;
    try {
      total += std::stoi(name.substr(pos, us - pos));
    } catch (const std::exception&) {
      return 0;
    }
    std::size_t hash = name.find('#', us);
    if (hash == std::string::npos) break;
    pos = hash + 1;
  }
  return total;
}

}  // namespace mtrace
