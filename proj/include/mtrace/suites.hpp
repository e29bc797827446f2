#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mtrace/check.hpp"
#include "mtrace/knot_table.hpp"

namespace mtrace {

struct SuiteItem {
  std::string id;
  bool ok = false;
  bool strict = true;  // non-strict items are reported but never gate
  double elapsed = 0;  // seconds
  std::string diagnostic;
};

struct SuiteReport {
  std::string name;
  std::vector<SuiteItem> items;

  bool ok() const;
  int count(bool passed) const;
  // Deterministic unless timing is requested.
  std::string render(bool timing = false) const;
  void append(const SuiteReport& o);
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int pit_points = 7;
  bool symbolic = false;  // symbolic Gram determinants
};

// suite: h3 | skein | hecke | coxeter | tl | braid | all
SuiteReport run_verify(const std::string& suite, const VerifyOptions& opt = {});

struct TableOptions {
  std::string input;  // empty: embedded table
  std::string column = "x2a";
};
SuiteReport run_table(const TableOptions& opt = {});

// Property suites, exposed for the tests.
std::vector<CheckItem> braid_parity_suite(std::uint64_t seed, int samples = 500);
std::vector<CheckItem> dagger_table_suite(const std::vector<KnotRecord>& table);
std::vector<CheckItem> skein_markov_suite(std::uint64_t seed, int samples = 100);
std::vector<CheckItem> skein_table_suite(const std::vector<KnotRecord>& table);
std::vector<CheckItem> hecke_suite(std::uint64_t seed, int samples = 200);
std::vector<CheckItem> hecke_table_suite(const std::vector<KnotRecord>& table);
std::vector<CheckItem> coxeter_markov_suite(std::uint64_t seed, int samples = 300);
std::vector<CheckItem> coxeter_structure_suite(std::uint64_t seed);
std::vector<CheckItem> unlink_suite(int max_strands = 8);
std::vector<CheckItem> tl_property_suite(std::uint64_t seed, int samples = 200);

}  // namespace mtrace
