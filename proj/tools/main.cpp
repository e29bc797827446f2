#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>

#include "mtrace/braid.hpp"
#include "mtrace/coxeter.hpp"
#include "mtrace/hecke.hpp"
#include "mtrace/skein.hpp"
#include "mtrace/suites.hpp"

using namespace mtrace;

namespace {

// "a=1/2,x=3" -> values
std::map<std::string, Rational> parse_point(const std::string& text) {
  std::map<std::string, Rational> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected name=value in --at: " + part);
    out[part.substr(0, eq)] = parse_rational(part.substr(eq + 1));
  }
  return out;
}

ThmTraceConfig thm_config(const std::string& variant) {
  ThmTraceConfig c;
  if (variant == "printed") c.printed_exponent = true;
  else if (!variant.empty() && variant != "derived") throw std::invalid_argument("unknown variant: " + variant);
  return c;
}

std::string kauffman_value(const BraidWord& w, Variant v, const std::string& at) {
  if (at.empty()) return markov_trace_pm(w, v).to_string();
  if (at == "x2a") return kauffman_at_x2a(w).to_string();
  auto pt = parse_point(at);
  if (!pt.count("a") || !pt.count("x")) throw std::invalid_argument("--at needs a and x");
  return rational_to_string(markov_trace_pm_at(w, v, pt["a"], pt["x"]));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Markov traces on braid closures"};
  app.require_subcommand(1);

  std::string braid, which = "t0x2a", variant, at, suite = "all", input, column = "x2a";
  int strands = 0, pit_points = 7;
  std::uint64_t seed = 1;
  bool timing = false, symbolic = false;

  auto* inv = app.add_subcommand("invariant", "evaluate an invariant of a braid closure");
  inv->add_option("--braid", braid, "letters, e.g. \"1 -2 1\"")->required();
  inv->add_option("--strands", strands, "strand count")->required();
  inv->add_option("--which", which, "t0x2a | hecke | kauffman+ | kauffman- | parity");
  inv->add_option("--variant", variant, "t0x2a level-descent constant: derived | printed");
  inv->add_option("--at", at, "x2a, or a point such as a=1,x=3 (kauffman)");

  auto* kf = app.add_subcommand("kauffman", "Kauffman trace of a braid closure");
  kf->add_option("--braid", braid)->required();
  kf->add_option("--strands", strands)->required();
  kf->add_option("--variant", variant, "+ | -")->required();
  kf->add_option("--at", at, "x2a, or a point such as a=1,x=3");

  auto* tb = app.add_subcommand("table", "reproduce the x=2a table");
  tb->add_option("--input", input, "TSV file (default: embedded table)");
  tb->add_option("--column", column, "x2a");
  tb->add_flag("--timing", timing);

  auto* vf = app.add_subcommand("verify", "run verification suites");
  vf->add_option("--suite", suite, "h3 | skein | hecke | coxeter | tl | braid | all");
  vf->add_option("--seed", seed);
  vf->add_option("--pit-points", pit_points);
  vf->add_flag("--symbolic", symbolic, "symbolic Gram determinants");
  vf->add_flag("--timing", timing);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*inv) {
      BraidWord w = parse_braid(braid, strands);
      if (which == "t0x2a") {
        std::cout << t0_invariant(w, thm_config(variant)) << "\n";
      } else if (which == "hecke") {
        std::cout << (at == "x2a" ? homfly_at_x2a(w).to_string() : homfly_invariant(w).to_string()) << "\n";
      } else if (which == "kauffman+" || which == "kauffman-" || which == "kauffman\u2212") {
        std::cout << kauffman_value(w, which == "kauffman+" ? Variant::Plus : Variant::Minus, at) << "\n";
      } else if (which == "parity") {
        std::cout << parity_invariant(w) << "\n";
      } else {
        throw std::invalid_argument("unknown invariant: " + which);
      }
      return 0;
    }
    if (*kf) {
      BraidWord w = parse_braid(braid, strands);
      std::cout << kauffman_value(w, parse_variant(variant), at) << "\n";
      return 0;
    }
    if (*tb) {
      auto rep = run_table(TableOptions{input, column});
      std::cout << rep.render(timing);
      return rep.ok() ? 0 : 1;
    }
    if (*vf) {
      VerifyOptions opt;
      opt.seed = seed;
      opt.pit_points = pit_points;
      opt.symbolic = symbolic;
      auto rep = run_verify(suite, opt);
      std::cout << rep.render(timing);
      return rep.ok() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
