// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "mtrace/coxeter.hpp"
#include "mtrace/h3.hpp"
#include "mtrace/hecke.hpp"
#include "mtrace/knot_table.hpp"
#include "mtrace/skein.hpp"
#include "mtrace/suites.hpp"
#include "mtrace/tl.hpp"

using namespace mtrace;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string diag;
  void fail(const std::string& why) {
    ok = false;
    add(why);
  }
  void add(const std::string& s) { diag += (diag.empty() ? "" : "; ") + s; }
  void require(const std::vector<CheckItem>& items, const std::set<std::string>& skip = {}) {
    for (const auto& it : items)
      if (!skip.count(it.id) && !it.ok) fail(it.id + (it.detail.empty() ? "" : " (" + it.detail + ")"));
  }
};

int failures = 0;

void criterion(int k, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0 && dt > limit_s) o.fail("took " + std::to_string(dt) + " s, limit " + std::to_string(limit_s) + " s");
  if (!o.ok) ++failures;
  std::ostringstream t;
  t.precision(3);
  t << std::fixed << dt;
  std::cout << (o.ok ? "PASS" : "FAIL") << "  " << k << ". " << title << "  [" << t.str() << " s]";
  if (!o.diag.empty()) std::cout << "  " << o.diag;
  std::cout << std::endl;
}

std::vector<std::string> kAX{"a", "x"};

template <class V>
bool markov_invariant(const std::function<V(const BraidWord&)>& f, std::uint64_t seed, int samples, std::string* where) {
  BraidSampler bs(seed, 5, 12, 1);
  for (int s = 0; s < samples; ++s) {
    BraidWord w = bs.next();
    V base = f(w);
    std::vector<BraidWord> moved{markov_move(w, MarkovMove::StabilizePos), markov_move(w, MarkovMove::StabilizeNeg)};
    if (w.strands >= 2) moved.push_back(markov_move(w, MarkovMove::Conjugate, bs.next_on(w.strands, 3)));
    for (const auto& m : moved)
      if (!(f(m) == base)) {
        *where = w.to_string() + " on " + std::to_string(w.strands) + " strands";
        return false;
      }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::uint64_t seed = 7;
  bool symbolic = false;
  app.add_option("--seed", seed);
  app.add_flag("--symbolic", symbolic, "also compute both Gram determinants symbolically");
  CLI11_PARSE(app, argc, argv);

  const auto& table = embedded_knot_table();

  criterion(1, "knot table at x=2a (knots through 9 crossings, composites, 11-crossing pair)", 300, [&] {
    Outcome o;
    auto rep = run_table();
    int strict = 0;
    for (const auto& it : rep.items) {
      if (!it.strict) continue;
      ++strict;
      if (!it.ok) o.fail(it.id + ": " + it.diagnostic);
    }
    // the named rows must be present with the published values
    std::map<std::string, ParityScalar> need{{"3_1#3_1", 64},   {"3_1#4_1", 208},     {"4_1#4_1", 608},
                                             {"3_1#3_1#3_1", 704}, {"11_280", 22176}, {"11_439", 22048}};
    for (const auto& [name, v] : need) {
      auto r = std::find_if(table.begin(), table.end(), [&](const KnotRecord& k) { return k.name == name; });
      if (r == table.end()) o.fail(name + " missing");
      else if (t0_invariant(r->braid()) != v) o.fail(name + " != " + v.to_string());
    }
    int knots = 0;
    for (const auto& r : table)
      if (r.kind == "knot" && crossing_number_of(r.name) <= 9) ++knots;
    o.add(std::to_string(strict) + " strict rows, " + std::to_string(knots) + " knots through 9 crossings");
    return o;
  });

  criterion(2, "link rows reported with decomposition (report only)", 0, [&] {
    Outcome o;
    auto rep = run_table();
    int links = 0, agree = 0;
    for (const auto& it : rep.items) {
      auto r = std::find_if(table.begin(), table.end(), [&](const KnotRecord& k) { return k.name == it.id; });
      if (r == table.end() || r->kind != "link") continue;
      ++links;
      if (it.ok) ++agree;
      else o.add(it.id + " mismatch: " + it.diagnostic);
      if (it.diagnostic.find("thm ") == std::string::npos || it.diagnostic.find(", H ") == std::string::npos ||
          it.diagnostic.find(", K ") == std::string::npos)
        o.fail(it.id + " diagnostic lacks the decomposition");
    }
    if (links == 0) o.fail("no link rows");
    o.add(std::to_string(agree) + "/" + std::to_string(links) + " link rows agree with the table");
    return o;
  });

  criterion(3, "Kauffman anchors: loop values and figure-eight polynomial", 1, [&] {
    Outcome o;
    auto P = [](const std::string& s) { return LaurentPolynomial::parse(s, kAX); };
    BraidWord unknot2(2, {}), eight = parse_braid("1 -2 1 -2", 3);
    if (markov_trace_pm(unknot2, Variant::Plus) != P("(a - x + 1)*x^-1")) o.fail("t_2^+(1) != (y - x + 1)/x at y = a");
    if (markov_trace_pm(unknot2, Variant::Minus) != P("(-a + x + 1)*x^-1")) o.fail("t_2^-(1) != (y + x + 1)/x at y = -a");
    auto plus = markov_trace_pm(eight, Variant::Plus), minus = markov_trace_pm(eight, Variant::Minus);
    auto want_plus = P("x^3*(a^2 + a) + x^2*(a^2 + 2*a + 1) - x*(1 + a) - (1 + a + a^-1)");
    auto want_minus = P("x^3*(a^2 - a) + x^2*(a^2 + 2*a - 1) - x*(1 - a) - (-1 - a + a^-1)");
    if (plus != want_plus) o.fail("figure-eight (+): computed " + plus.to_string());
    if (minus != want_minus) o.fail("figure-eight (-): computed " + minus.to_string());
    if (!o.ok) {
      auto inv = P("x^3*(a^-2 + a^-1) + x^2*(a^-2 + 2*a^-1 + 1) - x*(1 + a^-1) - (1 + a^-1 + a)");
      if (plus == inv) o.add("(+) equals the expected polynomial with a -> a^-1");
      if (variant_sign_relation(eight)) o.add("(-) equals (+) at (-a, -x) as the sign relation requires");
      o.add("loop values hold");
    }
    return o;
  });

  criterion(4, "H3 identities, R1 images, psi(R1), 3-dimensional module", 60, [&] {
    Outcome o;
    o.require(representation_checks());
    o.require(identity_checks());
    o.require(character_and_module_checks());
    bool corrected = true;
    for (const auto& it : identity_checks())
      if (it.id.find("negated_constant") != std::string::npos) corrected = corrected && it.ok;
    if (!o.ok && corrected) o.add("with the constant of opposite sign both S_- relations hold");
    return o;
  });

  criterion(5, "Schur identity and Gram determinants", 30 + (symbolic ? 60 : 0), [&] {
    Outcome o;
    std::vector<CheckItem> items{schur_identity_check(), gram_check_pit(0, 7, seed), gram_check_pit(1, 7, seed)};
    if (symbolic) {
      items.push_back(gram_check_symbolic(0));
      items.push_back(gram_check_symbolic(1));
    }
    o.require(items);
    for (const auto& it : items) o.add(it.id + " " + it.detail);
    return o;
  });

  criterion(6, "Markov invariance on 300 seeded braids (n <= 5, length <= 12)", 600, [&] {
    Outcome o;
    const int n = 300;
    std::string where;
    if (!markov_invariant<ParityScalar>([](const BraidWord& w) { return t0_invariant(w); }, seed, n, &where))
      o.fail("t0 at " + where);
    if (!markov_invariant<LaurentPolynomial>([](const BraidWord& w) { return homfly_invariant(w); }, seed + 1, n, &where))
      o.fail("t^H at " + where);
    for (Variant v : {Variant::Plus, Variant::Minus})
      if (!markov_invariant<LaurentPolynomial>([v](const BraidWord& w) { return markov_trace_pm(w, v); }, seed + 2, n,
                                               &where))
        o.fail(std::string("t^") + variant_name(v) + " at " + where);
    if (!markov_invariant<ParityScalar>([](const BraidWord& w) { return parity_invariant(w); }, seed + 3, n, &where))
      o.fail("parity at " + where);
    auto cox = coxeter_markov_suite(seed, n);
    o.require(cox);
    o.add("t0, t^H, t^+, t^-, parity; mirror, reversal and t_1(1) in {0, 1, -1, 5}");
    return o;
  });

  criterion(7, "unlink series t0 = (n-2) a^{n+1}, n = 2..8", 0, [&] {
    Outcome o;
    o.require(unlink_suite(8));
    return o;
  });

  criterion(8, "cross-pipeline consistency at a^2 = y = 1, x = 2a", 0, [&] {
    Outcome o;
    o.require(skein_table_suite(table));
    o.require(hecke_table_suite(table));
    for (const auto& it : skein_table_suite(table)) o.add(it.id + " " + it.detail);
    return o;
  });

  criterion(9, "Coxeter extension: braid relations, non-split certificate", 60, [&] {
    Outcome o;
    auto items = coxeter_structure_suite(seed);
    for (const auto& it : items)
      if (it.id.rfind("coxeter.braid_relations.", 0) == 0 || it.id == "coxeter.nonsplit")
        o.require({it});
    auto ns = nonsplit_certificate();
    if (!ns.lambda_free) o.fail("certificate depends on lambda");
    o.add("(s - a)^2 E_1 = " + ns.square_on_e1);
    return o;
  });

  criterion(10, "extended TL: trace families, splitting, Q(lambda), retraction", 0, [&] {
    Outcome o;
    auto props = tl_property_suite(seed, 200);
    for (const auto& it : props)
      if (it.id == "tl.trace_xa.cyclic" || it.id == "tl.trace_x2a.cyclic" || it.id == "tl.trace_xa.relations" ||
          it.id == "tl.trace_x2a.relations")
        o.require({it});
    o.require(split_checks(SplitPoint::Generic, seed));
    o.require(split_checks(SplitPoint::X2A, seed));
    o.require(split_checks(SplitPoint::XA, seed));
    o.require(retraction_check(4));
    return o;
  });

  criterion(11, "writhe parity on 500 braids and t^{dagger dagger} = a^{#L} on the table", 0, [&] {
    Outcome o;
    o.require(braid_parity_suite(seed, 500));
    o.require(dagger_table_suite(table));
    return o;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
