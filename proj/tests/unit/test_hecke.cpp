#include <doctest.h>

#include "mtrace/hecke.hpp"
#include "mtrace/knot_table.hpp"
#include "mtrace/skein.hpp"
#include "mtrace/suites.hpp"

using namespace mtrace;

namespace {

const std::vector<std::string> kXY{"x", "y"};
LaurentPolynomial XY(const std::string& s) { return LaurentPolynomial::parse(s, kXY); }

// Conway polynomial: at y = -1 the generators satisfy T - T^-1 = x.
LaurentPolynomial conway(const BraidWord& w) {
  return homfly_invariant(w).substitute("y", LaurentPolynomial::constant(kXY, -1));
}

}  // namespace

TEST_CASE("reduced words and coset decomposition") {
  Permutation p({2, 0, 3, 1});
  auto rw = reduced_word(p);
  CHECK(int(rw.size()) == p.inversions());
  CHECK(braid_permutation(BraidWord(4, rw)) == p);
  auto [u, k] = last_strand_decomposition(p);
  CHECK(u.size() == 3);
  CHECK(k >= 1);
  CHECK(extend(Permutation({1, 0}), 4) == Permutation({1, 0, 2, 3}));
  CHECK(transposition(3, 2) == Permutation({0, 2, 1}));
}

TEST_CASE("hand-computed traces") {
  CHECK(homfly_invariant(BraidWord(1, {})) == XY("1"));
  CHECK(homfly_invariant(BraidWord(2, {})) == XY("(y + 1)*x^-1"));
  CHECK(homfly_invariant(parse_braid("1", 2)) == XY("1"));
  CHECK(homfly_invariant(parse_braid("-1", 2)) == XY("1"));
  // T^2 = x T - y
  CHECK(homfly_invariant(parse_braid("1 1", 2)) == XY("x - y*(y + 1)*x^-1"));
  CHECK(homfly_invariant(parse_braid("1 1 1", 2)) == XY("x^2 - 2*y - y^2"));
}

TEST_CASE("Conway polynomial at y = -1") {
  CHECK(conway(parse_braid("1 1 1", 2)) == XY("1 + x^2"));
  CHECK(conway(parse_braid("1 -2 1 -2", 3)) == XY("1 - x^2"));
  CHECK(conway(parse_braid("1 1 1 1 1", 2)) == XY("1 + 3*x^2 + x^4"));
  CHECK(conway(parse_braid("1 1", 2)) == XY("x"));
  CHECK(conway(BraidWord(2, {})).is_zero());
}

TEST_CASE("determinant from the Conway polynomial matches Burau") {
  // det = |nabla(2i)|; knots have even Conway polynomials
  int checked = 0;
  for (const auto& r : embedded_knot_table()) {
    if (r.kind != "knot" || crossing_number_of(r.name) > 9) continue;
    BraidWord w = r.braid();
    Rational v = 0;
    auto nabla = conway(w);
    for (const auto& [e, c] : nabla.terms()) {
      REQUIRE(e[0] % 2 == 0);
      Rational pw = 1;
      for (int k = 0; k < e[0] / 2; ++k) pw *= -4;
      v += c * pw;
    }
    CAPTURE(r.name);
    CHECK(abs(v) == alexander_det(w));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("algebra structure") {
  Hecke<LaurentPolynomial> h(generic_hecke_scalars());
  BraidSampler s(4, 4, 5, 2);
  for (int i = 0; i < 30; ++i) {
    BraidWord u = s.next(), v = s.next_on(u.strands, 5);
    auto prod = h.multiply(h.normal_form(u), h.normal_form(v));
    auto direct = h.normal_form(concat(u, v));
    CHECK(prod.terms == direct.terms);
    CHECK(h.normal_form(concat(u, inverse(u))).terms == h.identity(u.strands).terms);
  }
  auto t = h.normal_form(parse_braid("1 1", 2));
  auto q = h.normal_form(parse_braid("1", 2));
  // T^2 - x T + y = 0
  CHECK(t.terms.size() == 2);
  CHECK(t.terms.at(Permutation({1, 0})) == XY("x"));
  CHECK(t.terms.at(Permutation(2)) == XY("-y"));
  CHECK(q.terms.size() == 1);
}

TEST_CASE("x = 2a specialization") {
  for (const auto& it : hecke_table_suite(embedded_knot_table())) CHECK_MESSAGE(it.ok, it.id << " " << it.detail);
  BraidSampler s(8, 5, 10);
  for (int i = 0; i < 50; ++i) {
    BraidWord w = s.next();
    auto g = homfly_invariant(w);
    ParityScalar plus = ParityScalar::from_values(g.evaluate({{"x", 2}, {"y", 1}}), g.evaluate({{"x", -2}, {"y", 1}}));
    CHECK(homfly_at_x2a(w) == plus);
  }
}

TEST_CASE("hecke property suite") {
  for (const auto& it : hecke_suite(1, 200)) CHECK_MESSAGE(it.ok, it.id << " " << it.detail);
}
