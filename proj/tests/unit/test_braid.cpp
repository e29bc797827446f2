#include <doctest.h>

#include "mtrace/braid.hpp"
#include "mtrace/suites.hpp"

using namespace mtrace;

TEST_CASE("parsing braid words") {
  BraidWord w = parse_braid("1 -2 1 -2", 3);
  CHECK(w.letters == std::vector<int>{1, -2, 1, -2});
  CHECK(w.writhe() == 0);
  CHECK(parse_braid("", 4).length() == 0);
  CHECK_THROWS(parse_braid("1 3", 3));
  CHECK_THROWS(parse_braid("1 0", 3));
  CHECK_THROWS(parse_braid("1 x", 3));
  CHECK_THROWS(parse_braid("1", 0));
  CHECK(parse_braid(w.to_string(), 3) == w);
}

TEST_CASE("permutations") {
  Permutation p({1, 2, 0});
  CHECK(p.cycle_count() == 1);
  CHECK(p.inversions() == 2);
  CHECK(p.then(p.inverse()).is_identity());
  CHECK(Permutation(4).cycle_count() == 4);
}

TEST_CASE("components of closures") {
  CHECK(component_count(parse_braid("1 1 1", 2)) == 1);
  CHECK(component_count(parse_braid("1 1", 2)) == 2);
  CHECK(component_count(BraidWord(5, {})) == 5);
  CHECK(component_count(parse_braid("1 2 1 2 1 2", 3)) == 3);
  CHECK(component_count(parse_braid("1 -2 1 -2", 3)) == 1);
}

TEST_CASE("word operations") {
  BraidWord w = parse_braid("1 -2 2", 3);
  CHECK(inverse(w).letters == std::vector<int>{-2, 2, -1});
  CHECK(mirror(w).letters == std::vector<int>{-1, 2, -2});
  CHECK(reverse(w).letters == std::vector<int>{2, -2, 1});
  CHECK(widen(w, 5).strands == 5);
  CHECK(concat(w, inverse(w)).length() == 6);
  CHECK(markov_move(w, MarkovMove::StabilizePos) == BraidWord(4, {1, -2, 2, 3}));
  CHECK(markov_move(w, MarkovMove::StabilizeNeg) == BraidWord(4, {1, -2, 2, -3}));
  CHECK(markov_move(w, MarkovMove::Conjugate, BraidWord(3, {2})) == BraidWord(3, {-2, 1, -2, 2, 2}));
  CHECK(is_destabilizable(BraidWord(4, {1, 3})));
  CHECK(!is_destabilizable(BraidWord(4, {3, 1, 3})));
  CHECK(destabilize(BraidWord(4, {1, 2, -3})) == BraidWord(3, {1, 2}));
}

TEST_CASE("parity invariant is a^{#L}") {
  CHECK(parity_invariant(parse_braid("1 1", 2)) == ParityScalar(1));
  CHECK(parity_invariant(parse_braid("1 1 1", 2)) == ParityScalar::a());
  CHECK(parity_invariant(BraidWord(4, {})) == ParityScalar(1));
  std::map<int, int> seq{{1, 10}, {2, 20}};
  CHECK(component_trace(parse_braid("1 1", 2), seq) == 20);
  CHECK_THROWS(component_trace(BraidWord(3, {}), seq));
}

TEST_CASE("sampler is deterministic and respects bounds") {
  BraidSampler s1(17, 5, 12), s2(17, 5, 12);
  for (int i = 0; i < 50; ++i) {
    BraidWord u = s1.next(), v = s2.next();
    CHECK(u == v);
    CHECK(u.strands <= 5);
    CHECK(u.length() <= 12);
  }
}

TEST_CASE("Markov moves keep the component count") {
  BraidSampler s(5, 5, 10);
  for (int i = 0; i < 300; ++i) {
    BraidWord w = s.next();
    BraidWord m = s.random_move(w);
    CHECK(component_count(m) == component_count(w));
    CHECK((m.strands + m.writhe() - component_count(m)) % 2 == 0);
  }
}

TEST_CASE("writhe parity suites") {
  auto items = braid_parity_suite(3, 500);
  for (const auto& it : items) CHECK_MESSAGE(it.ok, it.id << " " << it.detail);
  for (const auto& it : dagger_table_suite(embedded_knot_table())) CHECK_MESSAGE(it.ok, it.id << " " << it.detail);
}
