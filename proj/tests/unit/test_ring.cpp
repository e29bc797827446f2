#include <doctest.h>

#include <random>

#include "mtrace/laurent.hpp"
#include "mtrace/parity_scalar.hpp"
#include "mtrace/quotient.hpp"

using namespace mtrace;

namespace {

const std::vector<std::string> kABC{"a", "b", "c"};

LaurentPolynomial P(const std::string& s, const std::vector<std::string>& v = kABC) {
  return LaurentPolynomial::parse(s, v);
}

// random Laurent polynomial in a, b, c with small exponents
LaurentPolynomial random_poly(std::mt19937_64& rng, int terms = 4) {
  LaurentPolynomial p(kABC);
  for (int t = 0; t < terms; ++t) {
    LaurentPolynomial::Exponents e(3);
    for (auto& k : e) k = int(rng() % 7) - 3;
    p += LaurentPolynomial::monomial(kABC, e, Rational(long(rng() % 19) - 9, 1 + long(rng() % 4)));
  }
  return p;
}

}  // namespace

TEST_CASE("laurent arithmetic") {
  CHECK(P("(a + b)^2") == P("a^2 + 2*a*b + b^2"));
  CHECK(P("a^-1 * a") == P("1"));
  CHECK((P("a*b^-2") * P("a^-1*b^2")).is_constant());
  CHECK(P("a^2 - b^2").exact_divide(P("a - b")) == P("a + b"));
  CHECK_THROWS(P("a^2 + 1").exact_divide(P("a - b")));
  CHECK(P("3/2*a - a").to_string() == "1/2*a");
  CHECK(P("a*b*c").pow(-2) == P("a^-2*b^-2*c^-2"));
  CHECK(P("a + b*c").evaluate({{"a", 2}, {"b", 3}, {"c", Rational(1, 3)}}) == 3);
  CHECK(P("a + b").substitute("b", P("c^2")) == P("a + c^2"));
  CHECK(P("a^3*b^-2 + c").degree_in(0) == 3);
  CHECK(P("a^3*b^-2 + c").min_degree_in(1) == -2);
}

TEST_CASE("laurent ring axioms on seeded samples") {
  std::mt19937_64 rng(2024);
  for (int s = 0; s < 60; ++s) {
    auto p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * q == q * p);
    CHECK(p - p == LaurentPolynomial(kABC));
    CHECK(P(p.to_string()) == p);
    if (!q.is_zero()) CHECK((p * q).exact_divide(q) == p);
  }
}

TEST_CASE("quotient reduction") {
  auto plus = QuotientSpec::r_plus(), minus = QuotientSpec::r_minus(), dd = QuotientSpec::s_dagger2();
  CHECK(plus.reduce(P("a - b*c")).is_zero());
  CHECK(minus.reduce(P("a + b*c")).is_zero());
  CHECK(dd.reduce(P("a^2 - 1")).is_zero());
  CHECK(dd.reduce(P("b*c - 1")).is_zero());
  CHECK(dd.reduce(P("a^-1 - a")).is_zero());
  CHECK(!plus.reduce(P("a + b*c")).is_zero());

  std::mt19937_64 rng(99);
  for (const auto& spec : {plus, minus, dd}) {
    for (int s = 0; s < 30; ++s) {
      auto p = random_poly(rng), q = random_poly(rng);
      auto rp = spec.reduce(p);
      CHECK(spec.reduce(rp) == rp);
      CHECK(spec.reduce(p * q) == spec.reduce(rp * spec.reduce(q)));
      CHECK(spec.reduce(p + q) == spec.reduce(rp + q));
    }
  }
}

TEST_CASE("named points over a, x, y") {
  std::vector<std::string> axy{"a", "x", "y"};
  auto x2a = QuotientSpec::x2a_point();
  CHECK(x2a.reduce(P("x - 2*a", axy)).is_zero());
  CHECK(x2a.reduce(P("y - 1", axy)).is_zero());
  CHECK(x2a.reduce(P("a^3", axy)) == P("a", axy));
  CHECK(QuotientSpec::xa_point().reduce(P("x*a", axy)) == P("1", axy));
  CHECK(QuotientSpec::xm2a_point().reduce(P("x + 2*a", axy)).is_zero());
  CHECK(QuotientSpec::ax_plus().reduce(P("y - a", axy)).is_zero());
  CHECK(QuotientSpec::ax_minus().reduce(P("y + a", axy)).is_zero());
  CHECK(QuotientSpec::by_name("R+").name() == QuotientSpec::r_plus().name());
  CHECK_THROWS(QuotientSpec::by_name("nonsense"));
}

TEST_CASE("point sampler and identity testing") {
  for (const auto& spec : {QuotientSpec::r_plus(), QuotientSpec::s_dagger2(), QuotientSpec::none()}) {
    PointSampler ps(kABC, spec, 5);
    for (int i = 0; i < 10; ++i) CHECK(ps.satisfies(ps.next()));
  }
  auto r = pit_equal(P("(a+b)*(a-b)"), P("a^2-b^2"), QuotientSpec::none(), 7, 1);
  CHECK(r.equal);
  CHECK(r.points == 7);
  CHECK(r.error_bound < 1e-30);
  CHECK(!pit_equal(P("a*b"), P("a*c"), QuotientSpec::none(), 7, 1).equal);
  CHECK(pit_equal(P("a"), P("b*c"), QuotientSpec::r_plus(), 5, 3).equal);
  RingPoint bad{{{"a", 1}, {"b", 2}, {"c", 3}}};
  CHECK_THROWS(pit_equal(P("a"), P("a"), QuotientSpec::r_plus(), std::vector<RingPoint>{bad}));
}

TEST_CASE("parity scalars") {
  ParityScalar a = ParityScalar::a();
  CHECK(a * a == ParityScalar(1));
  CHECK(ParityScalar::a_pow(7) == a);
  CHECK(ParityScalar::a_pow(-3) == a);
  CHECK(ParityScalar::parse("16*a") == ParityScalar(0, 16));
  CHECK(ParityScalar::parse("3 - 2*a") == ParityScalar(3, -2));
  ParityScalar u(3, 1);
  CHECK(u.is_unit());
  CHECK(u * u.inverse() == ParityScalar(1));
  CHECK(!ParityScalar(1, 1).is_unit());
  CHECK_THROWS(ParityScalar(1, -1).inverse());
  CHECK(ParityScalar::from_values(u.at_plus(), u.at_minus()) == u);
  CHECK(ParityScalar::from_polynomial(LaurentPolynomial::parse("a^-3 + 2*a^2", {"a"})) == ParityScalar(2, 1));
  QuadScalar al = QuadScalar::alpha(Rational(1, 4));
  CHECK(al * al == QuadScalar(Rational(1, 4), Rational(1, 4)));
}
