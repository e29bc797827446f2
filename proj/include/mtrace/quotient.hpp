#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "mtrace/laurent.hpp"

namespace mtrace {

// One rewriting rule of a quotient ring presentation.
//   Eliminate: the variable is replaced everywhere by `value` (which must be a
//              monomial whenever negative powers of the variable occur).
//   Power:     var^k = c for a nonzero rational c; exponents are reduced into
//              [0, k) using var^{-1} = var^{k-1}/c.
struct QuotientRule {
  enum class Kind { Eliminate, Power };
  Kind kind = Kind::Eliminate;
  std::string var;
  LaurentPolynomial value;  // Eliminate
  int power = 0;            // Power
  Rational constant;        // Power

  static QuotientRule eliminate(std::string v, LaurentPolynomial value);
  static QuotientRule power_rule(std::string v, int k, Rational c);
  std::string to_string() const;
};

class QuotientSpec {
 public:
  QuotientSpec() = default;
  QuotientSpec(std::string name, std::vector<QuotientRule> rules);

  const std::string& name() const { return name_; }
  const std::vector<QuotientRule>& rules() const { return rules_; }

  // Canonical representative; idempotent.
  LaurentPolynomial reduce(const LaurentPolynomial& p) const;

  // Named specializations of the ring tower used throughout the library.
  // Variables: a, b, c (cubic Hecke parameters) with x = b + c, y = bc.
  static QuotientSpec none();
  static QuotientSpec r_plus();        // a = bc
  static QuotientSpec r_minus();       // a = -bc
  static QuotientSpec s_dagger2();     // a^2 = 1, bc = 1  (c eliminated)
  // Variables a, x, y.
  static QuotientSpec ax_plus();       // y = a
  static QuotientSpec ax_minus();      // y = -a
  static QuotientSpec x2a_point();     // a^2 = 1, y = 1, x = 2a
  static QuotientSpec xa_point();      // a^2 = 1, y = 1, x = a
  static QuotientSpec xm2a_point();    // a^2 = 1, y = 1, x = -2a
  static QuotientSpec by_name(const std::string& name);

 private:
  std::string name_ = "none";
  std::vector<QuotientRule> rules_;
};

struct RingPoint {
  std::map<std::string, Rational> assignment;
};

// Random points compatible with a quotient spec: free variables get random
// nonzero rationals from a range of size >= 10^6, eliminated variables are
// computed, and power-rule variables take a rational root (a = +-1 for a^2=1).
class PointSampler {
 public:
  PointSampler(std::vector<std::string> vars, QuotientSpec spec, std::uint64_t seed);
  RingPoint next();
  // Check that the point satisfies every rule of the spec.
  bool satisfies(const RingPoint& p) const;

 private:
  std::vector<std::string> vars_;
  QuotientSpec spec_;
  std::mt19937_64 rng_;
};

struct PitResult {
  bool equal = false;
  int points = 0;
  // Schwartz-Zippel style bound on the probability that unequal polynomials
  // agree on every sampled point: (total degree / range)^points.
  double error_bound = 0;
};

// Probabilistic identity test p == q modulo `spec` at seeded random points.
PitResult pit_equal(const LaurentPolynomial& p, const LaurentPolynomial& q, const QuotientSpec& spec,
                    int points, std::uint64_t seed);

// Overload using caller-provided points; throws if a point violates the spec.
PitResult pit_equal(const LaurentPolynomial& p, const LaurentPolynomial& q, const QuotientSpec& spec,
                    const std::vector<RingPoint>& points);

inline constexpr std::int64_t kPitRange = 2000003;  // numerators drawn from [-R, R]

}  // namespace mtrace
