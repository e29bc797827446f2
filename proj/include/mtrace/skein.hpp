#pragma once

#include <array>
#include <string>
#include <vector>

#include "mtrace/braid.hpp"
#include "mtrace/laurent.hpp"
#include "mtrace/parity_scalar.hpp"

namespace mtrace {

// Unoriented link diagram in PD form.  Each crossing lists four edge labels
// counterclockwise starting from an incoming under-strand port, so ports 0/2
// are the under strand and ports 1/3 the over strand.  Every label occurs
// exactly twice.  Crossing-free components are counted in `loops`.
struct PlanarDiagram {
  std::vector<std::array<int, 4>> crossings;
  int loops = 0;

  int crossing_count() const { return int(crossings.size()); }
  // Throws when a label does not occur exactly twice.
  void validate() const;
  int component_count() const;
  std::string to_string() const;
};

enum class Variant { Plus, Minus };
Variant parse_variant(const std::string& s);
const char* variant_name(Variant v);

PlanarDiagram diagram_from_closure(const BraidWord& w);

// Regular-isotopy invariant in variables (alpha, z): a positive curl gives
// alpha, a disjoint loop gives the variant's loop value
//   (alpha + alpha^-1)/z - 1   (Plus)     (alpha - alpha^-1)/z + 1   (Minus).
LaurentPolynomial kauffman_eval(const PlanarDiagram& d, Variant v, bool memo = true);

// alpha^-writhe * K(closure) rewritten with a = alpha^-2, x = alpha^-1 z.
// Result lives in variables (a, x).
LaurentPolynomial markov_trace_pm(const BraidWord& w, Variant v, bool memo = true);

// The same trace evaluated exactly at a rational point (a, x), a and x nonzero.
Rational markov_trace_pm_at(const BraidWord& w, Variant v, const Rational& a, const Rational& x);

// Kauffman trace patched over a^2 = y = 1, x = 2a: the Plus trace at a = 1 and
// the Minus trace at a = -1.
ParityScalar kauffman_at_x2a(const BraidWord& w);

// Generic patched form: a quotient with a^2 = 1, y = 1 and x = k*a.
ParityScalar kauffman_at_point(const BraidWord& w, const Rational& k);

// |Delta(-1)| from the reduced Burau representation.
long alexander_det(const BraidWord& w);
// Alexander polynomial Delta(t) (up to units) in the variable t.
LaurentPolynomial alexander_polynomial(const BraidWord& w);

// tau^-(beta)(-a,-x) == (-1)^{#L-1} tau^+(beta)(a,x), checked on the generic
// polynomials.
bool variant_sign_relation(const BraidWord& w);
// Same relation checked exactly at `points` seeded rational points (a, x).
bool variant_sign_relation_at_points(const BraidWord& w, int points, unsigned seed);

struct SkeinStats {
  long evaluations = 0;
  long memo_hits = 0;
};
SkeinStats skein_stats();
void reset_skein_caches();

}  // namespace mtrace
