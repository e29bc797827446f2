#pragma once

#include <map>
#include <string>
#include <vector>

#include "mtrace/braid.hpp"
#include "mtrace/parity_scalar.hpp"

namespace mtrace {

// Finite Coxeter systems of type A_{n-1} (elements are permutations of n
// points) or I_2(m) (elements are (first letter, length) normal forms).
class CoxeterSystem {
 public:
  enum class Kind { TypeA, Dihedral };
  using Element = std::vector<int>;

  static CoxeterSystem type_a(int strands);
  static CoxeterSystem dihedral(int m);

  Kind kind() const { return kind_; }
  int rank() const;  // number of generators, numbered 1..rank
  int strands() const { return kind_ == Kind::TypeA ? param_ : 0; }
  int order_param() const { return param_; }
  std::string name() const;

  Element identity() const;
  int length(const Element& w) const;
  Element left_multiply(int gen, const Element& w) const;
  bool is_ascent(int gen, const Element& w) const { return length(left_multiply(gen, w)) > length(w); }
  int braid_order(int i, int j) const;
  std::vector<Element> elements() const;
  std::string element_to_string(const Element& w) const;

 private:
  Kind kind_ = Kind::TypeA;
  int param_ = 1;
};

// Vector in the module spanned by the E_w and C over Q[a]/(a^2-1).
struct ExtHeckeVector {
  std::map<CoxeterSystem::Element, ParityScalar> e;
  ParityScalar c;

  static ExtHeckeVector basis(const CoxeterSystem::Element& w);
  static ExtHeckeVector central();
  void add(const CoxeterSystem::Element& w, const ParityScalar& x);
  ExtHeckeVector& operator+=(const ExtHeckeVector& o);
  ExtHeckeVector scaled(const ParityScalar& s) const;
  bool is_zero() const { return e.empty() && c.is_zero(); }
  friend bool operator==(const ExtHeckeVector& u, const ExtHeckeVector& v) { return u.e == v.e && u.c == v.c; }
  std::string to_string(const CoxeterSystem& cox) const;
};

// s_i^{+-1} acting on v (letter +-i).
ExtHeckeVector act_generator(int letter, const ExtHeckeVector& v, const CoxeterSystem& cox);
// Letters applied right to left to E_1.
ExtHeckeVector braid_to_vector(const BraidWord& w, const CoxeterSystem& cox);
ExtHeckeVector braid_to_vector(const BraidWord& w);

struct ThmTraceConfig {
  Rational lambda = 0;   // t_1(1)
  bool printed_exponent = false;  // level-descent constant a^{l(w)+n} instead of a^{l(w)+n-1}
};

// The trace family on the type A modules, t_2(C) = 1.
ParityScalar thm_trace(const ExtHeckeVector& v, int strands, const ThmTraceConfig& cfg = {});
ParityScalar thm_trace_braid(const BraidWord& w, const ThmTraceConfig& cfg = {});

struct CombinedTrace {
  ParityScalar c_thm, c_hecke, c_kauffman;
};
// Coefficients making the 3-strand values on (1, s1, s1 s2) equal (1, 0, 0).
CombinedTrace t0_combination(const ThmTraceConfig& cfg = {});

struct T0Components {
  ParityScalar thm, hecke, kauffman, value;
  CombinedTrace coeff;
};
T0Components t0_components(const BraidWord& w, const ThmTraceConfig& cfg = {});
ParityScalar t0_invariant(const BraidWord& w, const ThmTraceConfig& cfg = {});

// Both sides of every braid relation (and s^-1 s = 1) act identically on every
// basis vector.  On failure a description is stored in *why.
bool verify_braid_relations(const CoxeterSystem& cox, std::string* why = nullptr);

struct NonsplitReport {
  std::string square_on_e1;  // (s^ - a)^2 E_1 with s^ = s + lambda C
  bool equals_minus_2aC = false;
  bool lambda_free = false;
  bool killed_by_t = false;  // (t - a) applied afterwards gives 0
  bool ok() const { return equals_minus_2aC && lambda_free && killed_by_t; }
};
NonsplitReport nonsplit_certificate();

}  // namespace mtrace
