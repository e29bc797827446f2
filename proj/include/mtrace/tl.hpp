#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtrace/check.hpp"
#include "mtrace/laurent.hpp"
#include "mtrace/parity_scalar.hpp"
#include "mtrace/quotient.hpp"

namespace mtrace {

// Generator word e_{i1} ... e_{ik} (1-based indices), or the symbol C.
struct TLWord {
  std::vector<int> gens;
  bool is_c = false;

  static TLWord central() { return TLWord{{}, true}; }
  std::string to_string() const;
};

// Planar matching of n top points (0..n-1) and n bottom points (n..2n-1).
struct TLDiagram {
  int n = 0;
  std::vector<int> match;
  int loops = 0;

  static TLDiagram identity(int n);
  static TLDiagram generator(int n, int i);
  // this on top, below underneath
  TLDiagram compose(const TLDiagram& below) const;
  bool is_planar() const;
  friend bool operator==(const TLDiagram& p, const TLDiagram& q) {
    return p.n == q.n && p.match == q.match && p.loops == q.loops;
  }
};

TLDiagram word_to_diagram(const TLWord& w, int n);
// Closed curves after joining top i to bottom i, internal loops included.
int closure_components(const TLDiagram& d);

// Specializations of A = Q[a, x^{+-1}]/(a^2 - 1) over the variables {a, x}
// (plus any extra variables the caller uses, which are left free).
QuotientSpec tl_generic_spec();
QuotientSpec tl_point_spec(const Rational& a, const Rational& x);

// The extended algebra on generators e_1..e_{n-1}, C for n <= 6.  Elements
// are combinations of lexicographically minimal reduced words plus a C part.
class TLAlgebra {
 public:
  using Word = std::vector<int>;
  using Scalar = LaurentPolynomial;
  struct Element {
    std::map<Word, Scalar> terms;
    Scalar c;
    bool is_zero() const { return terms.empty() && c.is_zero(); }
  };

  TLAlgebra(int n, QuotientSpec spec, std::vector<std::string> vars = {"a", "x"});

  int n() const { return n_; }
  const std::vector<std::string>& variables() const { return vars_; }
  const QuotientSpec& spec() const { return spec_; }

  Scalar scalar(const Rational& q) const;
  Scalar parse(const std::string& text) const;
  Scalar reduce(const Scalar& s) const { return spec_.reduce(s); }

  Element zero() const;
  Element identity() const;
  Element generator(int i) const;
  Element central() const;
  Element word(const TLWord& w) const;

  Element add(const Element& u, const Element& v) const;
  Element sub(const Element& u, const Element& v) const;
  Element scale(const Element& u, const Scalar& s) const;
  Element multiply(const Element& u, const Element& v) const;
  bool equal(const Element& u, const Element& v) const { return sub(u, v).is_zero(); }

  // delta~/x, 2a/x and the C^2 coefficient 2 x^-2 delta~ (a - x).
  const Scalar& loop_ratio() const { return ratio_; }
  const Scalar& braid_defect() const { return defect_; }
  const Scalar& c_square() const { return csq_; }

  // Reduced words spanning the C-free part; size Cat_n.
  std::vector<Word> basis() const;
  std::string to_string(const Element& u) const;

 private:
  int n_;
  QuotientSpec spec_;
  std::vector<std::string> vars_;
  Scalar ratio_, defect_, csq_;
  mutable std::map<Word, Element> memo_;

  const Element& reduce_word(const Word& w) const;
  Scalar ratio_pow(std::size_t k) const;
  void add_term(Element& e, const Word& w, const Scalar& s) const;
};

// Trace of the x = a family: a^{k+n}(N - k) on words, -a^{n+1} on C.
ParityScalar trace_xa(const TLWord& w, int n);
// Linear extension; coefficients must already lie in Q[a]/(a^2-1).
ParityScalar trace_xa(const TLAlgebra::Element& u, int n);

struct TLTraceConfig {
  ParityScalar u, v;  // t(e_i) = u, t(1) = v, t(C) = -u
  static TLTraceConfig defaults(int n);  // u_n = -a^n, v_n = (n-2)a^{n+1}, v_1 = 0
};
ParityScalar trace_x2a(const TLWord& w, int n, const std::optional<TLTraceConfig>& cfg = std::nullopt);
ParityScalar trace_x2a(const TLAlgebra::Element& u, int n, const std::optional<TLTraceConfig>& cfg = std::nullopt);

enum class SplitPoint { XA, X2A, Generic };
std::vector<CheckItem> split_checks(SplitPoint p, std::uint64_t seed = 1);
std::vector<CheckItem> retraction_check(int max_rank = 4);

}  // namespace mtrace
