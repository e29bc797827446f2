#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace mtrace {

using Rational = mpq_class;

std::string rational_to_string(const Rational& q);
Rational parse_rational(const std::string& text);

// Sparse multivariate Laurent polynomial with exact rational coefficients.
// The variable list is part of the value; binary operations require equal
// lists, except that a polynomial without variables (a bare constant) adapts.
class LaurentPolynomial {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Rational>;

  LaurentPolynomial();
  explicit LaurentPolynomial(std::vector<std::string> variables);
  LaurentPolynomial(std::vector<std::string> variables, const Rational& c);

  static LaurentPolynomial constant(const std::vector<std::string>& vars, const Rational& c);
  static LaurentPolynomial variable(const std::vector<std::string>& vars, const std::string& name,
                                    int power = 1);
  static LaurentPolynomial monomial(const std::vector<std::string>& vars, const Exponents& e,
                                    const Rational& c);
  static LaurentPolynomial parse(const std::string& text, const std::vector<std::string>& vars);

  const std::vector<std::string>& variables() const { return *vars_; }
  const Terms& terms() const { return terms_; }
  int index_of(const std::string& name) const;  // -1 when absent

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const Rational& q);

  friend LaurentPolynomial operator+(LaurentPolynomial p, const LaurentPolynomial& q) { return p += q; }
  friend LaurentPolynomial operator-(LaurentPolynomial p, const LaurentPolynomial& q) { return p -= q; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& p, const LaurentPolynomial& q);
  friend LaurentPolynomial operator*(LaurentPolynomial p, const Rational& q) { return p *= q; }
  friend LaurentPolynomial operator*(const Rational& q, LaurentPolynomial p) { return p *= q; }
  friend bool operator==(const LaurentPolynomial& p, const LaurentPolynomial& q);
  friend bool operator!=(const LaurentPolynomial& p, const LaurentPolynomial& q) { return !(p == q); }

  // Negative powers only for monomials (units of the Laurent ring).
  LaurentPolynomial pow(int k) const;
  LaurentPolynomial inverse_monomial() const;

  // Exact division by a polynomial; throws if the division leaves a remainder.
  LaurentPolynomial exact_divide(const LaurentPolynomial& d) const;

  Rational evaluate(const std::map<std::string, Rational>& point) const;
  LaurentPolynomial substitute(const std::string& name, const LaurentPolynomial& value) const;
  // Re-express over another variable list containing every variable in use.
  LaurentPolynomial with_variables(const std::vector<std::string>& vars) const;
  // Rename variables according to a permutation map (names not in map kept).
  LaurentPolynomial rename(const std::map<std::string, std::string>& m) const;

  int degree_in(int var) const;      // max exponent, 0 for zero polynomial
  int min_degree_in(int var) const;  // min exponent

  std::string to_string() const;

 private:
  std::shared_ptr<const std::vector<std::string>> vars_;
  Terms terms_;

  void adopt(const LaurentPolynomial& o);
  void check_same(const LaurentPolynomial& o) const;
  void add_term(const Exponents& e, const Rational& c);
};

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);

}  // namespace mtrace
