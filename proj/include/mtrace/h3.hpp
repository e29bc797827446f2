#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mtrace/check.hpp"
#include "mtrace/laurent.hpp"
#include "mtrace/quotient.hpp"

namespace mtrace {

using PolyMatrix = std::vector<std::vector<LaurentPolynomial>>;
using RatMatrix = std::vector<std::vector<Rational>>;

// Variables of the generic ring; x = b + c and y = bc are expanded.
const std::vector<std::string>& h3_variables();

// Formal combination of 3-strand braid words, sum(coeff * word) / den.
class H3Expr {
 public:
  using Word = std::vector<int>;

  H3Expr();
  // coeff is a polynomial in a, b, c, x, y (no negative powers of x);
  // the word uses letters +-1, +-2 separated by spaces ("" is the identity).
  static H3Expr word(const std::string& letters, const std::string& coeff = "1");
  static H3Expr scalar(const std::string& coeff);
  static LaurentPolynomial coefficient(const std::string& text);

  const std::vector<std::pair<Word, LaurentPolynomial>>& terms() const { return terms_; }
  const LaurentPolynomial& den() const { return den_; }

  H3Expr operator+(const H3Expr& o) const;
  H3Expr operator-(const H3Expr& o) const;
  H3Expr operator*(const H3Expr& o) const;
  H3Expr scaled(const LaurentPolynomial& c) const;
  H3Expr over(const LaurentPolynomial& d) const;

 private:
  std::vector<std::pair<Word, LaurentPolynomial>> terms_;
  LaurentPolynomial den_;
};

H3Expr h3_inverse_word(const H3Expr::Word& w);
// (s1 s2 s1) e (s1 s2 s1)^-1
H3Expr h3_hat(const H3Expr& e);
// exchange s1 and s2
H3Expr h3_swap(const H3Expr& e);

// Names: R1, R1hat, R1swap, S+, S'+, S-, S'-, S1, S'1, S1hat.
// S1 = e1 s2 e1 - e1 and S'1 = e1 s2^-1 e1 - e1 use e = a((s + s^-1)/x - 1),
// the form valid at a^2 = y = 1.
const std::map<std::string, H3Expr>& relator_catalog();

// Images in S_a, S_b, S_c, U_ab, U_ac, U_bc, V.
struct H3RepImage {
  std::array<LaurentPolynomial, 3> scalars;
  std::array<PolyMatrix, 3> twos;
  PolyMatrix three;
  LaurentPolynomial den;  // common denominator of every entry
  bool is_zero() const;
};

inline const std::array<const char*, 7> kH3Irreps{"S_a", "S_b", "S_c", "U_ab", "U_ac", "U_bc", "V"};

// Generator matrices of irreducible k (index into kH3Irreps); letter +-1, +-2.
PolyMatrix h3_generator_matrix(int irrep, int letter);
// Representation s1, s2 -> m (the module built from the abelianization).
PolyMatrix abelian_module_matrix(int letter);

PolyMatrix image_in(const H3Expr& e, int irrep, const QuotientSpec& spec);
H3RepImage rep_image(const H3Expr& e, const QuotientSpec& spec);
bool same_image(const H3RepImage& p, const H3RepImage& q, const QuotientSpec& spec);

struct SchurTable {
  std::array<LaurentPolynomial, 7> num;  // p = num / den, den a monomial
  std::array<LaurentPolynomial, 7> den;
};
const SchurTable& schur_table();

// Faithfulness of the matrix models under spec: every Schur numerator must
// survive the quotient (tested at random points).
bool faithful_under(const QuotientSpec& spec, std::string* why = nullptr, std::uint64_t seed = 1);

// lhs == rhs in H3 (x) spec, decided on the matrix models.  Throws
// std::domain_error when the models are not faithful under spec.
bool verify_identity(const H3Expr& lhs, const H3Expr& rhs, const QuotientSpec& spec);

struct IdentityCase {
  std::string id;
  H3Expr lhs, rhs;
  QuotientSpec spec;
};
std::vector<IdentityCase> h3_identity_cases();

const std::vector<std::string>& basis_b0();
const std::vector<std::string>& basis_b1();

// t0 = sum_chi tr_chi / p_chi at a rational point (a, b, c).
Rational t0_at(const H3Expr& e, const std::map<std::string, Rational>& point);

std::vector<CheckItem> representation_checks();
std::vector<CheckItem> identity_checks();
CheckItem schur_identity_check();
// which = 0 for B0, 1 for B1.
CheckItem gram_check_pit(int which, int points = 7, std::uint64_t seed = 7);
// Full symbolic determinant.
CheckItem gram_check_symbolic(int which);
std::vector<CheckItem> trace_equations_check(int points = 5, std::uint64_t seed = 11);
std::vector<CheckItem> character_and_module_checks();

}  // namespace mtrace
