#include "mtrace/parity_scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace mtrace {

ParityScalar ParityScalar::from_polynomial(const LaurentPolynomial& p) {
  ParityScalar r;
  int ia = p.index_of("a");
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (int(i) != ia && e[i] != 0) throw std::invalid_argument("not a polynomial in a alone: " + p.to_string());
    int k = ia < 0 ? 0 : e[ia];
    if (k % 2 == 0)
      r.c0_ += c;
    else
      r.c1_ += c;
  }
  return r;
}

ParityScalar ParityScalar::parse(const std::string& text) {
  return from_polynomial(LaurentPolynomial::parse(text, {"a"}));
}

ParityScalar ParityScalar::inverse() const {
  if (!is_unit()) throw std::domain_error("not invertible in Q[a]/(a^2-1): " + to_string());
  return from_values(1 / at_plus(), 1 / at_minus());
}

std::string ParityScalar::to_string() const {
  LaurentPolynomial p({"a"});
  p += LaurentPolynomial::constant({"a"}, c0_);
  p += LaurentPolynomial::variable({"a"}, "a") * c1_;
  return p.to_string();
}

std::ostream& operator<<(std::ostream& os, const ParityScalar& s) { return os << s.to_string(); }

}  // namespace mtrace
