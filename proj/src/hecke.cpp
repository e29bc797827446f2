#include "mtrace/hecke.hpp"

namespace mtrace {

Permutation transposition(int n, int i) {
  std::vector<int> img(n);
  for (int k = 0; k < n; ++k) img[k] = k;
  std::swap(img[i - 1], img[i]);
  return Permutation(std::move(img));
}

std::vector<int> reduced_word(const Permutation& p) {
  std::vector<int> word;
  Permutation cur = p;
  int n = p.size();
  while (!cur.is_identity()) {
    int len = cur.inversions();
    for (int i = 1; i < n; ++i) {
      Permutation next = transposition(n, i).then(cur);
      if (next.inversions() < len) {
        word.push_back(i);
        cur = next;
        break;
      }
    }
  }
  return word;
}

Permutation extend(const Permutation& p, int n) {
  std::vector<int> img = p.images();
  for (int k = p.size(); k < n; ++k) img.push_back(k);
  return Permutation(std::move(img));
}

std::pair<Permutation, int> last_strand_decomposition(const Permutation& w) {
  int n = w.size();
  auto restrict_last = [n](const Permutation& u) {
    return Permutation(std::vector<int>(u.images().begin(), u.images().begin() + (n - 1)));
  };
  if (w[n - 1] == n - 1) return {restrict_last(w), n};
  // y_k = s_{n-1} s_{n-2} ... s_k as a braid permutation
  for (int k = n - 1; k >= 1; --k) {
    Permutation y(n);
    for (int j = n - 1; j >= k; --j) y = y.then(transposition(n, j));
    Permutation u = w.then(y.inverse());
    if (u[n - 1] == n - 1) {
      if (u.inversions() + (n - k) != w.inversions()) throw std::logic_error("coset decomposition not reduced");
      return {restrict_last(u), k};
    }
  }
  throw std::logic_error("no coset decomposition");
}

HeckeScalars<LaurentPolynomial> generic_hecke_scalars() {
  const std::vector<std::string> v{"x", "y"};
  HeckeScalars<LaurentPolynomial> s;
  s.zero = LaurentPolynomial(v);
  s.one = LaurentPolynomial::constant(v, 1);
  s.x = LaurentPolynomial::variable(v, "x");
  s.y = LaurentPolynomial::variable(v, "y");
  s.y_inv = LaurentPolynomial::variable(v, "y", -1);
  s.delta = (s.y + s.one) * LaurentPolynomial::variable(v, "x", -1);
  return s;
}

HeckeScalars<ParityScalar> x2a_hecke_scalars() {
  HeckeScalars<ParityScalar> s;
  s.zero = ParityScalar(0);
  s.one = ParityScalar(1);
  s.x = ParityScalar(0, 2);
  s.y = ParityScalar(1);
  s.y_inv = ParityScalar(1);
  s.delta = ParityScalar(2) * ParityScalar(0, Rational(1, 2));  // (y+1)/x with 1/x = a/2
  return s;
}

LaurentPolynomial homfly_invariant(const BraidWord& w) {
  static thread_local Hecke<LaurentPolynomial> h(generic_hecke_scalars());
  return h.trace(h.normal_form(w));
}

ParityScalar homfly_at_x2a(const BraidWord& w) {
  static thread_local Hecke<ParityScalar> h(x2a_hecke_scalars());
  return h.trace(h.normal_form(w));
}

}  // namespace mtrace
