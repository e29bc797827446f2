#include <cstdlib>
#include <stdexcept>

#include "mtrace/skein.hpp"

namespace mtrace {

namespace {

using Matrix = std::vector<std::vector<LaurentPolynomial>>;
const std::vector<std::string> kT{"t"};

LaurentPolynomial tp(int k) { return LaurentPolynomial::variable(kT, "t", k); }
LaurentPolynomial cst(long c) { return LaurentPolynomial::constant(kT, c); }

Matrix identity(int m) {
  Matrix r(m, std::vector<LaurentPolynomial>(m, cst(0)));
  for (int i = 0; i < m; ++i) r[i][i] = cst(1);
  return r;
}

// reduced Burau image of sigma_i^{+-1}, size n-1
Matrix generator(int n, int letter) {
  int m = n - 1;
  Matrix g = identity(m);
  int i = std::abs(letter) - 1;  // row of the generator
  if (letter > 0) {
    if (i > 0) g[i][i - 1] = tp(1);
    g[i][i] = -tp(1);
    if (i + 1 < m) g[i][i + 1] = cst(1);
  } else {
    if (i > 0) g[i][i - 1] = cst(1);
    g[i][i] = -tp(-1);
    if (i + 1 < m) g[i][i + 1] = tp(-1);
  }
  return g;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  int m = int(a.size());
  Matrix r(m, std::vector<LaurentPolynomial>(m, cst(0)));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < m; ++j)
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

// fraction-free elimination; every division is exact
LaurentPolynomial bareiss_det(Matrix a) {
  int m = int(a.size());
  if (m == 0) return cst(1);
  LaurentPolynomial prev = cst(1);
  int sign = 1;
  for (int k = 0; k < m - 1; ++k) {
    if (a[k][k].is_zero()) {
      int r = k + 1;
      while (r < m && a[r][k].is_zero()) ++r;
      if (r == m) return cst(0);
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i)
      for (int j = k + 1; j < m; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_divide(prev);
    prev = a[k][k];
  }
  return sign > 0 ? a[m - 1][m - 1] : -a[m - 1][m - 1];
}

}  // namespace

LaurentPolynomial alexander_polynomial(const BraidWord& w) {
  int n = w.strands;
  if (n == 1) return cst(1);
  Matrix rho = identity(n - 1);
  for (int x : w.letters) rho = multiply(rho, generator(n, x));
  Matrix d = identity(n - 1);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j) d[i][j] -= rho[i][j];
  LaurentPolynomial num = bareiss_det(d);
  LaurentPolynomial den = cst(0);
  for (int k = 0; k < n; ++k) den += tp(k);
  return num.exact_divide(den);
}

long alexander_det(const BraidWord& w) {
  Rational v = alexander_polynomial(w).evaluate({{"t", Rational(-1)}});
  if (v.get_den() != 1) throw std::logic_error("Alexander polynomial has non-integral value at -1");
  return std::labs(v.get_num().get_si());
}

}  // namespace mtrace
