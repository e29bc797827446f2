#include "mtrace/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mtrace {

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

namespace {
const std::shared_ptr<const std::vector<std::string>>& empty_vars() {
  static const auto e = std::make_shared<const std::vector<std::string>>();
  return e;
}
}  // namespace

LaurentPolynomial::LaurentPolynomial() : vars_(empty_vars()) {}

LaurentPolynomial::LaurentPolynomial(std::vector<std::string> variables)
    : vars_(std::make_shared<const std::vector<std::string>>(std::move(variables))) {}

LaurentPolynomial::LaurentPolynomial(std::vector<std::string> variables, const Rational& c)
    : LaurentPolynomial(std::move(variables)) {
  if (c != 0) {
    Rational& t = terms_[Exponents(vars_->size(), 0)] = c;
    t.canonicalize();
  }
}

LaurentPolynomial LaurentPolynomial::constant(const std::vector<std::string>& vars, const Rational& c) {
  return LaurentPolynomial(vars, c);
}

LaurentPolynomial LaurentPolynomial::variable(const std::vector<std::string>& vars, const std::string& name,
                                              int power) {
  LaurentPolynomial p(vars);
  int i = p.index_of(name);
  if (i < 0) throw std::invalid_argument("unknown variable " + name);
  Exponents e(vars.size(), 0);
  e[i] = power;
  p.terms_[e] = 1;
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const std::vector<std::string>& vars, const Exponents& e,
                                              const Rational& c) {
  if (e.size() != vars.size()) throw std::invalid_argument("exponent length mismatch");
  LaurentPolynomial p(vars);
  if (c != 0) {
    Rational& t = p.terms_[e] = c;
    t.canonicalize();
  }
  return p;
}

int LaurentPolynomial::index_of(const std::string& name) const {
  auto it = std::find(vars_->begin(), vars_->end(), name);
  return it == vars_->end() ? -1 : int(it - vars_->begin());
}

bool LaurentPolynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

Rational LaurentPolynomial::constant_term() const {
  auto it = terms_.find(Exponents(vars_->size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::check_same(const LaurentPolynomial& o) const {
  if (vars_ == o.vars_ || *vars_ == *o.vars_) return;
  throw std::invalid_argument("mismatched variable lists");
}

// A variable-free operand takes the variable list of the other operand.
void LaurentPolynomial::adopt(const LaurentPolynomial& o) {
  if (vars_->empty() && !o.vars_->empty()) {
    Rational c = constant_term();
    vars_ = o.vars_;
    terms_.clear();
    if (c != 0) terms_[Exponents(vars_->size(), 0)] = c;
  }
}

void LaurentPolynomial::add_term(const Exponents& e, const Rational& c) {
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) it->second.canonicalize();
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else if (c == 0) {
    terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  adopt(o);
  if (o.vars_->empty()) {
    Rational c = o.constant_term();
    if (c != 0) add_term(Exponents(vars_->size(), 0), c);
    return *this;
  }
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) { return *this += -o; }

LaurentPolynomial operator*(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (p.vars_->empty()) return q * p.constant_term();
  if (q.vars_->empty()) return p * q.constant_term();
  p.check_same(q);
  LaurentPolynomial r(*p.vars_);
  r.vars_ = p.vars_;
  const std::size_t n = p.vars_->size();
  LaurentPolynomial::Exponents e(n);
  Rational prod;
  for (const auto& [ea, ca] : p.terms_) {
    for (const auto& [eb, cb] : q.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      prod = ca * cb;
      r.add_term(e, prod);
    }
  }
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  *this = *this * o;
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& q) {
  Rational k = q;
  k.canonicalize();
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= k;
  return *this;
}

bool operator==(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (p.vars_->empty() || q.vars_->empty()) {
    if (!p.is_constant() || !q.is_constant()) return false;
    return p.constant_term() == q.constant_term();
  }
  p.check_same(q);
  return p.terms_ == q.terms_;
}

LaurentPolynomial LaurentPolynomial::inverse_monomial() const {
  if (terms_.size() != 1) throw std::domain_error("only monomials are invertible");
  LaurentPolynomial r = *this;
  r.terms_.clear();
  Exponents e = terms_.begin()->first;
  for (int& v : e) v = -v;
  r.terms_[e] = 1 / terms_.begin()->second;
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(int k) const {
  if (k < 0) return inverse_monomial().pow(-k);
  LaurentPolynomial result(*vars_, 1);
  result.vars_ = vars_;
  LaurentPolynomial base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::exact_divide(const LaurentPolynomial& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (d.is_monomial()) return *this * d.inverse_monomial();
  if (is_zero()) return *this;
  if (vars_->empty()) return LaurentPolynomial(*d.vars_, constant_term()).exact_divide(d);
  check_same(d);
  const std::size_t n = vars_->size();
  // shift both operands into the polynomial ring, then divide there using
  // lexicographic leading terms; a leading term that does not divide means
  // the quotient is not a Laurent polynomial
  Exponents lo_p(n), lo_d(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo_p[i] = min_degree_in(int(i));
    lo_d[i] = d.min_degree_in(int(i));
  }
  auto shifted = [&](const LaurentPolynomial& p, const Exponents& lo) {
    Exponents neg(n);
    for (std::size_t i = 0; i < n; ++i) neg[i] = -lo[i];
    return p * monomial(*vars_, neg, 1);
  };
  LaurentPolynomial rem = shifted(*this, lo_p);
  LaurentPolynomial dd = shifted(d, lo_d);
  LaurentPolynomial quot(*vars_);
  quot.vars_ = vars_;
  const auto lead_d = *dd.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& lead_r = *rem.terms_.rbegin();
    Exponents e(n);
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = lead_r.first[i] - lead_d.first[i];
      if (e[i] < 0) throw std::domain_error("division is not exact");
    }
    LaurentPolynomial t = monomial(*vars_, e, lead_r.second / lead_d.second);
    quot += t;
    rem -= t * dd;
  }
  Exponents back(n);
  for (std::size_t i = 0; i < n; ++i) back[i] = lo_p[i] - lo_d[i];
  return quot * monomial(*vars_, back, 1);
}

Rational LaurentPolynomial::evaluate(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> vals(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto it = point.find((*vars_)[i]);
    if (it != point.end()) {
      vals[i] = it->second;
      continue;
    }
    bool used = false;
    for (const auto& [e, c] : terms_)
      if (e[i] != 0) used = true;
    if (used) throw std::invalid_argument("no value for variable " + (*vars_)[i]);
  }
  Rational total = 0;
  Rational term;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (vals[i] == 0) throw std::domain_error("evaluation at zero of a Laurent variable");
      mpz_class num, den;
      int k = std::abs(e[i]);
      mpz_pow_ui(num.get_mpz_t(), vals[i].get_num_mpz_t(), k);
      mpz_pow_ui(den.get_mpz_t(), vals[i].get_den_mpz_t(), k);
      Rational f = e[i] > 0 ? Rational(num, den) : Rational(den, num);
      f.canonicalize();
      term *= f;
    }
    total += term;
  }
  total.canonicalize();
  return total;
}

LaurentPolynomial LaurentPolynomial::substitute(const std::string& name, const LaurentPolynomial& value) const {
  int idx = index_of(name);
  if (idx < 0) return *this;
  LaurentPolynomial v = value.vars_->empty() ? LaurentPolynomial(*vars_, value.constant_term()) : value;
  v.check_same(*this);
  // group terms by exponent of the substituted variable
  std::map<int, LaurentPolynomial> groups;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[idx] = 0;
    auto it = groups.find(e[idx]);
    if (it == groups.end()) it = groups.emplace(e[idx], LaurentPolynomial(*vars_)).first;
    it->second.add_term(f, c);
  }
  LaurentPolynomial result(*vars_);
  result.vars_ = vars_;
  for (auto& [k, g] : groups) {
    g.vars_ = vars_;
    result += g * v.pow(k);
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::with_variables(const std::vector<std::string>& vars) const {
  LaurentPolynomial r(vars);
  std::vector<int> map(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), (*vars_)[i]);
    map[i] = it == vars.end() ? -1 : int(it - vars.begin());
  }
  for (const auto& [e, c] : terms_) {
    Exponents f(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] < 0) throw std::invalid_argument("variable " + (*vars_)[i] + " not in target list");
      f[map[i]] = e[i];
    }
    r.add_term(f, c);
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::rename(const std::map<std::string, std::string>& m) const {
  std::vector<std::string> target = *vars_;
  std::vector<int> perm(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto it = m.find((*vars_)[i]);
    std::string nm = it == m.end() ? (*vars_)[i] : it->second;
    auto jt = std::find(target.begin(), target.end(), nm);
    if (jt == target.end()) throw std::invalid_argument("rename target not in variable list");
    perm[i] = int(jt - target.begin());
  }
  LaurentPolynomial r(*vars_);
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    Exponents f(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[perm[i]] += e[i];
    r.add_term(f, c);
  }
  return r;
}

int LaurentPolynomial::degree_in(int var) const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int LaurentPolynomial::min_degree_in(int var) const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
  return d;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    bool neg = c < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string f = (*vars_)[i];
      if (e[i] != 1) f += "^" + std::to_string(e[i]);
      factors.push_back(f);
    }
    if (factors.empty() || mag != 1) {
      os << mag.get_str();
      if (!factors.empty()) os << "*";
    }
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.to_string(); }

namespace {

struct TermParser {
  const std::string& s;
  std::size_t i = 0;
  const std::vector<std::string>& vars;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse polynomial '" + s + "': " + why);
  }
  long integer() {
    skip();
    std::size_t st = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == st || (i == st + 1 && !std::isdigit(static_cast<unsigned char>(s[st])))) fail("expected integer");
    return std::stol(s.substr(st, i - st));
  }
};

}  // namespace

namespace {

// expr := [+-] term ([+-] term)*, term := factor (* factor)*,
// factor := primary [^ integer], primary := number | name | ( expr )
struct ExprParser : TermParser {
  LaurentPolynomial expr() {
    LaurentPolynomial r(vars);
    skip();
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    r += term() * Rational(sign);
    while (true) {
      skip();
      if (i >= s.size() || (s[i] != '+' && s[i] != '-')) break;
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      r += term() * Rational(sign);
    }
    return r;
  }
  LaurentPolynomial term() {
    LaurentPolynomial r = factor();
    while (true) {
      skip();
      if (i >= s.size() || s[i] != '*') break;
      ++i;
      r = r * factor();
    }
    return r;
  }
  LaurentPolynomial factor() {
    LaurentPolynomial r = primary();
    skip();
    if (i < s.size() && s[i] == '^') {
      ++i;
      long k = integer();
      if (k < 0 && !r.is_monomial()) fail("negative power of a non-monomial");
      r = r.pow(int(k));
    }
    return r;
  }
  LaurentPolynomial primary() {
    skip();
    if (i >= s.size()) fail("dangling operator");
    char ch = s[i];
    if (ch == '(') {
      ++i;
      LaurentPolynomial r = expr();
      skip();
      if (i >= s.size() || s[i] != ')') fail("missing ')'");
      ++i;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t st = i;
      while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
      return LaurentPolynomial(vars, parse_rational(s.substr(st, i - st)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t st = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      std::string name = s.substr(st, i - st);
      if (std::find(vars.begin(), vars.end(), name) == vars.end()) fail("unknown variable " + name);
      return LaurentPolynomial::variable(vars, name);
    }
    fail(std::string("unexpected character '") + ch + "'");
  }
};

}  // namespace

LaurentPolynomial LaurentPolynomial::parse(const std::string& text, const std::vector<std::string>& vars) {
  ExprParser p{{text, 0, vars}};
  p.skip();
  if (p.i >= text.size()) p.fail("empty input");
  LaurentPolynomial r = p.expr();
  p.skip();
  if (p.i < text.size()) p.fail(std::string("unexpected character '") + text[p.i] + "'");
  return r;
}

}  // namespace mtrace
