#include "mtrace/coxeter.hpp"

#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mtrace/hecke.hpp"
#include "mtrace/quotient.hpp"
#include "mtrace/skein.hpp"

namespace mtrace {

CoxeterSystem CoxeterSystem::type_a(int strands) {
  if (strands < 1) throw std::invalid_argument("type A needs at least one strand");
  CoxeterSystem c;
  c.kind_ = Kind::TypeA;
  c.param_ = strands;
  return c;
}

CoxeterSystem CoxeterSystem::dihedral(int m) {
  if (m < 2) throw std::invalid_argument("dihedral order must be at least 2");
  CoxeterSystem c;
  c.kind_ = Kind::Dihedral;
  c.param_ = m;
  return c;
}

int CoxeterSystem::rank() const { return kind_ == Kind::TypeA ? param_ - 1 : 2; }

std::string CoxeterSystem::name() const {
  if (kind_ == Kind::TypeA) return "A" + std::to_string(param_ - 1);
  return "I2(" + std::to_string(param_) + ")";
}

CoxeterSystem::Element CoxeterSystem::identity() const {
  if (kind_ == Kind::TypeA) return Permutation(param_).images();
  return {0, 0};
}

int CoxeterSystem::length(const Element& w) const {
  if (kind_ == Kind::TypeA) return Permutation(w).inversions();
  return w[1];
}

CoxeterSystem::Element CoxeterSystem::left_multiply(int g, const Element& w) const {
  if (g < 1 || g > rank()) throw std::out_of_range("generator index out of range for " + name());
  if (kind_ == Kind::TypeA) return transposition(param_, g).then(Permutation(w)).images();
  int m = param_, first = w[0], len = w[1];
  int other = 3 - g;
  Element r;
  if (len == 0)
    r = {g, 1};
  else if (len == m)
    r = {other, m - 1};  // write the longest element starting with g
  else if (g == first)
    r = len == 1 ? Element{0, 0} : Element{3 - first, len - 1};
  else
    r = {g, len + 1};
  if (r[1] == m) r[0] = 1;
  return r;
}

int CoxeterSystem::braid_order(int i, int j) const {
  if (i == j) return 1;
  if (kind_ == Kind::Dihedral) return param_;
  return std::abs(i - j) == 1 ? 3 : 2;
}

std::vector<CoxeterSystem::Element> CoxeterSystem::elements() const {
  std::set<Element> seen{identity()};
  std::deque<Element> q{identity()};
  std::vector<Element> out;
  while (!q.empty()) {
    Element w = q.front();
    q.pop_front();
    out.push_back(w);
    for (int g = 1; g <= rank(); ++g) {
      Element v = left_multiply(g, w);
      if (seen.insert(v).second) q.push_back(v);
    }
  }
  return out;
}

std::string CoxeterSystem::element_to_string(const Element& w) const {
  std::vector<int> word;
  if (kind_ == Kind::TypeA) {
    word = reduced_word(Permutation(w));
  } else {
    for (int k = 0, g = w[0]; k < w[1]; ++k, g = 3 - g) word.push_back(g);
  }
  if (word.empty()) return "1";
  std::string s;
  for (int g : word) s += "s" + std::to_string(g);
  return s;
}

ExtHeckeVector ExtHeckeVector::basis(const CoxeterSystem::Element& w) {
  ExtHeckeVector v;
  v.e.emplace(w, ParityScalar(1));
  return v;
}

ExtHeckeVector ExtHeckeVector::central() {
  ExtHeckeVector v;
  v.c = 1;
  return v;
}

void ExtHeckeVector::add(const CoxeterSystem::Element& w, const ParityScalar& x) {
  if (x.is_zero()) return;
  auto it = e.find(w);
  if (it == e.end()) {
    e.emplace(w, x);
    return;
  }
  it->second += x;
  if (it->second.is_zero()) e.erase(it);
}

ExtHeckeVector& ExtHeckeVector::operator+=(const ExtHeckeVector& o) {
  for (const auto& [w, x] : o.e) add(w, x);
  c += o.c;
  return *this;
}

ExtHeckeVector ExtHeckeVector::scaled(const ParityScalar& s) const {
  ExtHeckeVector r;
  for (const auto& [w, x] : e) r.add(w, x * s);
  r.c = c * s;
  return r;
}

std::string ExtHeckeVector::to_string(const CoxeterSystem& cox) const {
  std::ostringstream os;
  bool first = true;
  auto put = [&](const ParityScalar& x, const std::string& name) {
    if (!first) os << " + ";
    first = false;
    os << "(" << x.to_string() << ")" << name;
  };
  if (!c.is_zero()) put(c, "C");
  for (const auto& [w, x] : e) put(x, "E_" + cox.element_to_string(w));
  if (first) os << "0";
  return os.str();
}

ExtHeckeVector act_generator(int letter, const ExtHeckeVector& v, const CoxeterSystem& cox) {
  int g = std::abs(letter);
  if (letter == 0 || g > cox.rank()) throw std::out_of_range("generator index out of range for " + cox.name());
  const ParityScalar a = ParityScalar::a();
  ExtHeckeVector s_v;  // s.v
  s_v.c = a * v.c;
  for (const auto& [w, x] : v.e) {
    auto sw = cox.left_multiply(g, w);
    int len = cox.length(w);
    if (cox.length(sw) > len) {
      s_v.add(sw, x);
    } else {
      s_v.c += ParityScalar(-2) * ParityScalar::a_pow(len) * x;
      s_v.add(w, ParityScalar(2) * a * x);
      s_v.add(sw, -x);
    }
  }
  if (letter > 0) return s_v;
  // s^-1 = 2a - 2C - s, with C.E_w = a^{l(w)} C and C.C = 0
  ExtHeckeVector r;
  r.c = ParityScalar(2) * a * v.c;
  for (const auto& [w, x] : v.e) {
    r.add(w, ParityScalar(2) * a * x);
    r.c += ParityScalar(-2) * ParityScalar::a_pow(cox.length(w)) * x;
  }
  r += s_v.scaled(ParityScalar(-1));
  return r;
}

ExtHeckeVector braid_to_vector(const BraidWord& w, const CoxeterSystem& cox) {
  if (cox.kind() == CoxeterSystem::Kind::TypeA && cox.strands() != w.strands)
    throw std::invalid_argument("braid and Coxeter system have different strand counts");
  ExtHeckeVector v = ExtHeckeVector::basis(cox.identity());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) v = act_generator(*it, v, cox);
  return v;
}

ExtHeckeVector braid_to_vector(const BraidWord& w) { return braid_to_vector(w, CoxeterSystem::type_a(w.strands)); }

namespace {

class ThmTrace {
 public:
  explicit ThmTrace(ThmTraceConfig cfg) : cfg_(std::move(cfg)) {}

  ParityScalar of_central(int n) const {
    if (n < 2) throw std::domain_error("C does not exist on one strand");
    return ParityScalar::a_pow(n - 2);
  }

  ParityScalar vector(const ExtHeckeVector& v, int n) {
    ParityScalar r = v.c.is_zero() ? ParityScalar(0) : v.c * of_central(n);
    for (const auto& [w, x] : v.e) r += x * basis(Permutation(w));
    return r;
  }

  ParityScalar basis(const Permutation& w) {
    int n = w.size();
    auto it = memo_.find(w.images());
    if (it != memo_.end()) return it->second;
    ParityScalar val;
    if (n == 1) {
      val = ParityScalar(cfg_.lambda);
    } else {
      auto [u, k] = last_strand_decomposition(w);
      if (k == n) {
        int len = w.inversions();
        ParityScalar corr = cfg_.printed_exponent ? ParityScalar::a_pow(len + n)
                                                  : ParityScalar::a() * ParityScalar::a_pow(len) * of_central(n);
        val = ParityScalar::a() * basis(u) + corr;
      } else {
        // E_w = [u] s_{n-1} E_{s_{n-2}...s_k}: drop s_{n-1} and descend one level
        CoxeterSystem lower = CoxeterSystem::type_a(n - 1);
        std::vector<int> tail;
        for (int j = n - 2; j >= k; --j) tail.push_back(j);
        ExtHeckeVector v = braid_to_vector(BraidWord(n - 1, tail), lower);
        std::vector<int> word = reduced_word(u);
        for (auto jt = word.rbegin(); jt != word.rend(); ++jt) v = act_generator(*jt, v, lower);
        val = vector(v, n - 1);
      }
    }
    memo_.emplace(w.images(), val);
    return val;
  }

 private:
  ThmTraceConfig cfg_;
  std::map<std::vector<int>, ParityScalar> memo_;
};

ThmTrace& thm_instance(const ThmTraceConfig& cfg) {
  static thread_local std::map<std::pair<std::string, bool>, ThmTrace> cache;
  auto key = std::make_pair(cfg.lambda.get_str(), cfg.printed_exponent);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, ThmTrace(cfg)).first;
  return it->second;
}

ParityScalar det3(const ParityScalar m[3][3]) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

ParityScalar thm_trace(const ExtHeckeVector& v, int strands, const ThmTraceConfig& cfg) {
  return thm_instance(cfg).vector(v, strands);
}

ParityScalar thm_trace_braid(const BraidWord& w, const ThmTraceConfig& cfg) {
  return thm_trace(braid_to_vector(w), w.strands, cfg);
}

CombinedTrace t0_combination(const ThmTraceConfig& cfg) {
  const BraidWord probes[3] = {BraidWord(3, {}), BraidWord(3, {1}), BraidWord(3, {1, 2})};
  // rows: equations (one per probe); columns: the three traces
  ParityScalar m[3][3];
  for (int i = 0; i < 3; ++i) {
    m[i][0] = thm_trace_braid(probes[i], cfg);
    m[i][1] = homfly_at_x2a(probes[i]);
    m[i][2] = kauffman_at_x2a(probes[i]);
  }
  ParityScalar d = det3(m);
  if (!d.is_unit()) throw std::logic_error("3-strand trace system is singular: det = " + d.to_string());
  ParityScalar rhs[3] = {ParityScalar(1), ParityScalar(0), ParityScalar(0)};
  ParityScalar coef[3];
  for (int j = 0; j < 3; ++j) {
    ParityScalar mj[3][3];
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) mj[i][k] = k == j ? rhs[i] : m[i][k];
    coef[j] = det3(mj) * d.inverse();
  }
  return {coef[0], coef[1], coef[2]};
}

T0Components t0_components(const BraidWord& w, const ThmTraceConfig& cfg) {
  static thread_local std::map<std::pair<std::string, bool>, CombinedTrace> combos;
  auto key = std::make_pair(cfg.lambda.get_str(), cfg.printed_exponent);
  auto it = combos.find(key);
  if (it == combos.end()) it = combos.emplace(key, t0_combination(cfg)).first;
  T0Components r;
  r.coeff = it->second;
  r.thm = thm_trace_braid(w, cfg);
  r.hecke = homfly_at_x2a(w);
  r.kauffman = kauffman_at_x2a(w);
  r.value = r.coeff.c_thm * r.thm + r.coeff.c_hecke * r.hecke + r.coeff.c_kauffman * r.kauffman;
  return r;
}

ParityScalar t0_invariant(const BraidWord& w, const ThmTraceConfig& cfg) { return t0_components(w, cfg).value; }

bool verify_braid_relations(const CoxeterSystem& cox, std::string* why) {
  std::vector<ExtHeckeVector> basis{ExtHeckeVector::central()};
  for (const auto& w : cox.elements()) basis.push_back(ExtHeckeVector::basis(w));
  for (const auto& v : basis) {
    for (int i = 1; i <= cox.rank(); ++i) {
      if (!(act_generator(-i, act_generator(i, v, cox), cox) == v) ||
          !(act_generator(i, act_generator(-i, v, cox), cox) == v)) {
        if (why) *why = "s" + std::to_string(i) + " not invertible on " + v.to_string(cox);
        return false;
      }
      for (int j = i + 1; j <= cox.rank(); ++j) {
        int m = cox.braid_order(i, j);
        ExtHeckeVector l = v, r = v;
        for (int k = 0; k < m; ++k) {
          l = act_generator(k % 2 == 0 ? i : j, l, cox);
          r = act_generator(k % 2 == 0 ? j : i, r, cox);
        }
        if (!(l == r)) {
          if (why)
            *why = "braid relation s" + std::to_string(i) + ",s" + std::to_string(j) + " fails on " +
                   v.to_string(cox);
          return false;
        }
      }
    }
  }
  return true;
}

NonsplitReport nonsplit_certificate() {
  // A_2, basis: C then the six E_w
  const std::vector<std::string> vars{"a", "lambda"};
  CoxeterSystem cox = CoxeterSystem::type_a(3);
  std::vector<CoxeterSystem::Element> els = cox.elements();
  int dim = int(els.size()) + 1;
  auto lift = [&](const ParityScalar& p) {
    return LaurentPolynomial::constant(vars, p.c0()) + LaurentPolynomial::variable(vars, "a") * p.c1();
  };
  using Vec = std::vector<LaurentPolynomial>;
  auto to_vec = [&](const ExtHeckeVector& v) {
    Vec r(dim, LaurentPolynomial(vars));
    r[0] = lift(v.c);
    for (int k = 0; k < int(els.size()); ++k) {
      auto it = v.e.find(els[k]);
      if (it != v.e.end()) r[k + 1] = lift(it->second);
    }
    return r;
  };
  // matrix columns = images of basis vectors
  auto matrix_of = [&](int g) {
    std::vector<Vec> cols;
    cols.push_back(to_vec(act_generator(g, ExtHeckeVector::central(), cox)));
    for (const auto& w : els) cols.push_back(to_vec(act_generator(g, ExtHeckeVector::basis(w), cox)));
    return cols;
  };
  std::vector<Vec> central_cols;
  central_cols.push_back(Vec(dim, LaurentPolynomial(vars)));
  for (const auto& w : els) {
    Vec col(dim, LaurentPolynomial(vars));
    col[0] = lift(ParityScalar::a_pow(cox.length(w)));
    central_cols.push_back(col);
  }
  QuotientSpec quot("a^2=1", {QuotientRule::power_rule("a", 2, 1)});
  LaurentPolynomial a = LaurentPolynomial::variable(vars, "a");
  LaurentPolynomial lambda = LaurentPolynomial::variable(vars, "lambda");
  auto apply = [&](const std::vector<Vec>& cols, const Vec& v) {
    Vec r(dim, LaurentPolynomial(vars));
    for (int j = 0; j < dim; ++j) {
      if (v[j].is_zero()) continue;
      for (int i = 0; i < dim; ++i) r[i] += cols[j][i] * v[j];
    }
    for (auto& x : r) x = quot.reduce(x);
    return r;
  };
  auto s_hat_minus_a = [&](const Vec& v) {
    Vec sv = apply(matrix_of(1), v), cv = apply(central_cols, v);
    Vec r(dim, LaurentPolynomial(vars));
    for (int i = 0; i < dim; ++i) r[i] = quot.reduce(sv[i] + lambda * cv[i] - a * v[i]);
    return r;
  };
  Vec e1 = to_vec(ExtHeckeVector::basis(cox.identity()));
  Vec sq = s_hat_minus_a(s_hat_minus_a(e1));
  NonsplitReport rep;
  Vec expected(dim, LaurentPolynomial(vars));
  expected[0] = a * Rational(-2);
  rep.equals_minus_2aC = sq == expected;
  rep.lambda_free = true;
  for (const auto& x : sq)
    if (x.degree_in(1) != 0 || x.min_degree_in(1) != 0) rep.lambda_free = false;
  Vec tv = apply(matrix_of(2), sq);
  rep.killed_by_t = true;
  for (int i = 0; i < dim; ++i)
    if (!quot.reduce(tv[i] - a * sq[i]).is_zero()) rep.killed_by_t = false;
  std::ostringstream os;
  os << "(" << sq[0].to_string() << ")C";
  for (int k = 0; k < int(els.size()); ++k)
    if (!sq[k + 1].is_zero()) os << " + (" << sq[k + 1].to_string() << ")E_" << cox.element_to_string(els[k]);
  rep.square_on_e1 = os.str();
  return rep;
}

}  // namespace mtrace
