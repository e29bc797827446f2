#include "mtrace/quotient.hpp"

#include <cmath>
#include <stdexcept>

namespace mtrace {

namespace {
const std::vector<std::string> kABC{"a", "b", "c"};
const std::vector<std::string> kAXY{"a", "x", "y"};
}  // namespace

QuotientRule QuotientRule::eliminate(std::string v, LaurentPolynomial value) {
  QuotientRule r;
  r.kind = Kind::Eliminate;
  r.var = std::move(v);
  if (value.index_of(r.var) >= 0) {
    int i = value.index_of(r.var);
    for (const auto& [e, c] : value.terms())
      if (e[i] != 0) throw std::invalid_argument("elimination rule for " + r.var + " is self-referential");
  }
  r.value = std::move(value);
  return r;
}

QuotientRule QuotientRule::power_rule(std::string v, int k, Rational c) {
  if (k < 1) throw std::invalid_argument("power rule needs a positive exponent");
  if (c == 0) throw std::invalid_argument("power rule needs a nonzero constant");
  QuotientRule r;
  r.kind = Kind::Power;
  r.var = std::move(v);
  r.power = k;
  r.constant = std::move(c);
  return r;
}

std::string QuotientRule::to_string() const {
  if (kind == Kind::Eliminate) return var + " -> " + value.to_string();
  return var + "^" + std::to_string(power) + " -> " + constant.get_str();
}

QuotientSpec::QuotientSpec(std::string name, std::vector<QuotientRule> rules)
    : name_(std::move(name)), rules_(std::move(rules)) {
  // eliminations must not reintroduce an eliminated variable later in the
  // list, which is what makes a single ordered pass terminate
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (rules_[i].kind != QuotientRule::Kind::Eliminate) continue;
    for (std::size_t j = i + 1; j < rules_.size(); ++j) {
      if (rules_[j].kind != QuotientRule::Kind::Eliminate) continue;
      int idx = rules_[j].value.index_of(rules_[i].var);
      if (idx < 0) continue;
      for (const auto& [e, c] : rules_[j].value.terms())
        if (e[idx] != 0) throw std::invalid_argument("non-terminating rule set: " + rules_[j].to_string());
    }
  }
}

LaurentPolynomial QuotientSpec::reduce(const LaurentPolynomial& p) const {
  LaurentPolynomial r = p;
  for (const auto& rule : rules_) {
    if (rule.kind != QuotientRule::Kind::Eliminate) continue;
    int idx = r.index_of(rule.var);
    if (idx < 0) continue;
    LaurentPolynomial v = rule.value.variables().empty() || rule.value.variables() == r.variables()
                              ? rule.value
                              : rule.value.with_variables(r.variables());
    r = r.substitute(rule.var, v);
  }
  for (const auto& rule : rules_) {
    if (rule.kind != QuotientRule::Kind::Power) continue;
    int idx = r.index_of(rule.var);
    if (idx < 0) continue;
    LaurentPolynomial out(r.variables());
    for (const auto& [e, c] : r.terms()) {
      int k = e[idx];
      int q = k >= 0 ? k / rule.power : -((-k + rule.power - 1) / rule.power);
      int rem = k - q * rule.power;
      LaurentPolynomial::Exponents f = e;
      f[idx] = rem;
      Rational coeff = c;
      Rational base = rule.constant;
      if (q > 0)
        for (int t = 0; t < q; ++t) coeff *= base;
      else
        for (int t = 0; t < -q; ++t) coeff /= base;
      out += LaurentPolynomial::monomial(r.variables(), f, coeff);
    }
    r = out;
  }
  return r;
}

QuotientSpec QuotientSpec::none() { return QuotientSpec("none", {}); }

QuotientSpec QuotientSpec::r_plus() {
  auto bc = LaurentPolynomial::parse("b*c", kABC);
  return QuotientSpec("R+", {QuotientRule::eliminate("a", bc)});
}

QuotientSpec QuotientSpec::r_minus() {
  auto bc = LaurentPolynomial::parse("-b*c", kABC);
  return QuotientSpec("R-", {QuotientRule::eliminate("a", bc)});
}

QuotientSpec QuotientSpec::s_dagger2() {
  auto binv = LaurentPolynomial::parse("b^-1", kABC);
  return QuotientSpec("S++", {QuotientRule::eliminate("c", binv), QuotientRule::power_rule("a", 2, 1)});
}

QuotientSpec QuotientSpec::ax_plus() {
  return QuotientSpec("a=y", {QuotientRule::eliminate("y", LaurentPolynomial::parse("a", kAXY))});
}

QuotientSpec QuotientSpec::ax_minus() {
  return QuotientSpec("a=-y", {QuotientRule::eliminate("y", LaurentPolynomial::parse("-a", kAXY))});
}

QuotientSpec QuotientSpec::x2a_point() {
  return QuotientSpec("x=2a", {QuotientRule::eliminate("y", LaurentPolynomial::parse("1", kAXY)),
                               QuotientRule::eliminate("x", LaurentPolynomial::parse("2*a", kAXY)),
                               QuotientRule::power_rule("a", 2, 1)});
}

QuotientSpec QuotientSpec::xa_point() {
  return QuotientSpec("x=a", {QuotientRule::eliminate("y", LaurentPolynomial::parse("1", kAXY)),
                              QuotientRule::eliminate("x", LaurentPolynomial::parse("a", kAXY)),
                              QuotientRule::power_rule("a", 2, 1)});
}

QuotientSpec QuotientSpec::xm2a_point() {
  return QuotientSpec("x=-2a", {QuotientRule::eliminate("y", LaurentPolynomial::parse("1", kAXY)),
                                QuotientRule::eliminate("x", LaurentPolynomial::parse("-2*a", kAXY)),
                                QuotientRule::power_rule("a", 2, 1)});
}

QuotientSpec QuotientSpec::by_name(const std::string& name) {
  if (name == "none") return none();
  if (name == "R+") return r_plus();
  if (name == "R-") return r_minus();
  if (name == "S++") return s_dagger2();
  if (name == "a=y") return ax_plus();
  if (name == "a=-y") return ax_minus();
  if (name == "x=2a") return x2a_point();
  if (name == "x=a") return xa_point();
  if (name == "x=-2a") return xm2a_point();
  throw std::invalid_argument("unknown quotient spec: " + name);
}

PointSampler::PointSampler(std::vector<std::string> vars, QuotientSpec spec, std::uint64_t seed)
    : vars_(std::move(vars)), spec_(std::move(spec)), rng_(seed) {}

RingPoint PointSampler::next() {
  std::uniform_int_distribution<std::int64_t> num(-kPitRange, kPitRange);
  std::uniform_int_distribution<std::int64_t> den(1, 1000);
  RingPoint pt;
  std::map<std::string, const QuotientRule*> ruled;
  for (const auto& r : spec_.rules()) ruled[r.var] = &r;
  for (const auto& v : vars_) {
    auto it = ruled.find(v);
    if (it != ruled.end() && it->second->kind == QuotientRule::Kind::Eliminate) continue;
    if (it != ruled.end()) {
      const auto& rule = *it->second;
      // rational k-th root of the constant, when one exists
      Rational c = rule.constant;
      bool found = false;
      for (int sign : {1, -1}) {
        double approx = std::pow(std::abs(c.get_d()), 1.0 / rule.power) * sign;
        Rational cand(static_cast<long>(std::llround(approx)));
        Rational pw = 1;
        for (int t = 0; t < rule.power; ++t) pw *= cand;
        if (pw == c && cand != 0) {
          // choose the sign at random when both roots are rational
          if (!found || (rng_() & 1)) pt.assignment[v] = cand;
          found = true;
        }
      }
      if (!found) throw std::domain_error("no rational root for rule " + rule.to_string());
      continue;
    }
    Rational q;
    do {
      q = Rational(num(rng_), den(rng_));
      q.canonicalize();
    } while (q == 0);
    pt.assignment[v] = q;
  }
  // eliminated variables, in rule order
  for (const auto& r : spec_.rules()) {
    if (r.kind != QuotientRule::Kind::Eliminate) continue;
    pt.assignment[r.var] = r.value.evaluate(pt.assignment);
  }
  return pt;
}

bool PointSampler::satisfies(const RingPoint& p) const {
  for (const auto& r : spec_.rules()) {
    auto it = p.assignment.find(r.var);
    if (it == p.assignment.end()) return false;
    if (r.kind == QuotientRule::Kind::Eliminate) {
      if (r.value.evaluate(p.assignment) != it->second) return false;
    } else {
      Rational pw = 1;
      for (int t = 0; t < r.power; ++t) pw *= it->second;
      if (pw != r.constant) return false;
    }
  }
  return true;
}

namespace {
int total_degree_span(const LaurentPolynomial& p) {
  int d = 0;
  for (std::size_t i = 0; i < p.variables().size(); ++i) d += p.degree_in(int(i)) - p.min_degree_in(int(i));
  return d;
}
}  // namespace

PitResult pit_equal(const LaurentPolynomial& p, const LaurentPolynomial& q, const QuotientSpec& spec,
                    const std::vector<RingPoint>& points) {
  std::vector<std::string> vars = p.variables().empty() ? q.variables() : p.variables();
  PointSampler checker(vars, spec, 0);
  LaurentPolynomial diff = p - q;
  PitResult res;
  res.equal = true;
  for (const auto& pt : points) {
    if (!checker.satisfies(pt)) throw std::invalid_argument("point violates the quotient relations");
    if (diff.evaluate(pt.assignment) != 0) res.equal = false;
    ++res.points;
  }
  double ratio = double(std::max(1, total_degree_span(diff))) / double(2 * kPitRange);
  res.error_bound = res.equal ? std::pow(ratio, res.points) : 0.0;
  return res;
}

PitResult pit_equal(const LaurentPolynomial& p, const LaurentPolynomial& q, const QuotientSpec& spec,
                    int points, std::uint64_t seed) {
  if (points < 5) throw std::invalid_argument("pit_equal needs at least 5 points");
  std::vector<std::string> vars = p.variables().empty() ? q.variables() : p.variables();
  PointSampler sampler(vars, spec, seed);
  std::vector<RingPoint> pts;
  for (int i = 0; i < points; ++i) pts.push_back(sampler.next());
  return pit_equal(p, q, spec, pts);
}

}  // namespace mtrace
