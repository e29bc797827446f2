#include "mtrace/skein.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace mtrace {

namespace {

using Cross = std::array<int, 4>;

struct Occ {
  int c, p;
};

SkeinStats g_stats;

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

// renumber labels densely in order of appearance
void relabel(std::vector<Cross>& xs) {
  std::unordered_map<int, int> m;
  for (auto& x : xs)
    for (int& l : x) {
      auto [it, fresh] = m.emplace(l, int(m.size()));
      l = it->second;
    }
}

// occurrences of each label, labels assumed dense 0..2C-1
std::vector<std::array<Occ, 2>> occurrences(const std::vector<Cross>& xs) {
  std::vector<std::array<Occ, 2>> at(2 * xs.size(), {Occ{-1, -1}, Occ{-1, -1}});
  for (int c = 0; c < int(xs.size()); ++c)
    for (int p = 0; p < 4; ++p) {
      auto& slot = at.at(xs[c][p]);
      if (slot[0].c < 0)
        slot[0] = {c, p};
      else
        slot[1] = {c, p};
    }
  return at;
}

Occ other_end(const std::vector<std::array<Occ, 2>>& at, int label, int c, int p) {
  const auto& s = at[label];
  if (s[0].c == c && s[0].p == p) return s[1];
  return s[0];
}

// Delete `dead` crossings, joining the given port pairs.  Strands closed up
// entirely inside the deleted region become free loops.
PlanarDiagram splice(const PlanarDiagram& d, const std::vector<int>& dead,
                     const std::vector<std::pair<Occ, Occ>>& pairs) {
  int E = 2 * d.crossing_count();
  UnionFind uf(E);
  for (const auto& [u, v] : pairs) uf.unite(d.crossings[u.c][u.p], d.crossings[v.c][v.p]);
  std::vector<char> is_dead(d.crossings.size(), 0);
  for (int c : dead) is_dead[c] = 1;
  PlanarDiagram out;
  out.loops = d.loops;
  std::vector<char> live(E, 0), counted(E, 0);
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (is_dead[c]) continue;
    Cross x;
    for (int p = 0; p < 4; ++p) {
      x[p] = uf.find(d.crossings[c][p]);
      live[x[p]] = 1;
    }
    out.crossings.push_back(x);
  }
  for (int c : dead)
    for (int p = 0; p < 4; ++p) {
      int r = uf.find(d.crossings[c][p]);
      if (!live[r] && !counted[r]) {
        counted[r] = 1;
        ++out.loops;
      }
    }
  relabel(out.crossings);
  return out;
}

std::vector<std::pair<Occ, Occ>> pairs_at(int c, std::initializer_list<std::pair<int, int>> ports) {
  std::vector<std::pair<Occ, Occ>> r;
  for (auto [p, q] : ports) r.push_back({Occ{c, p % 4}, Occ{c, q % 4}});
  return r;
}

// Removes one Reidemeister I curl if present; adds +-1 to `curl`.
bool remove_curl(PlanarDiagram& d, int& curl) {
  for (int c = 0; c < d.crossing_count(); ++c)
    for (int p = 0; p < 4; ++p)
      if (d.crossings[c][p] == d.crossings[c][(p + 1) % 4]) {
        curl += (p % 2 == 0) ? 1 : -1;
        d = splice(d, {c}, pairs_at(c, {{p + 1, p + 2}, {p + 3, p}}));
        return true;
      }
  return false;
}

// Removes one Reidemeister II bigon (same strand over at both crossings).
bool remove_bigon(PlanarDiagram& d) {
  auto at = occurrences(d.crossings);
  for (int c1 = 0; c1 < d.crossing_count(); ++c1)
    for (int i = 0; i < 4; ++i) {
      int e = d.crossings[c1][i], f = d.crossings[c1][(i + 1) % 4];
      if (e == f) continue;
      Occ o = other_end(at, e, c1, i);
      if (o.c == c1) continue;
      int c2 = o.c, j = o.p;
      if (d.crossings[c2][(j + 3) % 4] != f) continue;
      Occ of = other_end(at, f, c1, (i + 1) % 4);
      if (of.c != c2 || of.p != (j + 3) % 4) continue;
      if (i % 2 != j % 2) continue;
      std::vector<std::pair<Occ, Occ>> pr = pairs_at(c1, {{i, i + 2}, {i + 1, i + 3}});
      auto p2 = pairs_at(c2, {{j, j + 2}, {j + 1, j + 3}});
      pr.insert(pr.end(), p2.begin(), p2.end());
      d = splice(d, {c1, c2}, pr);
      return true;
    }
  return false;
}

struct Walk {
  std::vector<std::vector<Occ>> comps;  // entry visits per component
  std::vector<int> order;               // crossings by first visit
  std::vector<int> first_entry;         // port of first entry per crossing
};

Walk walk(const std::vector<Cross>& xs, const std::vector<std::array<Occ, 2>>& at, int c0, int p0) {
  int C = int(xs.size());
  Walk w;
  w.first_entry.assign(C, -1);
  std::vector<std::array<char, 2>> seen(C, {0, 0});
  Occ start{c0, p0};
  while (true) {
    w.comps.emplace_back();
    int c = start.c, p = start.p;
    do {
      if (w.first_entry[c] < 0) {
        w.first_entry[c] = p;
        w.order.push_back(c);
      }
      seen[c][p % 2] = 1;
      w.comps.back().push_back({c, p});
      int out = (p + 2) % 4;
      Occ o = other_end(at, xs[c][out], c, out);
      c = o.c;
      p = o.p;
    } while (!(c == start.c && p == start.p));
    bool found = false;
    for (int k : w.order) {
      for (int s = 0; s < 2 && !found; ++s) {
        if (seen[k][s]) continue;
        int off = w.first_entry[k] - w.first_entry[k] % 2;
        start = {k, (off + s) % 4};
        found = true;
      }
      if (found) break;
    }
    if (!found) break;
  }
  return w;
}

struct Canonical {
  std::string key;
  PlanarDiagram diagram;
  int start_port = 0;
};

// Minimal traversal code over every possible entry point; the diagram must be
// connected.
Canonical canonical_form(const PlanarDiagram& d) {
  int C = d.crossing_count();
  auto at = occurrences(d.crossings);
  Canonical best;
  std::vector<int> code, best_code;
  for (int c0 = 0; c0 < C; ++c0)
    for (int p0 = 0; p0 < 4; ++p0) {
      Walk w = walk(d.crossings, at, c0, p0);
      if (int(w.order.size()) != C) throw std::logic_error("canonical_form on a split diagram");
      std::vector<int> lab(2 * C, -1);
      int next = 0;
      for (const auto& comp : w.comps)
        for (const auto& v : comp) {
          int e = d.crossings[v.c][(v.p + 2) % 4];
          if (lab[e] < 0) lab[e] = next++;
        }
      code.assign(1, p0 % 2);
      for (int c : w.order) {
        int off = w.first_entry[c] - w.first_entry[c] % 2;
        for (int j = 0; j < 4; ++j) code.push_back(lab[d.crossings[c][(off + j) % 4]]);
      }
      if (best_code.empty() || code < best_code) best_code = code;
    }
  best.start_port = best_code[0];
  best.key.reserve(best_code.size());
  for (int v : best_code) best.key.push_back(char(v));
  best.diagram.crossings.resize(C);
  for (int c = 0; c < C; ++c)
    for (int j = 0; j < 4; ++j) best.diagram.crossings[c][j] = best_code[1 + 4 * c + j];
  return best;
}

std::vector<PlanarDiagram> split_pieces(const PlanarDiagram& d) {
  int C = d.crossing_count();
  UnionFind uf(C);
  auto at = occurrences(d.crossings);
  for (const auto& s : at) uf.unite(s[0].c, s[1].c);
  std::map<int, PlanarDiagram> groups;
  for (int c = 0; c < C; ++c) groups[uf.find(c)].crossings.push_back(d.crossings[c]);
  std::vector<PlanarDiagram> out;
  for (auto& [r, g] : groups) {
    relabel(g.crossings);
    out.push_back(std::move(g));
  }
  return out;
}

template <class V>
struct SkeinRing {
  V one, alpha, alpha_inv, z, delta;
};

template <class V>
V power(const V& one, const V& base, int k) {
  V r = one;
  for (int i = 0; i < k; ++i) r = r * base;
  return r;
}

template <class V>
class Engine {
 public:
  Engine(SkeinRing<V> ring, Variant v) : r_(std::move(ring)), variant_(v) {}

  V eval(PlanarDiagram d, bool memo) {
    ++g_stats.evaluations;
    int curl = 0;
    while (remove_curl(d, curl) || remove_bigon(d)) {
    }
    auto pieces = split_pieces(d);
    int total = int(pieces.size()) + d.loops;
    if (total == 0) throw std::logic_error("empty diagram in skein recursion");
    V result = curl >= 0 ? power(r_.one, r_.alpha, curl) : power(r_.one, r_.alpha_inv, -curl);
    result = result * power(r_.one, r_.delta, total - 1);
    for (const auto& p : pieces) result = result * connected(p, memo);
    return result;
  }

 private:
  V connected(const PlanarDiagram& piece, bool memo) {
    Canonical cf = canonical_form(piece);
    if (memo) {
      auto it = memo_.find(cf.key);
      if (it != memo_.end()) {
        ++g_stats.memo_hits;
        return it->second;
      }
    }
    V val = telescope(cf.diagram, cf.start_port, memo);
    if (memo) memo_.emplace(cf.key, val);
    return val;
  }

  // Switch the crossings met first from below, one at a time, until the
  // diagram is descending; each switch contributes the two smoothings.
  V telescope(PlanarDiagram d, int start_port, bool memo) {
    const int C = d.crossing_count();
    auto at = occurrences(d.crossings);
    Walk w = walk(d.crossings, at, 0, start_port);
    std::vector<int> u_in(C, -1), o_in(C, -1);
    for (const auto& comp : w.comps)
      for (const auto& v : comp) (v.p % 2 == 0 ? u_in : o_in)[v.c] = v.p;
    int writhe = 0;
    std::vector<int> bad;
    for (int c : w.order) {
      int sign = o_in[c] == (u_in[c] + 3) % 4 ? 1 : -1;
      bool is_bad = w.first_entry[c] % 2 == 0;
      if (is_bad) bad.push_back(c);
      writhe += is_bad ? -sign : sign;
    }
    const bool plus = variant_ == Variant::Plus;
    V sum = r_.one - r_.one;
    bool negate = false;
    for (int c : bad) {
      PlanarDiagram a = splice(d, {c}, pairs_at(c, {{0, 1}, {2, 3}}));
      PlanarDiagram b = splice(d, {c}, pairs_at(c, {{1, 2}, {3, 0}}));
      V term = plus ? eval(a, memo) + eval(b, memo) : eval(a, memo) - eval(b, memo);
      term = r_.z * term;
      sum = negate ? sum - term : sum + term;
      if (plus) negate = !negate;
      auto& x = d.crossings[c];
      x = {x[1], x[2], x[3], x[0]};
    }
    V tail = writhe >= 0 ? power(r_.one, r_.alpha, writhe) : power(r_.one, r_.alpha_inv, -writhe);
    tail = tail * power(r_.one, r_.delta, int(w.comps.size()) - 1);
    return negate ? sum - tail : sum + tail;
  }

  SkeinRing<V> r_;
  Variant variant_;
  std::unordered_map<std::string, V> memo_;
};

const std::vector<std::string> kAlphaZ{"alpha", "z"};
const std::vector<std::string> kAX{"a", "x"};

SkeinRing<LaurentPolynomial> generic_ring(Variant v) {
  SkeinRing<LaurentPolynomial> r;
  r.one = LaurentPolynomial::constant(kAlphaZ, 1);
  r.alpha = LaurentPolynomial::variable(kAlphaZ, "alpha");
  r.alpha_inv = LaurentPolynomial::variable(kAlphaZ, "alpha", -1);
  r.z = LaurentPolynomial::variable(kAlphaZ, "z");
  LaurentPolynomial zi = LaurentPolynomial::variable(kAlphaZ, "z", -1);
  r.delta = v == Variant::Plus ? (r.alpha + r.alpha_inv) * zi - r.one : (r.alpha - r.alpha_inv) * zi + r.one;
  return r;
}

SkeinRing<QuadScalar> point_ring(Variant v, const Rational& a, const Rational& x) {
  if (a == 0 || x == 0) throw std::domain_error("skein point needs a and x nonzero");
  Rational q = 1 / a;  // alpha^2
  SkeinRing<QuadScalar> r;
  r.one = QuadScalar(q, 1);
  r.alpha = QuadScalar(q, 0, 1);
  r.alpha_inv = QuadScalar(q, 0, 1 / q);
  r.z = QuadScalar(q, 0, x);
  QuadScalar zi(q, 0, 1 / (q * x));
  r.delta = v == Variant::Plus ? (r.alpha + r.alpha_inv) * zi - r.one : (r.alpha - r.alpha_inv) * zi + r.one;
  return r;
}

thread_local std::map<Variant, Engine<LaurentPolynomial>> g_generic;
thread_local std::map<std::string, Engine<QuadScalar>> g_points;

Engine<LaurentPolynomial>& generic_engine(Variant v) {
  auto& engines = g_generic;
  auto it = engines.find(v);
  if (it == engines.end()) it = engines.emplace(v, Engine<LaurentPolynomial>(generic_ring(v), v)).first;
  return it->second;
}

Engine<QuadScalar>& point_engine(Variant v, const Rational& a, const Rational& x) {
  auto& engines = g_points;
  std::string key = std::string(variant_name(v)) + "|" + a.get_str() + "|" + x.get_str();
  auto it = engines.find(key);
  if (it == engines.end()) it = engines.emplace(key, Engine<QuadScalar>(point_ring(v, a, x), v)).first;
  return it->second;
}

Rational point_value(const BraidWord& w, Variant v, const Rational& a, const Rational& x, Engine<QuadScalar>& eng) {
  SkeinRing<QuadScalar> r = point_ring(v, a, x);
  QuadScalar k = eng.eval(diagram_from_closure(w), true);
  int wr = w.writhe();
  k = k * (wr >= 0 ? power(r.one, r.alpha_inv, wr) : power(r.one, r.alpha, -wr));
  if (k.v() != 0) throw std::logic_error("skein value at a point is not alpha-free");
  return k.u();
}

}  // namespace

void PlanarDiagram::validate() const {
  std::map<int, int> count;
  for (const auto& x : crossings)
    for (int l : x) ++count[l];
  for (const auto& [l, k] : count)
    if (k != 2) throw std::invalid_argument("label " + std::to_string(l) + " occurs " + std::to_string(k) + " times");
}

int PlanarDiagram::component_count() const {
  int n = loops;
  if (crossings.empty()) return n;
  PlanarDiagram d = *this;
  relabel(d.crossings);
  for (const auto& piece : split_pieces(d)) {
    auto pat = occurrences(piece.crossings);
    n += int(walk(piece.crossings, pat, 0, 0).comps.size());
  }
  return n;
}

std::string PlanarDiagram::to_string() const {
  std::ostringstream os;
  os << "PD[";
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    if (i) os << ", ";
    const auto& x = crossings[i];
    os << "X[" << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << "]";
  }
  os << "] + " << loops << " loops";
  return os.str();
}

Variant parse_variant(const std::string& s) {
  if (s == "+" || s == "plus") return Variant::Plus;
  if (s == "-" || s == "minus") return Variant::Minus;
  throw std::invalid_argument("variant must be + or -");
}

const char* variant_name(Variant v) { return v == Variant::Plus ? "+" : "-"; }

PlanarDiagram diagram_from_closure(const BraidWord& w) {
  int n = w.strands;
  std::vector<int> top(n), cur(n);
  int next = 0;
  for (int i = 0; i < n; ++i) top[i] = cur[i] = next++;
  PlanarDiagram d;
  for (int x : w.letters) {
    int L = std::abs(x) - 1, R = L + 1;
    int tl = cur[L], tr = cur[R], bl = next++, br = next++;
    if (x > 0)
      d.crossings.push_back({tl, bl, br, tr});
    else
      d.crossings.push_back({tr, tl, bl, br});
    cur[L] = bl;
    cur[R] = br;
  }
  // closing arcs: bottom label at position i is the top label at position i
  std::unordered_map<int, int> close;
  for (int i = 0; i < n; ++i) {
    if (cur[i] == top[i])
      ++d.loops;
    else
      close[cur[i]] = top[i];
  }
  for (auto& x : d.crossings)
    for (int& l : x) {
      auto it = close.find(l);
      if (it != close.end()) l = it->second;
    }
  relabel(d.crossings);
  return d;
}

LaurentPolynomial kauffman_eval(const PlanarDiagram& d, Variant v, bool memo) {
  d.validate();
  PlanarDiagram c = d;
  relabel(c.crossings);
  if (memo) return generic_engine(v).eval(c, true);
  Engine<LaurentPolynomial> fresh(generic_ring(v), v);
  return fresh.eval(c, false);
}

LaurentPolynomial markov_trace_pm(const BraidWord& w, Variant v, bool memo) {
  LaurentPolynomial k = kauffman_eval(diagram_from_closure(w), v, memo);
  k *= LaurentPolynomial::variable(kAlphaZ, "alpha", -w.writhe());
  LaurentPolynomial out(kAX);
  for (const auto& [e, c] : k.terms()) {
    int i = e[0], j = e[1];
    if ((i + j) % 2 != 0)
      throw std::logic_error("skein normalization left an odd alpha*z monomial: " + k.to_string());
    out += LaurentPolynomial::monomial(kAX, {-(i + j) / 2, j}, c);
  }
  return out;
}

Rational markov_trace_pm_at(const BraidWord& w, Variant v, const Rational& a, const Rational& x) {
  return point_value(w, v, a, x, point_engine(v, a, x));
}

ParityScalar kauffman_at_point(const BraidWord& w, const Rational& k) {
  Rational plus = markov_trace_pm_at(w, Variant::Plus, 1, k);
  Rational minus = markov_trace_pm_at(w, Variant::Minus, -1, -k);
  return ParityScalar::from_values(plus, minus);
}

ParityScalar kauffman_at_x2a(const BraidWord& w) { return kauffman_at_point(w, 2); }

bool variant_sign_relation(const BraidWord& w) {
  LaurentPolynomial tp = markov_trace_pm(w, Variant::Plus);
  LaurentPolynomial tm = markov_trace_pm(w, Variant::Minus);
  // tau^-(-a,-x): a monomial a^i x^j picks up (-1)^{i+j}
  LaurentPolynomial flipped(tm.variables());
  for (const auto& [e, c] : tm.terms())
    flipped += LaurentPolynomial::monomial(tm.variables(), e, ((e[0] + e[1]) % 2 == 0) ? c : Rational(-c));
  if (component_count(w) % 2 == 0) tp = -tp;
  return flipped == tp;
}

bool variant_sign_relation_at_points(const BraidWord& w, int points, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-1000003, 1000003);
  std::uniform_int_distribution<long> den(1, 997);
  int sign = component_count(w) % 2 == 0 ? -1 : 1;
  for (int i = 0; i < points; ++i) {
    Rational a, x;
    do a = Rational(num(rng), den(rng)); while (a == 0);
    do x = Rational(num(rng), den(rng)); while (x == 0);
    a.canonicalize();
    x.canonicalize();
    Engine<QuadScalar> em(point_ring(Variant::Minus, -a, -x), Variant::Minus);
    Engine<QuadScalar> ep(point_ring(Variant::Plus, a, x), Variant::Plus);
    Rational lhs = point_value(w, Variant::Minus, -a, -x, em);
    Rational rhs = point_value(w, Variant::Plus, a, x, ep);
    if (lhs != sign * rhs) return false;
  }
  return true;
}

SkeinStats skein_stats() { return g_stats; }

void reset_skein_caches() {
  g_stats = {};
  g_generic.clear();
  g_points.clear();
}

}  // namespace mtrace
