#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mtrace/braid.hpp"
#include "mtrace/laurent.hpp"
#include "mtrace/parity_scalar.hpp"

namespace mtrace {

// Adjacent transposition (i, i+1), 1-based i, on n points.
Permutation transposition(int n, int i);
// Letters i (1-based) with braid_permutation(word) == p and minimal length.
std::vector<int> reduced_word(const Permutation& p);
// Permutation on n points extending p by fixed points.
Permutation extend(const Permutation& p, int n);
// Write w = u * (s_{n-1} s_{n-2} ... s_k) with u fixing the last point.
// Returns (u restricted to n-1 points, k); k == n means w already fixes it.
std::pair<Permutation, int> last_strand_decomposition(const Permutation& w);

template <class V>
struct HeckeScalars {
  V zero, one, x, y, y_inv, delta;  // delta = (y+1)/x
};

HeckeScalars<LaurentPolynomial> generic_hecke_scalars();     // variables x, y
HeckeScalars<ParityScalar> x2a_hecke_scalars();              // y = 1, x = 2a

template <class V>
struct HeckeElement {
  int n = 1;
  std::map<Permutation, V> terms;

  void add(const Permutation& w, const V& c) {
    auto it = terms.find(w);
    if (it == terms.end()) {
      if (!c.is_zero()) terms.emplace(w, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
  }
};

// Iwahori-Hecke algebra with the quadratic relation T^2 = x T - y and the
// Ocneanu trace, memoized per basis element.
template <class V>
class Hecke {
 public:
  explicit Hecke(HeckeScalars<V> s) : s_(std::move(s)) {}
  const HeckeScalars<V>& scalars() const { return s_; }

  HeckeElement<V> identity(int n) const {
    HeckeElement<V> e;
    e.n = n;
    e.add(Permutation(n), s_.one);
    return e;
  }

  // T_{s_i}^{+-1} * e for letter +-i.
  HeckeElement<V> left_generator(int letter, const HeckeElement<V>& e) const {
    int i = std::abs(letter);
    if (i < 1 || i >= e.n) throw std::out_of_range("Hecke generator out of range");
    Permutation t = transposition(e.n, i);
    HeckeElement<V> r;
    r.n = e.n;
    for (const auto& [w, c] : e.terms) {
      Permutation sw = t.then(w);
      bool ascent = sw.inversions() > w.inversions();
      // T_s T_w
      HeckeElement<V> part;
      part.n = e.n;
      if (ascent) {
        part.add(sw, c);
      } else {
        part.add(w, s_.x * c);
        part.add(sw, -(s_.y * c));
      }
      if (letter > 0) {
        for (const auto& [u, d] : part.terms) r.add(u, d);
      } else {
        // T_s^-1 = (x - T_s)/y
        r.add(w, s_.x * s_.y_inv * c);
        for (const auto& [u, d] : part.terms) r.add(u, -(s_.y_inv * d));
      }
    }
    return r;
  }

  HeckeElement<V> normal_form(const BraidWord& w) const {
    HeckeElement<V> e = identity(w.strands);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) e = left_generator(*it, e);
    return e;
  }

  HeckeElement<V> multiply(const HeckeElement<V>& u, const HeckeElement<V>& v) const {
    if (u.n != v.n) throw std::invalid_argument("Hecke elements on different strand counts");
    HeckeElement<V> r;
    r.n = u.n;
    for (const auto& [w, c] : u.terms) {
      HeckeElement<V> part = v;
      std::vector<int> word = reduced_word(w);
      for (auto it = word.rbegin(); it != word.rend(); ++it) part = left_generator(*it, part);
      for (const auto& [z, d] : part.terms) r.add(z, c * d);
    }
    return r;
  }

  V trace(const HeckeElement<V>& e) {
    V r = s_.zero;
    for (const auto& [w, c] : e.terms) r = r + c * basis_trace(w);
    return r;
  }

  V basis_trace(const Permutation& w) {
    int n = w.size();
    auto key = std::make_pair(n, w.images());
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    V val;
    if (n == 1) {
      val = s_.one;
    } else {
      auto [u, k] = last_strand_decomposition(w);
      if (k == n) {
        val = s_.delta * basis_trace(u);
      } else {
        // T_w = T_u T_{s_{n-1}} T_{s_{n-2}...s_k}; drop the middle factor
        std::vector<int> tail;
        for (int j = n - 2; j >= k; --j) tail.push_back(j);
        HeckeElement<V> e = normal_form(BraidWord(n - 1, tail));
        HeckeElement<V> ue;
        ue.n = n - 1;
        ue.add(u, s_.one);
        val = trace(multiply(ue, e));
      }
    }
    memo_.emplace(key, val);
    return val;
  }

 private:
  HeckeScalars<V> s_;
  std::map<std::pair<int, std::vector<int>>, V> memo_;
};

// Ocneanu trace of the braid in x, y (t_1(1) = 1).
LaurentPolynomial homfly_invariant(const BraidWord& w);
// Same trace at y = 1, x = 2a with a^2 = 1.
ParityScalar homfly_at_x2a(const BraidWord& w);

}  // namespace mtrace
