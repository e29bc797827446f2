#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "mtrace/parity_scalar.hpp"

namespace mtrace {

// Bijection of {0..n-1}; images[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);
  explicit Permutation(std::vector<int> images);

  int size() const { return int(images_.size()); }
  int operator[](int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  // this then o (apply this first)
  Permutation then(const Permutation& o) const;
  Permutation inverse() const;
  int cycle_count() const;
  int inversions() const;
  bool is_identity() const;

  friend bool operator==(const Permutation& p, const Permutation& q) { return p.images_ == q.images_; }
  friend bool operator<(const Permutation& p, const Permutation& q) { return p.images_ < q.images_; }

 private:
  std::vector<int> images_;
};

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // +-i for sigma_i^{+-1}, 1 <= i < strands

  BraidWord() = default;
  BraidWord(int n, std::vector<int> l);

  int writhe() const;
  int length() const { return int(letters.size()); }
  std::string to_string() const;
  friend bool operator==(const BraidWord& u, const BraidWord& v) {
    return u.strands == v.strands && u.letters == v.letters;
  }
};

BraidWord parse_braid(const std::string& text, int strands);

Permutation braid_permutation(const BraidWord& w);
int component_count(const BraidWord& w);

BraidWord concat(const BraidWord& u, const BraidWord& v);
BraidWord inverse(const BraidWord& w);
BraidWord mirror(const BraidWord& w);
BraidWord reverse(const BraidWord& w);
// Same word on more strands.
BraidWord widen(const BraidWord& w, int strands);

enum class MarkovMove { Conjugate, StabilizePos, StabilizeNeg };
// g is used only by Conjugate: returns g^-1 w g.
BraidWord markov_move(const BraidWord& w, MarkovMove m, const BraidWord& g = {});
// True when the last letter is +-(n-1) and that index occurs nowhere else.
bool is_destabilizable(const BraidWord& w);
BraidWord destabilize(const BraidWord& w);

// a^{#L} in Q[a]/(a^2-1).
ParityScalar parity_invariant(const BraidWord& w);

template <class Scalar>
Scalar component_trace(const BraidWord& w, const std::map<int, Scalar>& sequence) {
  auto it = sequence.find(component_count(w));
  if (it == sequence.end()) throw std::out_of_range("component count outside sequence domain");
  return it->second;
}

// Seeded random braid generator used by the property suites.
class BraidSampler {
 public:
  BraidSampler(std::uint64_t seed, int max_strands, int max_length, int min_strands = 1);
  BraidWord next();
  BraidWord next_on(int strands, int max_length);
  // Applies a random Markov move; conjugators have length <= 3.
  BraidWord random_move(const BraidWord& w, MarkovMove* which = nullptr);
  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  int max_strands_, max_length_, min_strands_;
};

}  // namespace mtrace
