#include "mtrace/braid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mtrace {

Permutation::Permutation(int n) : images_(n) {
  for (int i = 0; i < n; ++i) images_[i] = i;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= int(images_.size()) || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::then(const Permutation& o) const {
  std::vector<int> r(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r[i] = o.images_[images_[i]];
  return Permutation(std::move(r));
}

Permutation Permutation::inverse() const {
  std::vector<int> r(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r[images_[i]] = int(i);
  return Permutation(std::move(r));
}

int Permutation::cycle_count() const {
  std::vector<char> seen(images_.size(), 0);
  int c = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (int j = int(i); !seen[j]; j = images_[j]) seen[j] = 1;
  }
  return c;
}

int Permutation::inversions() const {
  int k = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++k;
  return k;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != int(i)) return false;
  return true;
}

BraidWord::BraidWord(int n, std::vector<int> l) : strands(n), letters(std::move(l)) {
  if (n < 1) throw std::invalid_argument("braid needs at least one strand");
  for (int x : letters)
    if (x == 0 || std::abs(x) >= n)
      throw std::invalid_argument("generator index " + std::to_string(x) + " out of range for " +
                                  std::to_string(n) + " strands");
}

int BraidWord::writhe() const {
  int s = 0;
  for (int x : letters) s += x > 0 ? 1 : -1;
  return s;
}

std::string BraidWord::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(letters[i]);
  }
  return s;
}

BraidWord parse_braid(const std::string& text, int strands) {
  std::istringstream in(text);
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad braid token '" + tok + "'");
    }
    if (pos != tok.size()) throw std::invalid_argument("bad braid token '" + tok + "'");
    letters.push_back(v);
  }
  return BraidWord(strands, std::move(letters));
}

Permutation braid_permutation(const BraidWord& w) {
  // position -> strand currently there; result maps start position to end position
  std::vector<int> at(w.strands);
  for (int i = 0; i < w.strands; ++i) at[i] = i;
  for (int x : w.letters) {
    int i = std::abs(x) - 1;
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> img(w.strands);
  for (int p = 0; p < w.strands; ++p) img[at[p]] = p;
  return Permutation(std::move(img));
}

int component_count(const BraidWord& w) { return braid_permutation(w).cycle_count(); }

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  int n = std::max(u.strands, v.strands);
  std::vector<int> l = u.letters;
  l.insert(l.end(), v.letters.begin(), v.letters.end());
  return BraidWord(n, std::move(l));
}

BraidWord inverse(const BraidWord& w) {
  std::vector<int> l(w.letters.rbegin(), w.letters.rend());
  for (int& x : l) x = -x;
  return BraidWord(w.strands, std::move(l));
}

BraidWord mirror(const BraidWord& w) {
  std::vector<int> l = w.letters;
  for (int& x : l) x = -x;
  return BraidWord(w.strands, std::move(l));
}

BraidWord reverse(const BraidWord& w) {
  return BraidWord(w.strands, std::vector<int>(w.letters.rbegin(), w.letters.rend()));
}

BraidWord widen(const BraidWord& w, int strands) {
  if (strands < w.strands) throw std::invalid_argument("cannot narrow a braid");
  return BraidWord(strands, w.letters);
}

BraidWord markov_move(const BraidWord& w, MarkovMove m, const BraidWord& g) {
  switch (m) {
    case MarkovMove::Conjugate: {
      if (g.strands > w.strands) throw std::invalid_argument("conjugator on too many strands");
      return concat(concat(inverse(widen(g, w.strands)), w), widen(g, w.strands));
    }
    case MarkovMove::StabilizePos:
    case MarkovMove::StabilizeNeg: {
      std::vector<int> l = w.letters;
      l.push_back(m == MarkovMove::StabilizePos ? w.strands : -w.strands);
      return BraidWord(w.strands + 1, std::move(l));
    }
  }
  return w;
}

bool is_destabilizable(const BraidWord& w) {
  if (w.letters.empty() || w.strands < 2) return false;
  int last = std::abs(w.letters.back());
  if (last != w.strands - 1) return false;
  for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
    if (std::abs(w.letters[i]) == last) return false;
  return true;
}

BraidWord destabilize(const BraidWord& w) {
  if (!is_destabilizable(w)) throw std::invalid_argument("word is not a stabilization");
  return BraidWord(w.strands - 1, std::vector<int>(w.letters.begin(), w.letters.end() - 1));
}

ParityScalar parity_invariant(const BraidWord& w) { return ParityScalar::a_pow(component_count(w)); }

BraidSampler::BraidSampler(std::uint64_t seed, int max_strands, int max_length, int min_strands)
    : rng_(seed), max_strands_(max_strands), max_length_(max_length), min_strands_(min_strands) {}

BraidWord BraidSampler::next() {
  std::uniform_int_distribution<int> ns(min_strands_, max_strands_);
  return next_on(ns(rng_), max_length_);
}

BraidWord BraidSampler::next_on(int n, int max_length) {
  if (n < 2) return BraidWord(n, {});
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution sign(0.5);
  int L = len(rng_);
  std::vector<int> l;
  for (int i = 0; i < L; ++i) l.push_back(sign(rng_) ? gen(rng_) : -gen(rng_));
  return BraidWord(n, std::move(l));
}

BraidWord BraidSampler::random_move(const BraidWord& w, MarkovMove* which) {
  std::uniform_int_distribution<int> pick(w.strands >= 2 ? 0 : 1, 2);
  MarkovMove m = static_cast<MarkovMove>(pick(rng_));
  if (which) *which = m;
  if (m == MarkovMove::Conjugate) return markov_move(w, m, next_on(w.strands, 3));
  return markov_move(w, m);
}

}  // namespace mtrace
