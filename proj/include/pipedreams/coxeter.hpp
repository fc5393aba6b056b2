#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <tuple>
#include <vector>

#include "pipedreams/errors.hpp"

namespace pipedreams {

/// Element of the symmetric group S_n in one-line notation.
///
/// Values are 1-based throughout: w(i) is the image of i for 1 <= i <= n.
/// Immutable after construction; every operation returns a new value.
class Permutation {
 public:
  explicit Permutation(int n) : img_(check_rank(n)) {
    std::iota(img_.begin(), img_.end(), 1);
  }

  explicit Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
    const int n = static_cast<int>(img_.size());
    if (n < 1) throw NotABijection("one-line notation must be nonempty");
    std::vector<char> seen(n, 0);
    for (int v : img_) {
      if (v < 1 || v > n || seen[v - 1])
        throw NotABijection("not a bijection of {1.." + std::to_string(n) + "}");
      seen[v - 1] = 1;
    }
  }

  static Permutation identity(int n) { return Permutation(n); }

  /// The longest element w0, mapping i to n+1-i.
  static Permutation longest(int n) {
    std::vector<int> img(check_rank(n));
    for (int i = 0; i < n; ++i) img[i] = n - i;
    return Permutation(std::move(img));
  }

  int rank() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& one_line() const { return img_; }

  bool is_identity() const {
    for (int i = 1; i <= rank(); ++i)
      if (img_[i - 1] != i) return false;
    return true;
  }

  /// Coxeter length: the number of inversions.
  int length() const {
    int count = 0;
    const int n = rank();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (img_[i] > img_[j]) ++count;
    return count;
  }

  /// w * s_i (right action: swaps one-line positions i, i+1).
  Permutation after_right_s(int i) const {
    check_letter(i);
    std::vector<int> img = img_;
    std::swap(img[i - 1], img[i]);
    return Permutation(std::move(img));
  }

  /// s_a * w (left action: swaps values a, a+1 in the one-line notation).
  Permutation after_left_s(int a) const {
    check_letter(a);
    std::vector<int> img = img_;
    for (int& v : img) {
      if (v == a) v = a + 1;
      else if (v == a + 1) v = a;
    }
    return Permutation(std::move(img));
  }

  /// True iff l(w s_i) = l(w) + 1.
  bool right_s_lengthens(int i) const {
    check_letter(i);
    return img_[i - 1] < img_[i];
  }

  /// Composition (this o other)(i) = this(other(i)). Ranks must agree.
  Permutation compose(const Permutation& other) const {
    if (other.rank() != rank())
      throw RankMismatch("composing permutations of different ranks");
    std::vector<int> img(rank());
    for (int i = 0; i < rank(); ++i) img[i] = img_[other.img_[i] - 1];
    return Permutation(std::move(img));
  }

  Permutation inverse() const {
    std::vector<int> img(rank());
    for (int i = 0; i < rank(); ++i) img[img_[i] - 1] = i + 1;
    return Permutation(std::move(img));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return std::tie(a.img_) < std::tie(b.img_);
  }

 private:
  static int check_rank(int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    return n;
  }
  void check_letter(int i) const {
    if (i < 1 || i >= rank())
      throw std::invalid_argument("simple reflection index out of range");
  }

  std::vector<int> img_;
};

/// A word in the simple reflections of S_n: letter k stands for s_k.
/// The rank n is explicit; letters must lie in 1..n-1.
struct Word {
  int n = 1;
  std::vector<int> letters;

  Word() = default;
  Word(int rank, std::vector<int> ls) : n(rank), letters(std::move(ls)) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    for (int l : letters)
      if (l < 1 || l >= n)
        throw std::invalid_argument("letter index out of range for rank " +
                                    std::to_string(n));
  }

  int size() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const Word& a, const Word& b) {
    return a.n == b.n && a.letters == b.letters;
  }
  friend bool operator<(const Word& a, const Word& b) {
    return std::tie(a.n, a.letters) < std::tie(b.n, b.letters);
  }
};

inline Permutation longest_permutation(int n) { return Permutation::longest(n); }

/// Product of the word's letters, left to right, acting on the right.
inline Permutation apply_word(const Word& w) {
  Permutation p = Permutation::identity(w.n);
  for (int l : w.letters) p = p.after_right_s(l);
  return p;
}

inline bool is_reduced_word(const Word& w) {
  return apply_word(w).length() == w.size();
}

/// Demazure product: fold left to right, keeping a letter only if it
/// lengthens the running product.
inline Permutation demazure_product(const Word& w) {
  std::vector<int> img(w.n);
  std::iota(img.begin(), img.end(), 1);
  for (int l : w.letters)
    if (img[l - 1] < img[l]) std::swap(img[l - 1], img[l]);
  return Permutation(std::move(img));
}

/// Collapse every maximal run of equal consecutive letters to one letter.
inline Word tilde_delta(const Word& w) {
  std::vector<int> out;
  for (int l : w.letters)
    if (out.empty() || out.back() != l) out.push_back(l);
  return Word(w.n, std::move(out));
}

/// The subword of `w` selected by the position bitmask (bit p = position p,
/// 0-based, keeping the original order).
inline Word subword(const Word& w, std::uint32_t mask) {
  std::vector<int> out;
  for (int p = 0; p < w.size(); ++p)
    if (mask & (std::uint32_t{1} << p)) out.push_back(w.letters[p]);
  return Word(w.n, std::move(out));
}

/// Some reduced word for w, by greedily peeling the smallest right descent.
/// apply_word of the result (read left to right) equals w.
inline std::vector<int> some_reduced_word(const Permutation& w) {
  std::vector<int> peeled;
  Permutation u = w;
  while (!u.is_identity()) {
    for (int i = 1; i < u.rank(); ++i) {
      if (u(i) > u(i + 1)) {
        peeled.push_back(i);
        u = u.after_right_s(i);
        break;
      }
    }
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

/// All reduced words of w (exponential; intended for small ranks).
inline std::vector<std::vector<int>> all_reduced_words(const Permutation& w) {
  if (w.is_identity()) return {{}};
  std::vector<std::vector<int>> out;
  for (int i = 1; i < w.rank(); ++i) {
    if (w(i) > w(i + 1)) {
      for (auto& r : all_reduced_words(w.after_right_s(i))) {
        r.push_back(i);
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& w) {
  const char* sep = w.rank() >= 10 ? "," : "";
  for (int i = 1; i <= w.rank(); ++i) os << (i > 1 ? sep : "") << w(i);
  return os;
}

inline std::ostream& operator<<(std::ostream& os, const Word& w) {
  for (int i = 0; i < w.size(); ++i) os << (i ? "," : "") << w.letters[i];
  return os;
}

}  // namespace pipedreams
