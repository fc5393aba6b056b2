#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "pipedreams/coxeter.hpp"
#include "pipedreams/errors.hpp"

namespace pipedreams {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent vector of one term: slot 0 is the beta exponent, slot k (k >= 1)
/// is the exponent of x_k. All vectors in one polynomial share the same width.
using ExpVec = std::vector<int>;

/// Canonical term order: beta degree ascending, then the x-part in
/// descending lexicographic order. This is the order every serialization
/// uses, so output is byte-stable.
struct TermOrder {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    if (a[0] != b[0]) return a[0] < b[0];
    return std::lexicographical_compare(b.begin() + 1, b.end(), a.begin() + 1,
                                        a.end());
  }
};

/// Exact multivariate polynomial over Z in x_1..x_{n_vars} and the formal
/// parameter beta. No zero coefficients are ever stored.
class Polynomial {
 public:
  using TermMap = std::map<ExpVec, BigInt, TermOrder>;

  Polynomial() : n_vars_(0) {}

  static Polynomial zero(int n_vars = 0) {
    Polynomial p;
    p.n_vars_ = n_vars;
    return p;
  }

  static Polynomial constant(BigInt c, int n_vars = 0) {
    Polynomial p = zero(n_vars);
    if (c != 0) p.terms_.emplace(ExpVec(n_vars + 1, 0), std::move(c));
    return p;
  }

  static Polynomial x(int i, int n_vars) {
    if (i < 1 || i > n_vars) throw std::invalid_argument("variable index");
    Polynomial p = zero(n_vars);
    ExpVec e(n_vars + 1, 0);
    e[i] = 1;
    p.terms_.emplace(std::move(e), 1);
    return p;
  }

  static Polynomial beta(int n_vars = 0) {
    Polynomial p = zero(n_vars);
    ExpVec e(n_vars + 1, 0);
    e[0] = 1;
    p.terms_.emplace(std::move(e), 1);
    return p;
  }

  static Polynomial monomial(BigInt coeff, int beta_exp,
                             const std::vector<int>& x_exps) {
    Polynomial p = zero(static_cast<int>(x_exps.size()));
    if (coeff != 0) {
      ExpVec e(x_exps.size() + 1, 0);
      e[0] = beta_exp;
      std::copy(x_exps.begin(), x_exps.end(), e.begin() + 1);
      p.terms_.emplace(std::move(e), std::move(coeff));
    }
    return p;
  }

  /// Build from a raw term map (zero coefficients are dropped).
  static Polynomial from_terms(int n_vars, TermMap terms) {
    Polynomial p = zero(n_vars);
    p.terms_ = std::move(terms);
    for (auto it = p.terms_.begin(); it != p.terms_.end();) {
      if (it->second == 0) it = p.terms_.erase(it);
      else ++it;
    }
    return p;
  }

  int n_vars() const { return n_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// The same polynomial viewed in at least `n_vars` x-variables.
  Polynomial widened(int n_vars) const {
    if (n_vars <= n_vars_) return *this;
    Polynomial p = zero(n_vars);
    for (const auto& [e, c] : terms_) {
      ExpVec w(n_vars + 1, 0);
      std::copy(e.begin(), e.end(), w.begin());
      p.terms_.emplace(std::move(w), c);
    }
    return p;
  }

  /// Drop trailing x-variables no term uses, keeping at least `min_vars`.
  Polynomial shrunk(int min_vars = 0) const {
    int width = min_vars;
    for (const auto& [e, c] : terms_)
      for (int k = n_vars_; k > width; --k)
        if (e[k] != 0) {
          width = k;
          break;
        }
    if (width >= n_vars_) return *this;
    Polynomial p = zero(width);
    for (const auto& [e, c] : terms_)
      p.terms_.emplace(ExpVec(e.begin(), e.begin() + width + 1), c);
    return p;
  }

  BigInt coefficient(int beta_exp, const std::vector<int>& x_exps) const {
    ExpVec e(n_vars_ + 1, 0);
    e[0] = beta_exp;
    for (int k = 0; k < static_cast<int>(x_exps.size()); ++k) {
      if (x_exps[k] != 0 && k >= n_vars_) return 0;
      if (k < n_vars_) e[k + 1] = x_exps[k];
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const int w = std::max(a.n_vars_, b.n_vars_);
    Polynomial out = a.widened(w);
    for (const auto& [e, c] : b.widened(w).terms_) out.add_term(e, c);
    return out;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    const int w = std::max(a.n_vars_, b.n_vars_);
    Polynomial out = a.widened(w);
    for (const auto& [e, c] : b.widened(w).terms_) out.add_term(e, -c);
    return out;
  }

  Polynomial operator-() const {
    Polynomial out = zero(n_vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    const int w = std::max(a.n_vars_, b.n_vars_);
    const Polynomial aw = a.widened(w), bw = b.widened(w);
    Polynomial out = zero(w);
    for (const auto& [ea, ca] : aw.terms_) {
      for (const auto& [eb, cb] : bw.terms_) {
        ExpVec e(w + 1);
        for (int k = 0; k <= w; ++k) e[k] = ea[k] + eb[k];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    const int w = std::max(a.n_vars_, b.n_vars_);
    return a.widened(w).terms_ == b.widened(w).terms_;
  }

  /// Exchange the exponents of x_i and x_{i+1} in every term (the action
  /// of s_i on the x-variables).
  Polynomial swapped_x(int i) const {
    if (i < 1 || i + 1 > n_vars_)
      throw std::invalid_argument("swap index out of range");
    Polynomial out = zero(n_vars_);
    for (const auto& [e, c] : terms_) {
      ExpVec f = e;
      std::swap(f[i], f[i + 1]);
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  /// Substitute integers for beta and/or chosen x-variables; unsubstituted
  /// variables stay formal. The result keeps the same variable width.
  Polynomial specialized(std::optional<BigInt> beta_value,
                         const std::vector<std::optional<BigInt>>& x_values)
      const {
    Polynomial out = zero(n_vars_);
    for (const auto& [e, c] : terms_) {
      BigInt coeff = c;
      ExpVec f = e;
      if (beta_value) {
        coeff *= pow_int(*beta_value, e[0]);
        f[0] = 0;
      }
      for (int k = 1; k <= n_vars_; ++k) {
        if (k - 1 < static_cast<int>(x_values.size()) && x_values[k - 1]) {
          coeff *= pow_int(*x_values[k - 1], e[k]);
          f[k] = 0;
        }
      }
      out.add_term(f, coeff);
    }
    return out;
  }

 private:
  static BigInt pow_int(const BigInt& base, int exp) {
    BigInt r = 1;
    for (int t = 0; t < exp; ++t) r *= base;
    return r;
  }

  void add_term(const ExpVec& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int n_vars_;
  TermMap terms_;
};

namespace detail {

/// Exact quotient of `num` by (x_i - x_{i+1}). Valid when num is
/// antisymmetric in x_i, x_{i+1}; each term with exponents a > b in those
/// two slots telescopes to sum_{t<a-b} x_i^{a-1-t} x_{i+1}^{b+t}, and the
/// mirror term with a < b is consumed by the same expansion. A multiply-back
/// check guards the result.
inline Polynomial divide_by_difference(const Polynomial& num, int i) {
  Polynomial::TermMap acc;
  for (const auto& [e, c] : num.terms()) {
    const int a = e[i], b = e[i + 1];
    if (a == b)
      throw InternalError("division by x_i - x_{i+1}: non-antisymmetric input");
    if (a < b) continue;
    for (int t = 0; t < a - b; ++t) {
      ExpVec f = e;
      f[i] = a - 1 - t;
      f[i + 1] = b + t;
      acc[std::move(f)] += c;
    }
  }
  const Polynomial q = Polynomial::from_terms(num.n_vars(), std::move(acc));
  const Polynomial check =
      q * (Polynomial::x(i, num.n_vars()) - Polynomial::x(i + 1, num.n_vars()));
  if (!(check == num))
    throw InternalError("division by x_i - x_{i+1} left a remainder");
  return q;
}

}  // namespace detail

/// Divided difference: (f - s_i f) / (x_i - x_{i+1}).
inline Polynomial divided_difference(int i, const Polynomial& f) {
  if (i < 1) throw std::invalid_argument("operator index must be >= 1");
  const Polynomial g = f.widened(i + 1);
  return detail::divide_by_difference(g - g.swapped_x(i), i);
}

/// beta-isobaric divided difference:
/// ((1 + beta x_{i+1}) f - (1 + beta x_i) s_i f) / (x_i - x_{i+1}).
inline Polynomial isobaric_divided_difference(int i, const Polynomial& f) {
  if (i < 1) throw std::invalid_argument("operator index must be >= 1");
  const int w = std::max(f.n_vars(), i + 1);
  const Polynomial g = f.widened(w);
  const Polynomial one = Polynomial::constant(1, w);
  const Polynomial bxi = Polynomial::beta(w) * Polynomial::x(i, w);
  const Polynomial bxj = Polynomial::beta(w) * Polynomial::x(i + 1, w);
  const Polynomial num = (one + bxj) * g - (one + bxi) * g.swapped_x(i);
  return detail::divide_by_difference(num, i);
}

/// x_1^{n-1} x_2^{n-2} ... x_{n-1}, the top polynomial for rank n.
inline Polynomial staircase_monomial(int n) {
  std::vector<int> exps(n - 1);
  for (int i = 1; i <= n - 1; ++i) exps[i - 1] = n - i;
  return Polynomial::monomial(1, 0, exps);
}

/// Schubert polynomial by the divided-difference recursion from the top
/// element, along a reduced word of w0 w.
inline Polynomial schubert_by_operators(const Permutation& w) {
  const int n = w.rank();
  Polynomial f = staircase_monomial(n);
  for (int letter : some_reduced_word(Permutation::longest(n).compose(w)))
    f = divided_difference(letter, f);
  return f.shrunk(n - 1);
}

/// beta-Grothendieck polynomial by the isobaric recursion; at beta = 0 this
/// reduces to the Schubert polynomial.
inline Polynomial grothendieck_by_operators(const Permutation& w) {
  const int n = w.rank();
  Polynomial f = staircase_monomial(n);
  for (int letter : some_reduced_word(Permutation::longest(n).compose(w)))
    f = isobaric_divided_difference(letter, f);
  return f.shrunk(n - 1);
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const bool negative = c < 0;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    const BigInt a = boost::multiprecision::abs(c);
    std::vector<std::string> factors;
    if (a != 1) factors.push_back(a.str());
    if (e[0] > 0)
      factors.push_back(e[0] == 1 ? "b" : "b^" + std::to_string(e[0]));
    for (int k = 1; k <= f.n_vars(); ++k) {
      if (e[k] > 0) {
        std::string v = "x" + std::to_string(k);
        if (e[k] > 1) v += "^" + std::to_string(e[k]);
        factors.push_back(std::move(v));
      }
    }
    if (factors.empty()) factors.push_back("1");
    for (std::size_t k = 0; k < factors.size(); ++k)
      os << (k ? "*" : "") << factors[k];
  }
  return os;
}

inline std::string to_text(const Polynomial& f) {
  std::ostringstream os;
  os << f;
  return os.str();
}

}  // namespace pipedreams
