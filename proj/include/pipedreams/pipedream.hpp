#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <ostream>
#include <tuple>
#include <utility>
#include <vector>

#include "pipedreams/coxeter.hpp"
#include "pipedreams/errors.hpp"
#include "pipedreams/polynomial.hpp"

namespace pipedreams {

/// Ranks are capped so that the n(n-1)/2 staircase positions fit in a
/// 32-bit mask with room to spare.
inline constexpr int kMaxPipeDreamRank = 8;

/// Cell/position bookkeeping for the rank-n staircase. Positions follow
/// the reading order of the word produced by the staircase table: rows top
/// to bottom, each row right to left. Cell (i,j) carries letter i+j-1 and
/// may hold a cross only when i+j <= n.
struct StaircaseTable {
  int n = 1;
  int m = 0;                                  // number of positions
  std::vector<std::pair<int, int>> cell;      // position -> (row, col)
  std::vector<int> letter;                    // position -> letter index
  std::vector<std::vector<int>> pos_at;       // [row][col] -> position

  explicit StaircaseTable(int rank) : n(rank) {
    if (n < 1 || n > kMaxPipeDreamRank)
      throw std::invalid_argument("staircase rank out of supported range");
    m = n * (n - 1) / 2;
    pos_at.assign(n + 1, std::vector<int>(n + 1, -1));
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = n - i; j >= 1; --j) {
        pos_at[i][j] = static_cast<int>(cell.size());
        cell.emplace_back(i, j);
        letter.push_back(i + j - 1);
      }
    }
  }
};

/// The staircase word: (s_{n-1}..s_2 s_1)(s_{n-1}..s_2)...(s_{n-1}).
inline Word staircase_word(int n) {
  const StaircaseTable t(n);
  return Word(n, t.letter);
}

/// A pipe dream on the rank-n staircase, stored as a bitmask of cross
/// positions in reading order.
class PipeDream {
 public:
  PipeDream(int n, std::uint32_t mask) : n_(n), mask_(mask) {
    const StaircaseTable t(n);
    if (t.m < 32 && (mask >> t.m) != 0)
      throw std::invalid_argument("cross mask outside the staircase");
  }

  static PipeDream from_crosses(int n,
                                const std::vector<std::pair<int, int>>& cells) {
    const StaircaseTable t(n);
    std::uint32_t mask = 0;
    for (auto [i, j] : cells) {
      if (i < 1 || j < 1 || i + j > n)
        throw std::invalid_argument("cell not strictly above the antidiagonal");
      mask |= std::uint32_t{1} << t.pos_at[i][j];
    }
    return PipeDream(n, mask);
  }

  int n() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }

  bool has_cross(int i, int j) const {
    if (i < 1 || j < 1 || i + j > n_) return false;
    const StaircaseTable t(n_);
    return mask_ & (std::uint32_t{1} << t.pos_at[i][j]);
  }

  /// Cross cells sorted by (row, col).
  std::vector<std::pair<int, int>> crosses() const {
    const StaircaseTable t(n_);
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < t.m; ++p)
      if (mask_ & (std::uint32_t{1} << p)) out.push_back(t.cell[p]);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Cross positions in reading order (ascending).
  std::vector<int> positions() const {
    std::vector<int> out;
    for (int p = 0; p < n_ * (n_ - 1) / 2; ++p)
      if (mask_ & (std::uint32_t{1} << p)) out.push_back(p);
    return out;
  }

  friend bool operator==(const PipeDream& a, const PipeDream& b) {
    return a.n_ == b.n_ && a.mask_ == b.mask_;
  }
  friend bool operator<(const PipeDream& a, const PipeDream& b) {
    return std::tie(a.n_, a.mask_) < std::tie(b.n_, b.mask_);
  }

 private:
  int n_;
  std::uint32_t mask_;
};

/// The subword of the staircase word selected by the crosses of P.
inline Word word_of(const PipeDream& p) {
  return subword(staircase_word(p.n()), p.mask());
}

namespace detail {

struct StrandTrace {
  std::uint32_t kept_mask;    // crosses surviving reduction
  std::vector<int> endpoint;  // endpoint[r-1]: top column of the strand
                              // leaving the left edge at row r
};

/// Walk the cells in reading order, tracking which strand occupies each
/// column/row frontier edge and the set of strand pairs that have already
/// crossed. A cross whose pair has crossed at an earlier cell is replaced
/// by an elbow, which reroutes everything downstream, exactly as the
/// row-by-row reduction prescribes.
inline StrandTrace trace_strands(int n, std::uint32_t mask) {
  const StaircaseTable t(n);
  std::vector<int> col(n + 1);
  for (int c = 1; c <= n; ++c) col[c] = c;
  std::vector<std::vector<char>> crossed(n + 1, std::vector<char>(n + 1, 0));
  std::uint32_t kept = mask;
  std::vector<int> endpoint(n);
  for (int r = 1; r <= n; ++r) {
    // Antidiagonal cell (r, n+1-r): always an elbow, no strand continues south.
    int west = col[n + 1 - r];
    for (int c = n - r; c >= 1; --c) {
      const int pos = t.pos_at[r][c];
      bool cross = kept & (std::uint32_t{1} << pos);
      if (cross) {
        const int a = std::min(col[c], west), b = std::max(col[c], west);
        if (crossed[a][b]) {
          kept &= ~(std::uint32_t{1} << pos);
          cross = false;
        } else {
          crossed[a][b] = 1;
        }
      }
      if (!cross) std::swap(col[c], west);
    }
    endpoint[r - 1] = west;
  }
  return {kept, std::move(endpoint)};
}

}  // namespace detail

/// Row-by-row reduction: idempotent, removes every cross of a strand pair
/// that has already crossed above.
inline PipeDream reduce(const PipeDream& p) {
  return PipeDream(p.n(), detail::trace_strands(p.n(), p.mask()).kept_mask);
}

/// The strand permutation of reduce(P).
inline Permutation shape(const PipeDream& p) {
  return Permutation(detail::trace_strands(p.n(), p.mask()).endpoint);
}

inline int excess(const PipeDream& p) {
  return p.size() - reduce(p).size();
}

/// Product of x_row over all crosses.
inline Polynomial monomial(const PipeDream& p) {
  std::vector<int> exps(p.n() - 1, 0);
  for (auto [i, j] : p.crosses()) exps[i - 1] += 1;
  return Polynomial::monomial(1, 0, exps);
}

/// Slide move S_i: if the leftmost cross (i,j) of row i is not in column 1
/// and lies strictly right of every cross of row i+1, shift it southwest to
/// (i+1, j-1); when that cell already holds a cross the shifted cross merges
/// into it. Otherwise acts identically.
inline PipeDream slide_move(const PipeDream& p, int i) {
  if (i < 1 || i >= p.n())
    throw std::invalid_argument("slide row index out of range");
  const StaircaseTable t(p.n());
  int leftmost = 0;
  for (int c = 1; c <= p.n() - i; ++c) {
    if (p.mask() & (std::uint32_t{1} << t.pos_at[i][c])) {
      leftmost = c;
      break;
    }
  }
  if (leftmost <= 1) return p;
  int rightmost_below = 0;
  for (int c = 1; c <= p.n() - i - 1; ++c)
    if (p.mask() & (std::uint32_t{1} << t.pos_at[i + 1][c])) rightmost_below = c;
  if (leftmost <= rightmost_below) return p;
  std::uint32_t mask = p.mask();
  mask &= ~(std::uint32_t{1} << t.pos_at[i][leftmost]);
  mask |= std::uint32_t{1} << t.pos_at[i + 1][leftmost - 1];
  return PipeDream(p.n(), mask);
}

inline bool is_quasi_yamanouchi(const PipeDream& p) {
  for (int i = 1; i < p.n(); ++i)
    if (!(slide_move(p, i) == p)) return false;
  return true;
}

/// Apply slide moves until quasi-Yamanouchi; the fixed point is independent
/// of the order in which moves are applied.
inline PipeDream destandardize(const PipeDream& p) {
  PipeDream cur = p;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i < cur.n(); ++i) {
      PipeDream next = slide_move(cur, i);
      if (!(next == cur)) {
        cur = next;
        moved = true;
      }
    }
  }
  return cur;
}

namespace detail {

inline bool position_lex_less(std::uint32_t a, std::uint32_t b) {
  while (a && b) {
    const int pa = std::countr_zero(a), pb = std::countr_zero(b);
    if (pa != pb) return pa < pb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace detail

/// All pipe dreams of shape w: position subsets whose word has Demazure
/// product w (reduced_only restricts to subsets of size l(w)). Brute force
/// over all staircase subsets; results sorted by position set.
inline std::vector<PipeDream> enumerate_pipe_dreams(const Permutation& w,
                                                    bool reduced_only) {
  const int n = w.rank();
  const StaircaseTable t(n);
  const int target_len = w.length();
  std::vector<PipeDream> out;
  const std::uint32_t limit = std::uint32_t{1} << t.m;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (reduced_only && std::popcount(mask) != target_len) continue;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      const int l = t.letter[std::countr_zero(rest)];
      if (img[l - 1] < img[l]) std::swap(img[l - 1], img[l]);
    }
    if (img == w.one_line()) out.emplace_back(n, mask);
  }
  std::sort(out.begin(), out.end(), [](const PipeDream& a, const PipeDream& b) {
    return detail::position_lex_less(a.mask(), b.mask());
  });
  return out;
}

/// A quasi-Yamanouchi pipe dream together with the data the verification
/// suites consume.
struct QuasiYamanouchiCertificate {
  PipeDream dream;
  Word word;
  bool reduced = false;
  int excess = 0;
};

inline std::vector<QuasiYamanouchiCertificate> enumerate_quasi_yamanouchi(
    const Permutation& w, bool reduced_only) {
  std::vector<QuasiYamanouchiCertificate> out;
  for (const PipeDream& p : enumerate_pipe_dreams(w, reduced_only)) {
    if (!is_quasi_yamanouchi(p)) continue;
    const int ex = excess(p);
    out.push_back({p, word_of(p), ex == 0, ex});
  }
  return out;
}

inline Polynomial schubert_from_pipedreams(const Permutation& w) {
  Polynomial sum = Polynomial::zero(w.rank() - 1);
  for (const PipeDream& p : enumerate_pipe_dreams(w, true)) sum = sum + monomial(p);
  return sum;
}

inline Polynomial grothendieck_from_pipedreams(const Permutation& w) {
  Polynomial sum = Polynomial::zero(w.rank() - 1);
  const Polynomial b = Polynomial::beta(w.rank() - 1);
  for (const PipeDream& p : enumerate_pipe_dreams(w, false)) {
    Polynomial term = monomial(p);
    for (int t = 0; t < excess(p); ++t) term = term * b;
    sum = sum + term;
  }
  return sum;
}

/// Members of the glide orbit of Q: every pipe dream of the same shape that
/// destandardizes to Q.
inline std::vector<PipeDream> glide_orbit(const PipeDream& q) {
  if (!is_quasi_yamanouchi(q))
    throw NotQuasiYamanouchi("glide orbit requires a quasi-Yamanouchi dream");
  std::vector<PipeDream> out;
  for (const PipeDream& p : enumerate_pipe_dreams(shape(q), false))
    if (destandardize(p) == q) out.push_back(p);
  return out;
}

inline std::vector<PipeDream> slide_orbit(const PipeDream& q) {
  if (!is_quasi_yamanouchi(q))
    throw NotQuasiYamanouchi("slide orbit requires a quasi-Yamanouchi dream");
  if (excess(q) != 0)
    throw NotReduced("slide orbit requires a reduced dream");
  std::vector<PipeDream> out;
  for (const PipeDream& p : enumerate_pipe_dreams(shape(q), true))
    if (destandardize(p) == q) out.push_back(p);
  return out;
}

inline Polynomial slide_polynomial(const PipeDream& q) {
  Polynomial sum = Polynomial::zero(q.n() - 1);
  for (const PipeDream& p : slide_orbit(q)) sum = sum + monomial(p);
  return sum;
}

inline Polynomial glide_polynomial(const PipeDream& q) {
  const int exq = excess(q);
  Polynomial sum = Polynomial::zero(q.n() - 1);
  const Polynomial b = Polynomial::beta(q.n() - 1);
  for (const PipeDream& p : glide_orbit(q)) {
    Polynomial term = monomial(p);
    for (int t = 0; t < excess(p) - exq; ++t) term = term * b;
    sum = sum + term;
  }
  return sum;
}

/// Glide orbits of every dream of shape w, keyed by the orbit's
/// quasi-Yamanouchi representative.
inline std::map<PipeDream, std::vector<PipeDream>> glide_orbits_by_shape(
    const Permutation& w) {
  std::map<PipeDream, std::vector<PipeDream>> orbits;
  for (const PipeDream& p : enumerate_pipe_dreams(w, false))
    orbits.emplace(destandardize(p), std::vector<PipeDream>{}).first->second.push_back(p);
  return orbits;
}

/// Every staircase subset, grouped by the shape it realizes. One pass over
/// all 2^(n(n-1)/2) subsets, so bulk sweeps do not rescan per permutation.
inline std::map<Permutation, std::vector<PipeDream>> pipe_dreams_grouped_by_shape(
    int n) {
  const StaircaseTable t(n);
  std::map<Permutation, std::vector<PipeDream>> groups;
  const std::uint64_t limit = std::uint64_t{1} << t.m;
  for (std::uint64_t sub = 0; sub < limit; ++sub) {
    const auto mask = static_cast<std::uint32_t>(sub);
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      const int l = t.letter[std::countr_zero(rest)];
      if (img[l - 1] < img[l]) std::swap(img[l - 1], img[l]);
    }
    groups[Permutation(std::move(img))].emplace_back(n, mask);
  }
  for (auto& [w, dreams] : groups)
    std::sort(dreams.begin(), dreams.end(),
              [](const PipeDream& a, const PipeDream& b) {
                return detail::position_lex_less(a.mask(), b.mask());
              });
  return groups;
}

inline std::ostream& operator<<(std::ostream& os, const PipeDream& p) {
  os << "PipeDream(n=" << p.n() << ", {";
  bool first = true;
  for (auto [i, j] : p.crosses()) {
    os << (first ? "" : ",") << "(" << i << "," << j << ")";
    first = false;
  }
  return os << "})";
}

}  // namespace pipedreams
