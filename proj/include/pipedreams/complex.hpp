#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "pipedreams/coxeter.hpp"
#include "pipedreams/errors.hpp"

namespace pipedreams {

inline constexpr int kMaxComplexWordLength = 22;

enum class ComplexKind { subword, slide };
enum class Topology { ball, sphere };

/// A face of a subword/slide complex, stored as the bitmask of deleted
/// positions of the ambient word. The empty face (mask 0) is permitted.
struct Face {
  std::uint32_t deleted = 0;

  int size() const { return std::popcount(deleted); }
  int dim() const { return size() - 1; }
  std::vector<int> positions() const {
    std::vector<int> out;
    for (std::uint32_t rest = deleted; rest; rest &= rest - 1)
      out.push_back(std::countr_zero(rest));
    return out;
  }
  friend bool operator==(const Face& a, const Face& b) {
    return a.deleted == b.deleted;
  }
};

namespace detail {

inline bool face_lex_less(std::uint32_t a, std::uint32_t b) {
  while (a && b) {
    const int pa = std::countr_zero(a), pb = std::countr_zero(b);
    if (pa != pb) return pa < pb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace detail

/// A subword complex (target: permutation, complements contain a reduced
/// word of it) or slide complex (target: word, complements contain it as a
/// subsequence). Faces are complements of containing subwords; facets are
/// the complements of exact occurrences.
struct Complex {
  Word word;
  ComplexKind kind = ComplexKind::subword;
  std::variant<Permutation, Word> target{Permutation(1)};
  std::vector<Face> facets;  // sorted by position set

  int m() const { return word.size(); }
  std::uint32_t full_mask() const {
    return m() == 0 ? 0 : (std::uint32_t{1} << m()) - 1;
  }
  const Permutation& target_perm() const { return std::get<Permutation>(target); }
  const Word& target_word() const { return std::get<Word>(target); }

  /// Common size of all facets, determined by the target.
  int facet_size() const {
    return kind == ComplexKind::subword ? m() - target_perm().length()
                                        : m() - target_word().size();
  }
};

inline Complex build_complex(const Word& q, const Permutation& target) {
  if (q.n != target.rank())
    throw RankMismatch("word and target permutation have different ranks");
  if (q.size() > kMaxComplexWordLength)
    throw std::invalid_argument("ambient word too long");
  Complex c{q, ComplexKind::subword, target, {}};
  const int len = target.length();
  const std::uint32_t full = c.full_mask();
  const std::uint64_t limit = std::uint64_t{1} << q.size();
  for (std::uint64_t sub = 0; sub < limit; ++sub) {
    const auto mask = static_cast<std::uint32_t>(sub);
    if (std::popcount(mask) != len) continue;
    if (apply_word(subword(q, mask)) == target) c.facets.push_back({full ^ mask});
  }
  std::sort(c.facets.begin(), c.facets.end(), [](const Face& a, const Face& b) {
    return detail::face_lex_less(a.deleted, b.deleted);
  });
  return c;
}

inline Complex build_complex(const Word& q, const Word& target) {
  if (q.n != target.n)
    throw RankMismatch("word and target word have different ranks");
  if (q.size() > kMaxComplexWordLength)
    throw std::invalid_argument("ambient word too long");
  Complex c{q, ComplexKind::slide, target, {}};
  const std::uint32_t full = c.full_mask();
  // Occurrences of the target as a subsequence, by depth-first search.
  std::vector<int> chosen;
  std::function<void(int, int)> rec = [&](int from, int si) {
    if (si == target.size()) {
      std::uint32_t mask = 0;
      for (int p : chosen) mask |= std::uint32_t{1} << p;
      c.facets.push_back({full ^ mask});
      return;
    }
    for (int p = from; p <= q.size() - (target.size() - si); ++p) {
      if (q.letters[p] == target.letters[si]) {
        chosen.push_back(p);
        rec(p + 1, si + 1);
        chosen.pop_back();
      }
    }
  };
  rec(0, 0);
  std::sort(c.facets.begin(), c.facets.end(), [](const Face& a, const Face& b) {
    return detail::face_lex_less(a.deleted, b.deleted);
  });
  return c;
}

/// Interior criterion: the complement of the face has Demazure product
/// equal to the target (subword kind) or collapses to the target word
/// (slide kind).
inline bool is_interior(const Complex& c, const Face& f) {
  const Word complement = subword(c.word, c.full_mask() ^ f.deleted);
  if (c.kind == ComplexKind::subword)
    return demazure_product(complement) == c.target_perm();
  return tilde_delta(complement) == c.target_word();
}

enum class FaceSelect { all, interior, boundary };

/// Downward closure of the facets, including the empty face. Sorted by
/// (size, position set) for deterministic output.
inline std::vector<Face> faces(const Complex& c, FaceSelect which) {
  std::unordered_set<std::uint32_t> seen;
  std::vector<std::uint32_t> stack;
  for (const Face& f : c.facets) {
    if (seen.insert(f.deleted).second) stack.push_back(f.deleted);
  }
  while (!stack.empty()) {
    const std::uint32_t f = stack.back();
    stack.pop_back();
    for (std::uint32_t rest = f; rest; rest &= rest - 1) {
      const std::uint32_t sub = f & ~(rest & ~(rest - 1));
      if (seen.insert(sub).second) stack.push_back(sub);
    }
  }
  std::vector<Face> out;
  out.reserve(seen.size());
  for (std::uint32_t mask : seen) {
    const Face f{mask};
    if (which == FaceSelect::all || (is_interior(c, f) ==
                                     (which == FaceSelect::interior)))
      out.push_back(f);
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return detail::face_lex_less(a.deleted, b.deleted);
  });
  return out;
}

/// Sum of (-1)^dim over the nonempty faces; 0 for a complex with no
/// nonempty faces.
inline int euler_characteristic(const Complex& c) {
  int chi = 0;
  for (const Face& f : faces(c, FaceSelect::all))
    if (f.size() > 0) chi += (f.size() % 2 == 1) ? 1 : -1;
  return chi;
}

/// Ball/sphere classification. Sphere iff the whole ambient word already
/// collapses to the target; slide targets must be run-free.
inline Topology classify(const Complex& c) {
  if (c.kind == ComplexKind::subword) {
    return demazure_product(c.word) == c.target_perm() ? Topology::sphere
                                                       : Topology::ball;
  }
  const Word& s = c.target_word();
  if (!(tilde_delta(s) == s))
    throw UnclassifiableSlideTarget(
        "slide target has equal consecutive letters");
  return tilde_delta(c.word) == s ? Topology::sphere : Topology::ball;
}

namespace detail {

inline std::uint32_t suffix_mask(int from, int m) {
  return m == from ? 0
                   : (((std::uint32_t{1} << (m - from)) - 1) << from);
}

}  // namespace detail

/// Facets in the order produced by the vertex decomposition that splits on
/// the first remaining letter of the ambient word: deletion facets first,
/// then the cone over the link. The order is a shelling.
inline std::vector<Face> vertex_decomposition_shelling(const Complex& c) {
  const int m = c.m();
  std::vector<Face> order;
  if (c.kind == ComplexKind::slide) {
    const Word& s = c.target_word();
    std::map<std::pair<int, int>, std::vector<std::uint32_t>> memo;
    std::function<const std::vector<std::uint32_t>&(int, int)> rec =
        [&](int k, int si) -> const std::vector<std::uint32_t>& {
      auto it = memo.find({k, si});
      if (it != memo.end()) return it->second;
      std::vector<std::uint32_t> out;
      if (si == s.size()) {
        out.push_back(detail::suffix_mask(k, m));
      } else if (k < m) {
        if (c.word.letters[k] == s.letters[si]) out = rec(k + 1, si + 1);
        for (std::uint32_t f : rec(k + 1, si))
          out.push_back(f | (std::uint32_t{1} << k));
      }
      return memo.emplace(std::make_pair(k, si), std::move(out)).first->second;
    };
    for (std::uint32_t f : rec(0, 0)) order.push_back({f});
  } else {
    std::map<std::pair<int, Permutation>, std::vector<std::uint32_t>> memo;
    std::function<const std::vector<std::uint32_t>&(int, const Permutation&)>
        rec = [&](int k, const Permutation& pi)
        -> const std::vector<std::uint32_t>& {
      auto it = memo.find({k, pi});
      if (it != memo.end()) return it->second;
      std::vector<std::uint32_t> out;
      if (pi.is_identity()) {
        out.push_back(detail::suffix_mask(k, m));
      } else if (k < m) {
        const Permutation dropped = pi.after_left_s(c.word.letters[k]);
        if (dropped.length() < pi.length()) out = rec(k + 1, dropped);
        for (std::uint32_t f : rec(k + 1, pi))
          out.push_back(f | (std::uint32_t{1} << k));
      }
      return memo.emplace(std::make_pair(k, pi), std::move(out)).first->second;
    };
    for (std::uint32_t f : rec(0, c.target_perm())) order.push_back({f});
  }
  return order;
}

/// Explicit shelling check: for each facet after the first, the maximal
/// intersections with earlier facets must all have exactly one vertex less
/// than the facet itself.
inline bool verify_shelling(const Complex& c, const std::vector<Face>& order) {
  {
    auto sorted_order = order;
    auto sorted_facets = c.facets;
    auto less = [](const Face& a, const Face& b) { return a.deleted < b.deleted; };
    std::sort(sorted_order.begin(), sorted_order.end(), less);
    std::sort(sorted_facets.begin(), sorted_facets.end(), less);
    auto eq = [](const Face& a, const Face& b) { return a == b; };
    if (!std::equal(sorted_order.begin(), sorted_order.end(),
                    sorted_facets.begin(), sorted_facets.end(), eq))
      return false;
  }
  for (std::size_t j = 1; j < order.size(); ++j) {
    std::vector<std::uint32_t> inters;
    for (std::size_t i = 0; i < j; ++i)
      inters.push_back(order[i].deleted & order[j].deleted);
    std::sort(inters.begin(), inters.end());
    inters.erase(std::unique(inters.begin(), inters.end()), inters.end());
    for (std::uint32_t a : inters) {
      const bool maximal = std::none_of(
          inters.begin(), inters.end(), [a](std::uint32_t b) {
            return a != b && (a & b) == a;
          });
      if (maximal && std::popcount(a) != order[j].size() - 1) return false;
    }
  }
  return true;
}

/// Partition of the interior faces of the subword complex of (q, w) by the
/// run-collapse of the complement. Every key S satisfies collapse(S) = S and
/// Demazure(S) = w, and each part is the interior of the slide complex of S.
inline std::map<Word, std::vector<Face>> interior_decomposition(
    const Word& q, const Permutation& w) {
  const Complex c = build_complex(q, w);
  std::map<Word, std::vector<Face>> parts;
  for (const Face& f : faces(c, FaceSelect::interior)) {
    const Word key = tilde_delta(subword(q, c.full_mask() ^ f.deleted));
    parts[key].push_back(f);
  }
  return parts;
}

/// Oriented facet-adjacency graph. Edge F -> F' is an increasing flip when
/// the position leaving F is smaller than the one entering. The positive
/// greedy facet is the unique source of the increasing orientation, the
/// negative greedy facet the unique sink.
struct FlipGraph {
  std::vector<Face> facets;
  std::vector<std::pair<int, int>> increasing;  // (from, to) facet indices
  int positive_greedy = -1;
  int negative_greedy = -1;
};

inline FlipGraph flip_graph(const Complex& c) {
  if (c.facets.empty())
    throw std::invalid_argument("flip graph of an empty complex");
  FlipGraph g;
  g.facets = c.facets;
  const int k = static_cast<int>(g.facets.size());
  std::vector<int> indeg(k, 0), outdeg(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const std::uint32_t sym = g.facets[i].deleted ^ g.facets[j].deleted;
      if (std::popcount(sym) != 2) continue;
      const std::uint32_t in_i = sym & g.facets[i].deleted;
      const std::uint32_t in_j = sym & g.facets[j].deleted;
      int from = i, to = j;
      if (std::countr_zero(in_i) > std::countr_zero(in_j)) std::swap(from, to);
      g.increasing.emplace_back(from, to);
      ++outdeg[from];
      ++indeg[to];
    }
  }
  for (int i = 0; i < k; ++i) {
    if (indeg[i] == 0) {
      if (g.positive_greedy != -1)
        throw NonUniqueGreedy("multiple sources in the increasing flip graph");
      g.positive_greedy = i;
    }
    if (outdeg[i] == 0) {
      if (g.negative_greedy != -1)
        throw NonUniqueGreedy("multiple sinks in the increasing flip graph");
      g.negative_greedy = i;
    }
  }
  if (g.positive_greedy == -1 || g.negative_greedy == -1)
    throw NonUniqueGreedy("increasing flip graph has no source or no sink");
  return g;
}

/// Cover edges of the increasing flip order: the flips not implied by a
/// longer increasing path. (Moving a letter across several equal letters at
/// once is a flip but factors through the intermediate facets.)
inline std::vector<std::pair<int, int>> increasing_cover_edges(
    const FlipGraph& g) {
  const int k = static_cast<int>(g.facets.size());
  std::vector<std::vector<int>> adj(k);
  for (auto [u, v] : g.increasing) adj[u].push_back(v);
  std::vector<std::pair<int, int>> covers;
  for (auto [u, v] : g.increasing) {
    std::vector<char> seen(k, 0);
    std::vector<int> stack;
    for (int w : adj[u])
      if (w != v && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    bool indirect = false;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (x == v) {
        indirect = true;
        break;
      }
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    if (!indirect) covers.emplace_back(u, v);
  }
  return covers;
}

}  // namespace pipedreams
