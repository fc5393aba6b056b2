#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pipedreams/complex.hpp"
#include "pipedreams/coxeter.hpp"
#include "pipedreams/pipedream.hpp"
#include "pipedreams/polynomial.hpp"

namespace pipedreams {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string details;
};

namespace detail {

class Check {
 public:
  explicit Check(std::string name) : result_{std::move(name), true, ""} {}

  void require(bool ok, const std::string& what) {
    ++count_;
    if (ok) return;
    result_.pass = false;
    if (++failures_ <= 5)
      result_.details += (result_.details.empty() ? "" : "; ") + what;
  }

  CheckResult finish() {
    if (result_.pass) {
      result_.details = std::to_string(count_) + " assertions";
    } else if (failures_ > 5) {
      result_.details += "; (+" + std::to_string(failures_ - 5) + " more)";
    }
    return std::move(result_);
  }

 private:
  CheckResult result_;
  long count_ = 0;
  long failures_ = 0;
};

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

inline std::string scope(const Permutation& w) {
  std::ostringstream os;
  os << "w=" << w;
  return os.str();
}

}  // namespace detail

/// Polynomial identities for every w of rank <= max_rank: both pipe-dream
/// formulas against the operator recursion, the slide/glide refinements,
/// coefficient positivity, and the alternating count identities.
inline std::vector<CheckResult> verify_polynomials(int max_rank) {
  std::vector<CheckResult> out;
  for (int n = 1; n <= max_rank; ++n) {
    detail::Check schubert("schubert-pipedreams-vs-operators/n=" +
                           std::to_string(n));
    detail::Check groth("grothendieck-pipedreams-vs-operators/n=" +
                        std::to_string(n));
    detail::Check slide_sum("slide-polynomials-sum-to-schubert/n=" +
                            std::to_string(n));
    detail::Check glide_sum("glide-polynomials-sum-to-grothendieck/n=" +
                            std::to_string(n));
    detail::Check nonneg("coefficients-nonnegative/n=" + std::to_string(n));
    detail::Check alt_pd("alternating-sum-pipe-dreams/n=" + std::to_string(n));
    detail::Check alt_qpd("alternating-sum-quasi-yamanouchi/n=" +
                          std::to_string(n));

    auto groups = pipe_dreams_grouped_by_shape(n);
    const Polynomial b = Polynomial::beta(n - 1);
    for (const Permutation& w : detail::all_permutations(n)) {
      const std::vector<PipeDream>& dreams = groups[w];
      const int len = w.length();

      Polynomial s_sum = Polynomial::zero(n - 1);
      Polynomial g_sum = Polynomial::zero(n - 1);
      long alternating = 0;
      for (const PipeDream& p : dreams) {
        const int ex = p.size() - len;
        Polynomial term = monomial(p);
        if (ex == 0) s_sum = s_sum + term;
        for (int t = 0; t < ex; ++t) term = term * b;
        g_sum = g_sum + term;
        alternating += ex % 2 == 0 ? 1 : -1;
      }

      const Polynomial s_ops = schubert_by_operators(w);
      const Polynomial g_ops = grothendieck_by_operators(w);
      schubert.require(s_sum == s_ops, detail::scope(w));
      groth.require(g_sum == g_ops, detail::scope(w));
      alt_pd.require(alternating == 1, detail::scope(w));
      for (const auto& [e, c] : s_ops.terms())
        nonneg.require(c > 0, detail::scope(w));
      for (const auto& [e, c] : g_ops.terms())
        nonneg.require(c > 0, detail::scope(w));

      // Orbit refinements: group the dreams by their destandardization.
      std::map<PipeDream, std::vector<PipeDream>> orbits;
      for (const PipeDream& p : dreams)
        orbits.emplace(destandardize(p), std::vector<PipeDream>{})
            .first->second.push_back(p);

      Polynomial f_total = Polynomial::zero(n - 1);
      Polynomial g_total = Polynomial::zero(n - 1);
      long alternating_qy = 0;
      for (const auto& [rep, orbit] : orbits) {
        const int exq = rep.size() - len;
        alternating_qy += exq % 2 == 0 ? 1 : -1;
        Polynomial orbit_glide = Polynomial::zero(n - 1);
        for (const PipeDream& p : orbit) {
          Polynomial term = monomial(p);
          for (int t = 0; t < p.size() - rep.size(); ++t) term = term * b;
          orbit_glide = orbit_glide + term;
          if (exq == 0 && p.size() == len) f_total = f_total + monomial(p);
        }
        for (int t = 0; t < exq; ++t) orbit_glide = orbit_glide * b;
        g_total = g_total + orbit_glide;
      }
      slide_sum.require(f_total == s_ops, detail::scope(w));
      glide_sum.require(g_total == g_ops, detail::scope(w));
      alt_qpd.require(alternating_qy == 1, detail::scope(w));
    }
    out.push_back(schubert.finish());
    out.push_back(groth.finish());
    out.push_back(slide_sum.finish());
    out.push_back(glide_sum.finish());
    out.push_back(nonneg.finish());
    out.push_back(alt_pd.finish());
    out.push_back(alt_qpd.finish());
  }
  return out;
}

namespace detail {

/// Euler characteristic consistency for a classifiable complex:
/// ball -> chi = 1, sphere of dimension d -> chi = 1 + (-1)^d.
inline bool euler_matches_classification(const Complex& c) {
  const int chi = euler_characteristic(c);
  const int d = c.facet_size() - 1;
  if (classify(c) == Topology::sphere) return chi == 1 + (d % 2 == 0 ? 1 : -1);
  return chi == 1;
}

/// Boundary faces by the Demazure/collapse criterion must coincide with the
/// pseudomanifold boundary (codimension-1 face in exactly one facet), and
/// every boundary face must lie under some boundary codimension-1 face.
inline bool boundary_structure_consistent(const Complex& c) {
  const auto all = faces(c, FaceSelect::all);
  const int fs = c.facet_size();
  std::set<std::uint32_t> boundary_ridges;
  for (const Face& f : all) {
    if (f.size() != fs - 1) continue;
    int in_facets = 0;
    for (const Face& g : c.facets)
      if ((f.deleted & g.deleted) == f.deleted) ++in_facets;
    const bool marked = !is_interior(c, f);
    if (marked != (in_facets == 1)) return false;
    if (marked) boundary_ridges.insert(f.deleted);
  }
  for (const Face& f : all) {
    if (is_interior(c, f)) continue;
    if (f.size() == fs) return false;  // facets are always interior here
    if (f.size() == fs - 1) continue;
    const bool under_ridge =
        std::any_of(boundary_ridges.begin(), boundary_ridges.end(),
                    [&](std::uint32_t r) { return (f.deleted & r) == f.deleted; });
    if (!under_ridge) return false;
  }
  return true;
}

}  // namespace detail

/// Topological checks: the interior decomposition, its match with glide
/// orbits and polynomials, Euler/boundary consistency, and shellability of
/// every complex in the corpus.
inline std::vector<CheckResult> verify_topology(int max_rank) {
  std::vector<CheckResult> out;
  for (int n = 1; n <= max_rank; ++n) {
    const Word q0 = staircase_word(n);
    detail::Check partition("interior-partition/n=" + std::to_string(n));
    detail::Check strata("strata-match-slide-complexes/n=" + std::to_string(n));
    detail::Check keys("strata-keys-are-quasi-yamanouchi-words/n=" +
                       std::to_string(n));
    detail::Check glide_from_faces("glide-polynomial-from-interior-faces/n=" +
                                   std::to_string(n));
    detail::Check groth_faces("grothendieck-from-interior-faces/n=" +
                              std::to_string(n));
    detail::Check euler("euler-vs-classification/n=" + std::to_string(n));
    detail::Check boundary("boundary-pseudomanifold/n=" + std::to_string(n));
    detail::Check shelling("vertex-decomposition-shelling/n=" +
                           std::to_string(n));
    for (const Permutation& w : detail::all_permutations(n)) {
      const Complex pdc = build_complex(q0, w);
      const auto interior = faces(pdc, FaceSelect::interior);

      // Interior faces are exactly the pipe dreams of shape w.
      std::set<std::uint32_t> interior_complements;
      for (const Face& f : interior)
        interior_complements.insert(pdc.full_mask() ^ f.deleted);
      std::set<std::uint32_t> dream_masks;
      for (const PipeDream& p : enumerate_pipe_dreams(w, false))
        dream_masks.insert(p.mask());
      partition.require(interior_complements == dream_masks,
                        detail::scope(w) + " interior vs dreams");

      euler.require(detail::euler_matches_classification(pdc),
                    detail::scope(w) + " pipe dream complex");
      boundary.require(detail::boundary_structure_consistent(pdc),
                       detail::scope(w) + " pipe dream complex");
      shelling.require(verify_shelling(pdc, vertex_decomposition_shelling(pdc)),
                       detail::scope(w) + " pipe dream complex");

      // Grothendieck polynomial from the interior faces of the complex.
      {
        Polynomial total = Polynomial::zero(n - 1);
        const Polynomial b = Polynomial::beta(n - 1);
        for (const Face& f : interior) {
          Polynomial term = monomial(PipeDream(n, pdc.full_mask() ^ f.deleted));
          for (int t = 0; t < pdc.facet_size() - f.size(); ++t) term = term * b;
          total = total + term;
        }
        groth_faces.require(total == grothendieck_from_pipedreams(w),
                            detail::scope(w));
      }

      const auto parts = interior_decomposition(q0, w);

      // The parts partition the interior.
      std::size_t part_total = 0;
      std::set<std::uint32_t> part_union;
      for (const auto& [key, part] : parts) {
        part_total += part.size();
        for (const Face& f : part) part_union.insert(f.deleted);
      }
      std::set<std::uint32_t> interior_masks;
      for (const Face& f : interior) interior_masks.insert(f.deleted);
      partition.require(
          part_total == interior.size() && part_union == interior_masks,
          detail::scope(w) + " partition");

      // Keys are exactly the words of the quasi-Yamanouchi dreams.
      std::set<Word> expected_keys;
      for (const auto& cert : enumerate_quasi_yamanouchi(w, false))
        expected_keys.insert(cert.word);
      std::set<Word> got_keys;
      for (const auto& [key, part] : parts) got_keys.insert(key);
      keys.require(got_keys == expected_keys, detail::scope(w));

      for (const auto& [key, part] : parts) {
        keys.require(tilde_delta(key) == key && demazure_product(key) == w,
                     detail::scope(w) + " key invariants");

        const Complex sc = build_complex(q0, key);
        const auto sc_interior = faces(sc, FaceSelect::interior);
        std::set<std::uint32_t> sc_masks, part_masks;
        for (const Face& f : sc_interior) sc_masks.insert(f.deleted);
        for (const Face& f : part) part_masks.insert(f.deleted);
        strata.require(sc_masks == part_masks, detail::scope(w));

        euler.require(detail::euler_matches_classification(sc),
                      detail::scope(w) + " stratum");
        boundary.require(detail::boundary_structure_consistent(sc),
                         detail::scope(w) + " stratum");
        shelling.require(verify_shelling(sc, vertex_decomposition_shelling(sc)),
                         detail::scope(w) + " stratum");

        // The part reproduces the glide polynomial of its representative,
        // and the facet sum gives the slide polynomial on reduced strata.
        const PipeDream rep = [&] {
          for (const auto& cert : enumerate_quasi_yamanouchi(w, false))
            if (cert.word == key) return cert.dream;
          throw InternalError("decomposition key without QY representative");
        }();
        Polynomial total = Polynomial::zero(n - 1);
        const Polynomial b = Polynomial::beta(n - 1);
        for (const Face& f : part) {
          Polynomial term = monomial(PipeDream(n, sc.full_mask() ^ f.deleted));
          for (int t = 0; t < sc.facet_size() - f.size(); ++t) term = term * b;
          total = total + term;
        }
        glide_from_faces.require(total == glide_polynomial(rep),
                                 detail::scope(w));
        if (excess(rep) == 0) {
          Polynomial facet_sum = Polynomial::zero(n - 1);
          for (const Face& f : sc.facets)
            facet_sum =
                facet_sum + monomial(PipeDream(n, sc.full_mask() ^ f.deleted));
          glide_from_faces.require(facet_sum == slide_polynomial(rep),
                                   detail::scope(w) + " facet sum");
        }
      }
    }
    out.push_back(partition.finish());
    out.push_back(strata.finish());
    out.push_back(keys.finish());
    out.push_back(glide_from_faces.finish());
    out.push_back(groth_faces.finish());
    out.push_back(euler.finish());
    out.push_back(boundary.finish());
    out.push_back(shelling.finish());
  }

  // Named examples with hand-checkable topology.
  detail::Check examples("explicit-topology-examples");
  {
    const Complex s0 = build_complex(Word(2, {1, 1}), Word(2, {1}));
    examples.require(s0.facets.size() == 2, "two-point sphere facets");
    examples.require(classify(s0) == Topology::sphere, "two-point sphere");
    examples.require(euler_characteristic(s0) == 2, "chi of the 0-sphere");
    examples.require(faces(s0, FaceSelect::boundary).empty(),
                     "sphere has no boundary");

    const Complex tetra = build_complex(Word(2, {1, 1, 1, 1}), Word(2, {1, 1}));
    examples.require(tetra.facets.size() == 6, "tetrahedron skeleton facets");
    examples.require(euler_characteristic(tetra) == -2,
                     "chi of the tetrahedron 1-skeleton");
    bool threw = false;
    try {
      classify(tetra);
    } catch (const UnclassifiableSlideTarget&) {
      threw = true;
    }
    examples.require(threw, "tetrahedron skeleton is unclassifiable");

    const Complex pentagon =
        build_complex(Word(4, {3, 2, 1, 3, 2, 3}), Permutation({1, 4, 3, 2}));
    examples.require(pentagon.facets.size() == 5, "pentagon facets");
    examples.require(classify(pentagon) == Topology::ball, "pentagon ball");
    examples.require(euler_characteristic(pentagon) == 1, "pentagon chi");
    examples.require(detail::boundary_structure_consistent(pentagon),
                     "pentagon boundary");
  }
  out.push_back(examples.finish());
  return out;
}

/// Flip graphs of the slide complexes of reduced quasi-Yamanouchi dreams:
/// decreasing flips coincide with nonidentity slide moves, and the positive
/// greedy facet is the dream itself.
inline std::vector<CheckResult> verify_flips(int max_rank) {
  std::vector<CheckResult> out;
  for (int n = 1; n <= max_rank; ++n) {
    const Word q0 = staircase_word(n);
    detail::Check flips("decreasing-flips-are-slide-moves/n=" +
                        std::to_string(n));
    detail::Check greedy("positive-greedy-is-quasi-yamanouchi/n=" +
                         std::to_string(n));
    for (const Permutation& w : detail::all_permutations(n)) {
      for (const auto& cert : enumerate_quasi_yamanouchi(w, true)) {
        const Complex sc = build_complex(q0, cert.word);
        const FlipGraph g = flip_graph(sc);

        greedy.require(g.facets[g.positive_greedy].deleted ==
                           (sc.full_mask() ^ cert.dream.mask()),
                       detail::scope(w));

        // Facets correspond to the reduced dreams of the slide orbit.
        std::set<std::uint32_t> facet_masks;
        for (const Face& f : g.facets) facet_masks.insert(f.deleted);
        std::set<std::uint32_t> orbit_masks;
        for (const PipeDream& p : slide_orbit(cert.dream))
          orbit_masks.insert(sc.full_mask() ^ p.mask());
        flips.require(facet_masks == orbit_masks,
                      detail::scope(w) + " facets vs orbit");

        // Decreasing cover flips out of each facet = nonidentity slide
        // moves on the corresponding dream. An increasing cover edge
        // from -> to yields the decreasing flip to -> from. (Non-cover
        // flips move a letter across an intermediate facet in one step and
        // correspond to chains of slide moves, not single ones.)
        const auto covers = increasing_cover_edges(g);
        for (int i = 0; i < static_cast<int>(g.facets.size()); ++i) {
          const PipeDream p(n, sc.full_mask() ^ g.facets[i].deleted);
          std::set<std::uint32_t> move_targets;
          for (int row = 1; row < n; ++row) {
            const PipeDream moved = slide_move(p, row);
            if (!(moved == p))
              move_targets.insert(sc.full_mask() ^ moved.mask());
          }
          std::set<std::uint32_t> decreasing_targets;
          for (auto [from, to] : covers)
            if (to == i) decreasing_targets.insert(g.facets[from].deleted);
          flips.require(move_targets == decreasing_targets,
                        detail::scope(w) + " flips");
          // every slide move is some decreasing flip, cover or not
          std::set<std::uint32_t> all_decreasing;
          for (auto [from, to] : g.increasing)
            if (to == i) all_decreasing.insert(g.facets[from].deleted);
          for (std::uint32_t target : move_targets)
            flips.require(all_decreasing.count(target) == 1,
                          detail::scope(w) + " move is a flip");
        }
      }
    }
    out.push_back(flips.finish());
    out.push_back(greedy.finish());
  }
  return out;
}

inline std::vector<CheckResult> run_suite(const std::string& suite,
                                          int max_rank) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (all || suite == "polynomials") {
    auto r = verify_polynomials(max_rank);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (all || suite == "topology") {
    auto r = verify_topology(max_rank);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (all || suite == "flips") {
    auto r = verify_flips(max_rank);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

}  // namespace pipedreams
