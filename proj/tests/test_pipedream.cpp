#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "pipedreams/pipedream.hpp"
#include "pipedreams/polynomial.hpp"

using namespace pipedreams;

namespace {

PipeDream dream(int n, std::vector<std::pair<int, int>> cells) {
  return PipeDream::from_crosses(n, cells);
}

Polynomial mono(int coeff, int beta_exp, std::vector<int> exps) {
  return Polynomial::monomial(coeff, beta_exp, exps);
}

}  // namespace

TEST_CASE("staircase word") {
  REQUIRE(staircase_word(2) == Word(2, {1}));
  REQUIRE(staircase_word(4) == Word(4, {3, 2, 1, 3, 2, 3}));
  for (int n = 1; n <= 6; ++n) {
    REQUIRE(staircase_word(n).size() == n * (n - 1) / 2);
    REQUIRE(apply_word(staircase_word(n)) == Permutation::longest(n));
    REQUIRE(is_reduced_word(staircase_word(n)));
  }
}

TEST_CASE("cell to position table") {
  const StaircaseTable t(4);
  // row 1 right to left, then row 2, then row 3
  REQUIRE(t.cell[0] == std::pair<int, int>(1, 3));
  REQUIRE(t.cell[1] == std::pair<int, int>(1, 2));
  REQUIRE(t.cell[2] == std::pair<int, int>(1, 1));
  REQUIRE(t.cell[3] == std::pair<int, int>(2, 2));
  REQUIRE(t.cell[4] == std::pair<int, int>(2, 1));
  REQUIRE(t.cell[5] == std::pair<int, int>(3, 1));
}

TEST_CASE("word of a pipe dream") {
  REQUIRE(word_of(dream(4, {})) == Word(4, {}));

  const PipeDream qy = dream(4, {{2, 1}, {2, 2}, {3, 1}});
  REQUIRE(word_of(qy) == Word(4, {3, 2, 3}));
  REQUIRE(qy.positions() == std::vector<int>{3, 4, 5});

  // cell (2,2) precedes (2,1) in reading order
  const PipeDream top = dream(4, {{1, 2}, {1, 3}, {2, 2}});
  REQUIRE(word_of(top) == Word(4, {3, 2, 3}));
  REQUIRE(top.positions() == std::vector<int>{0, 1, 3});
}

TEST_CASE("shape by strand tracing") {
  REQUIRE(shape(dream(5, {{1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}})) ==
          Permutation({1, 5, 4, 2, 3}));
  REQUIRE(shape(dream(4, {})) == Permutation::identity(4));
  REQUIRE(shape(PipeDream(4, (1u << 6) - 1)) == Permutation::longest(4));
  REQUIRE(shape(dream(2, {{1, 1}})) == Permutation({2, 1}));
}

TEST_CASE("reduction") {
  // reduced dreams are fixed
  const PipeDream r = dream(4, {{1, 2}, {1, 3}, {2, 2}});
  REQUIRE(reduce(r) == r);
  REQUIRE(excess(r) == 0);

  const PipeDream nonreduced =
      dream(5, {{1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}});
  const PipeDream reduced_form =
      dream(5, {{1, 2}, {1, 3}, {2, 2}, {3, 1}, {3, 2}});
  REQUIRE(reduce(nonreduced) == reduced_form);
  REQUIRE(excess(nonreduced) == 2);
  REQUIRE(reduce(reduce(nonreduced)) == reduce(nonreduced));
  REQUIRE(shape(nonreduced) == shape(reduced_form));

  // both strand pairs cross exactly once: unchanged
  const PipeDream once = dream(3, {{1, 1}, {2, 1}});
  REQUIRE(reduce(once) == once);

  // (1,2) and (2,1) both cross strands 2 and 3; the later-read cross goes
  const PipeDream twice = dream(3, {{1, 2}, {2, 1}});
  REQUIRE(reduce(twice) == dream(3, {{1, 2}}));
  REQUIRE(excess(twice) == 1);

  REQUIRE(excess(PipeDream(4, (1u << 6) - 1)) == 0);
  REQUIRE(excess(dream(4, {{1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}})) == 2);
}

TEST_CASE("monomial of a pipe dream") {
  REQUIRE(monomial(dream(4, {})) == Polynomial::constant(1, 3));
  REQUIRE(monomial(dream(4, {{1, 2}, {1, 3}, {2, 2}})) == mono(1, 0, {2, 1, 0}));
  REQUIRE(monomial(dream(4, {{2, 1}, {2, 2}, {3, 1}})) == mono(1, 0, {0, 2, 1}));
}

TEST_CASE("slide moves") {
  // row starting in column 1: identity
  const PipeDream anchored = dream(4, {{2, 1}, {2, 2}, {3, 1}});
  for (int i = 1; i <= 3; ++i) REQUIRE(slide_move(anchored, i) == anchored);

  // leftmost cross of row 2 slides to (3,1)
  REQUIRE(slide_move(dream(4, {{1, 2}, {1, 3}, {2, 2}}), 2) ==
          dream(4, {{1, 2}, {1, 3}, {3, 1}}));

  // weakly left of a cross below: identity
  REQUIRE(slide_move(dream(4, {{1, 2}, {1, 3}, {2, 2}}), 1) ==
          dream(4, {{1, 2}, {1, 3}, {2, 2}}));

  // the nonreduced move: the sliding cross merges into an occupied cell
  REQUIRE(slide_move(dream(4, {{1, 3}, {2, 2}}), 1) == dream(4, {{2, 2}}));
  REQUIRE(shape(dream(4, {{1, 3}, {2, 2}})) == shape(dream(4, {{2, 2}})));
  REQUIRE(slide_move(dream(4, {{1, 3}, {2, 1}, {2, 2}, {3, 1}}), 1) ==
          dream(4, {{2, 1}, {2, 2}, {3, 1}}));
}

TEST_CASE("slide moves preserve shape and reducedness") {
  std::mt19937 rng(13579);
  const StaircaseTable t(5);
  for (int trial = 0; trial < 300; ++trial) {
    const PipeDream p(5, static_cast<std::uint32_t>(rng()) & ((1u << t.m) - 1));
    for (int i = 1; i < 5; ++i) {
      const PipeDream moved = slide_move(p, i);
      REQUIRE(shape(moved) == shape(p));
      if (excess(p) == 0) {
        REQUIRE(excess(moved) == 0);
        REQUIRE(moved.size() == p.size());
      }
    }
  }
}

TEST_CASE("quasi-Yamanouchi test") {
  REQUIRE(is_quasi_yamanouchi(dream(4, {{2, 1}, {2, 2}, {3, 1}})));
  REQUIRE_FALSE(is_quasi_yamanouchi(dream(4, {{1, 2}, {1, 3}, {2, 2}})));
  REQUIRE(is_quasi_yamanouchi(dream(4, {})));
  // the merging slide move applies here, so not quasi-Yamanouchi
  REQUIRE_FALSE(is_quasi_yamanouchi(dream(4, {{1, 3}, {2, 2}})));
}

TEST_CASE("destandardization") {
  const PipeDream qy = dream(4, {{1, 2}, {2, 1}, {2, 2}});
  REQUIRE(destandardize(qy) == qy);

  REQUIRE(destandardize(dream(4, {{1, 2}, {1, 3}, {2, 2}})) ==
          dream(4, {{2, 1}, {2, 2}, {3, 1}}));

  // every member of the seven-element orbit lands on the same dream
  const PipeDream rep = dream(4, {{2, 1}, {2, 2}, {3, 1}});
  for (const auto& cells : std::vector<std::vector<std::pair<int, int>>>{
           {{2, 1}, {2, 2}, {3, 1}},
           {{1, 3}, {2, 1}, {3, 1}},
           {{1, 3}, {2, 1}, {2, 2}, {3, 1}},
           {{1, 2}, {1, 3}, {3, 1}},
           {{1, 2}, {1, 3}, {2, 2}},
           {{1, 2}, {1, 3}, {2, 1}, {3, 1}},
           {{1, 2}, {1, 3}, {2, 2}, {3, 1}}}) {
    REQUIRE(destandardize(dream(4, cells)) == rep);
  }
}

TEST_CASE("destandardization is order independent") {
  std::mt19937 rng(86420);
  const StaircaseTable t(5);
  for (int trial = 0; trial < 200; ++trial) {
    const PipeDream p(5, static_cast<std::uint32_t>(rng()) & ((1u << t.m) - 1));
    const PipeDream expected = destandardize(p);
    // apply applicable moves in a random order until fixed
    PipeDream cur = p;
    while (true) {
      std::vector<int> movable;
      for (int i = 1; i < 5; ++i)
        if (!(slide_move(cur, i) == cur)) movable.push_back(i);
      if (movable.empty()) break;
      cur = slide_move(cur, movable[rng() % movable.size()]);
    }
    REQUIRE(cur == expected);
  }
}

TEST_CASE("shape equals the Demazure product of the word") {
  std::mt19937 rng(11223);
  for (int n = 1; n <= 5; ++n) {
    const StaircaseTable t(n);
    for (int trial = 0; trial < 200; ++trial) {
      const std::uint32_t mask =
          t.m == 0 ? 0 : static_cast<std::uint32_t>(rng()) & ((1u << t.m) - 1);
      const PipeDream p(n, mask);
      REQUIRE(shape(p) == demazure_product(word_of(p)));
      REQUIRE(excess(p) == p.size() - shape(p).length());
    }
  }
}

TEST_CASE("enumeration of pipe dreams") {
  const Permutation w({1, 4, 3, 2});

  const auto reduced = enumerate_pipe_dreams(w, true);
  REQUIRE(reduced.size() == 5);
  std::multiset<std::string> monomials;
  for (const auto& p : reduced) {
    REQUIRE(excess(p) == 0);
    REQUIRE(shape(p) == w);
    monomials.insert(to_text(monomial(p)));
  }
  REQUIRE(monomials == std::multiset<std::string>{"x1^2*x2", "x1^2*x3",
                                                  "x1*x2^2", "x1*x2*x3",
                                                  "x2^2*x3"});

  const auto all = enumerate_pipe_dreams(w, false);
  REQUIRE(all.size() == 11);
  int nonreduced = 0;
  for (const auto& p : all) {
    REQUIRE(shape(p) == w);
    if (excess(p) > 0) ++nonreduced;
  }
  REQUIRE(nonreduced == 6);

  const Permutation id = Permutation::identity(4);
  REQUIRE(enumerate_pipe_dreams(id, true).size() == 1);
  REQUIRE(enumerate_pipe_dreams(id, false).size() == 1);
  REQUIRE(enumerate_pipe_dreams(id, false)[0] == dream(4, {}));
}

TEST_CASE("quasi-Yamanouchi enumeration") {
  const Permutation w({1, 4, 3, 2});

  const auto all_qy = enumerate_quasi_yamanouchi(w, false);
  REQUIRE(all_qy.size() == 5);
  for (const auto& cert : all_qy) {
    REQUIRE(is_quasi_yamanouchi(cert.dream));
    REQUIRE(tilde_delta(cert.word) == cert.word);
    REQUIRE(cert.reduced == (cert.excess == 0));
  }

  const auto reduced_qy = enumerate_quasi_yamanouchi(w, true);
  REQUIRE(reduced_qy.size() == 2);
  std::set<Word> words;
  for (const auto& cert : reduced_qy) words.insert(cert.word);
  REQUIRE(words == std::set<Word>{Word(4, {3, 2, 3}), Word(4, {2, 3, 2})});

  REQUIRE(enumerate_quasi_yamanouchi(Permutation::longest(4), false).size() == 1);
}

TEST_CASE("pipe dream formulas for Schubert and Grothendieck") {
  const Permutation w({1, 4, 3, 2});
  const Polynomial schubert = mono(1, 0, {2, 1, 0}) + mono(1, 0, {2, 0, 1}) +
                              mono(1, 0, {1, 2, 0}) + mono(1, 0, {1, 1, 1}) +
                              mono(1, 0, {0, 2, 1});
  REQUIRE(schubert_from_pipedreams(w) == schubert);

  const Polynomial groth = schubert + mono(1, 1, {2, 2, 0}) +
                           mono(2, 1, {2, 1, 1}) + mono(2, 1, {1, 2, 1}) +
                           mono(1, 2, {2, 2, 1});
  REQUIRE(grothendieck_from_pipedreams(w) == groth);

  REQUIRE(schubert_from_pipedreams(Permutation::identity(3)) ==
          Polynomial::constant(1, 2));
}

TEST_CASE("glide polynomials of the 1432 quasi-Yamanouchi dreams") {
  // the seven-element orbit
  REQUIRE(glide_polynomial(dream(4, {{2, 1}, {2, 2}, {3, 1}})) ==
          mono(2, 1, {2, 1, 1}) + mono(1, 1, {1, 2, 1}) + mono(1, 0, {2, 1, 0}) +
              mono(1, 0, {2, 0, 1}) + mono(1, 0, {1, 1, 1}) +
              mono(1, 0, {0, 2, 1}));

  // the four singleton orbits
  REQUIRE(glide_polynomial(dream(4, {{1, 2}, {2, 1}, {2, 2}, {3, 1}})) ==
          mono(1, 0, {1, 2, 1}));
  REQUIRE(glide_polynomial(dream(4, {{1, 2}, {1, 3}, {2, 1}, {2, 2}})) ==
          mono(1, 0, {2, 2, 0}));
  REQUIRE(glide_polynomial(dream(4, {{1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}})) ==
          mono(1, 0, {2, 2, 1}));
  REQUIRE(glide_polynomial(dream(4, {{1, 2}, {2, 1}, {2, 2}})) ==
          mono(1, 0, {1, 2, 0}));
}

TEST_CASE("slide polynomials of the reduced 1432 quasi-Yamanouchi dreams") {
  REQUIRE(slide_polynomial(dream(4, {{2, 1}, {2, 2}, {3, 1}})) ==
          mono(1, 0, {2, 1, 0}) + mono(1, 0, {2, 0, 1}) + mono(1, 0, {1, 1, 1}) +
              mono(1, 0, {0, 2, 1}));
  REQUIRE(slide_polynomial(dream(4, {{1, 2}, {2, 1}, {2, 2}})) ==
          mono(1, 0, {1, 2, 0}));
}

TEST_CASE("slide and glide polynomial input validation") {
  REQUIRE_THROWS_AS(glide_polynomial(dream(4, {{1, 2}, {1, 3}, {2, 2}})),
                    NotQuasiYamanouchi);
  REQUIRE_THROWS_AS(slide_polynomial(dream(4, {{1, 2}, {1, 3}, {2, 2}})),
                    NotQuasiYamanouchi);
  // quasi-Yamanouchi but not reduced
  REQUIRE_THROWS_AS(slide_polynomial(dream(4, {{1, 2}, {2, 1}, {2, 2}, {3, 1}})),
                    NotReduced);
}

TEST_CASE("glide orbits partition the dreams of a shape") {
  const Permutation w({1, 4, 3, 2});
  const auto orbits = glide_orbits_by_shape(w);
  REQUIRE(orbits.size() == 5);
  std::multiset<std::size_t> sizes;
  std::size_t total = 0;
  for (const auto& [rep, members] : orbits) {
    REQUIRE(is_quasi_yamanouchi(rep));
    sizes.insert(members.size());
    total += members.size();
    for (const auto& p : members) REQUIRE(destandardize(p) == rep);
  }
  REQUIRE(sizes == std::multiset<std::size_t>{7, 1, 1, 1, 1});
  REQUIRE(total == 11);
}

TEST_CASE("slide and glide refinements sum to the classical polynomials") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    do {
      const Permutation w(img);
      Polynomial f_sum = Polynomial::zero(n - 1);
      for (const auto& cert : enumerate_quasi_yamanouchi(w, true))
        f_sum = f_sum + slide_polynomial(cert.dream);
      REQUIRE(f_sum == schubert_from_pipedreams(w));

      Polynomial g_sum = Polynomial::zero(n - 1);
      const Polynomial b = Polynomial::beta(n - 1);
      for (const auto& cert : enumerate_quasi_yamanouchi(w, false)) {
        Polynomial part = glide_polynomial(cert.dream);
        for (int t = 0; t < cert.excess; ++t) part = part * b;
        g_sum = g_sum + part;
      }
      REQUIRE(g_sum == grothendieck_from_pipedreams(w));
    } while (std::next_permutation(img.begin(), img.end()));
  }
}

TEST_CASE("alternating sums over excess equal one for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    do {
      const Permutation w(img);
      long pd_sum = 0;
      for (const auto& p : enumerate_pipe_dreams(w, false))
        pd_sum += excess(p) % 2 == 0 ? 1 : -1;
      REQUIRE(pd_sum == 1);
      long qpd_sum = 0;
      for (const auto& cert : enumerate_quasi_yamanouchi(w, false))
        qpd_sum += cert.excess % 2 == 0 ? 1 : -1;
      REQUIRE(qpd_sum == 1);
    } while (std::next_permutation(img.begin(), img.end()));
  }
}

TEST_CASE("grouped enumeration matches the per-shape one") {
  for (int n = 1; n <= 4; ++n) {
    auto groups = pipe_dreams_grouped_by_shape(n);
    std::size_t total = 0;
    for (const auto& [w, dreams] : groups) {
      total += dreams.size();
      REQUIRE(dreams == enumerate_pipe_dreams(w, false));
    }
    REQUIRE(total == (std::size_t{1} << (n * (n - 1) / 2)));
  }
}

TEST_CASE("invalid cells are rejected") {
  REQUIRE_THROWS_AS(dream(4, {{2, 2}, {2, 3}}), std::invalid_argument);
  REQUIRE_THROWS_AS(dream(4, {{0, 1}}), std::invalid_argument);
  REQUIRE_THROWS_AS(slide_move(dream(4, {}), 4), std::invalid_argument);
}
