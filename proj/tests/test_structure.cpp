#include <algorithm>

#include "doctest.h"
#include "posetlab/omega.hpp"
#include "posetlab/structure.hpp"
#include "support.hpp"

using namespace posetlab;
using posetlab::testing::Rng;
using posetlab::testing::chain_plus_isolated;
using posetlab::testing::random_poset;
using posetlab::testing::two_chain_analog;

namespace {

FinitePoset le2_window(int n) { return truncate(JacoComplement(JacoRule::constant(1)), n); }

// Height of the empty antichain computed on the explicit poset of antichains
// under reverse inclusion.
int antichain_rank_oracle(const FinitePoset& p) {
  int n = p.size();
  std::vector<std::uint32_t> anti;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && p.comparable(i, j)) ok = false;
    if (ok) anti.push_back(mask);
  }
  int m = static_cast<int>(anti.size());
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && (anti[static_cast<std::size_t>(b)] & ~anti[static_cast<std::size_t>(a)]) == 0 &&
          anti[static_cast<std::size_t>(a)] != anti[static_cast<std::size_t>(b)])
        pairs.emplace_back(a, b);  // reverse inclusion: supersets below subsets
  FinitePoset ap = from_edges(m, pairs);
  HeightProfile prof = levels(ap);
  int empty_idx = static_cast<int>(std::find(anti.begin(), anti.end(), 0u) - anti.begin());
  return prof.height[static_cast<std::size_t>(empty_idx)];
}

}  // namespace

TEST_CASE("levels") {
  HeightProfile a3 = levels(antichain(3));
  CHECK(a3.poset_height == 1);
  CHECK(a3.height == std::vector<int>{0, 0, 0});

  HeightProfile tt = levels(two_plus_two());
  CHECK(tt.levels == std::vector<std::vector<int>>{{0, 2}, {1, 3}});

  HeightProfile w10 = levels(le2_window(10));
  CHECK(w10.height == std::vector<int>{0, 0, 1, 1, 2, 2, 3, 3, 4, 4});

  CHECK(levels(from_edges(0, {})).poset_height == 0);
}

TEST_CASE("konig chains") {
  CHECK(konig_chain(chain(3)) == std::vector<int>{0, 1, 2});
  CHECK(konig_chain(two_plus_two()) == std::vector<int>{0, 1});

  Rng rng(73);
  for (int it = 0; it < 100; ++it) {
    FinitePoset p = random_poset(rng, 1 + static_cast<int>(rng() % 40));
    HeightProfile prof = levels(p);
    std::vector<int> c = konig_chain(p);
    REQUIRE(static_cast<int>(c.size()) == prof.poset_height);
    for (std::size_t k = 0; k < c.size(); ++k)
      CHECK(prof.height[static_cast<std::size_t>(c[k])] == static_cast<int>(k));
    for (std::size_t k = 0; k + 1 < c.size(); ++k) CHECK(p.less(c[k], c[k + 1]));
  }
}

TEST_CASE("uniformity on a chain window") {
  UniformityWitness w = uniformity(chain(10), 5);
  CHECK(w.kind == UniformityKind::uniform);
  CHECK(w.phi == std::vector<int>{0, 1, 2, 3, 4});  // phi(a) = a
  CHECK(w.margin == 5);
}

TEST_CASE("uniformity on the two-step window") {
  UniformityWitness w = uniformity(le2_window(20), 8);
  CHECK(w.kind == UniformityKind::uniform);
  CHECK(w.margin == 7);
  CHECK(w.phi == std::vector<int>{1, 2, 3, 4, 5, 6, 7});  // phi(a) = a + 1
}

TEST_CASE("uniformity separates on the two-chain analog") {
  FinitePoset q = two_chain_analog(6, 64);
  UniformityWitness w = uniformity(q, 15);
  CHECK(w.kind == UniformityKind::weakly_uniform);
  CHECK(w.weak_margin == 15);
  CHECK(w.uniform_margin == 4);  // the level-4 threshold already reaches the boundary
  CHECK(w.weak_thresholds[4] == 15);
  CHECK(w.weak_thresholds[5] == 31);
  for (int a = 0; a < w.margin; ++a) CHECK(w.phi[static_cast<std::size_t>(a)] >= a);  // extensive

  CHECK(uniformity(chain_plus_isolated(12), 5).kind == UniformityKind::none);
  CHECK_THROWS_AS(uniformity(chain(4), 9), BoundaryTooLarge);
}

TEST_CASE("h-minimal window characterisation") {
  HMinimalReport ch = h_minimal_check(chain(10), 6);
  CHECK(ch.weakly_uniform);
  CHECK(ch.h_minimal);
  CHECK(ch.levels_majorized);
  CHECK(ch.agree);

  HMinimalReport bad = h_minimal_check(chain_plus_isolated(12), 5);
  CHECK_FALSE(bad.weakly_uniform);
  CHECK_FALSE(bad.h_minimal);
  CHECK(bad.h_minimal_witness == 12);  // the isolated point
  CHECK_FALSE(bad.levels_majorized);
  CHECK(bad.unmajorized_level == 0);
  CHECK(bad.agree);

  CHECK(h_minimal_check(le2_window(30), 10).weakly_uniform);
  CHECK_THROWS_AS(h_minimal_check(chain(4), 4), BoundaryTooLarge);

  Rng rng(79);
  for (int it = 0; it < 200; ++it) {
    FinitePoset p = random_poset(rng, 1 + static_cast<int>(rng() % 30));
    int h = levels(p).poset_height;
    HMinimalReport rep = h_minimal_check(p, std::max(0, h - 1 - static_cast<int>(rng() % 3)));
    CHECK(rep.agree);
  }
}

TEST_CASE("minimum extension type") {
  Rng rng(83);
  for (int it = 0; it < 60; ++it) {
    FinitePoset p = random_poset(rng, 1 + static_cast<int>(rng() % 6));
    Ordinal m = min_extension_type(levels(p));
    // brute-force minimum order type over all linear extensions
    std::size_t shortest = SIZE_MAX;
    for (const auto& seq : linear_extensions(p, 10000)) shortest = std::min(shortest, seq.size());
    CHECK(m == Ordinal(static_cast<std::uint64_t>(shortest)));
    CHECK(m == Ordinal(static_cast<std::uint64_t>(p.size())));
  }

  LayeredPresentation omega_only{Ordinal::omega(), {}, true};
  CHECK(min_extension_type(omega_only) == Ordinal::omega());

  LayeredPresentation res3{Ordinal::parse("w+2"),
                           {Ordinal::omega(), Ordinal::omega(), Ordinal::parse("w+1")},
                           true};
  CHECK(min_extension_type(res3) == Ordinal::parse("w+3"));

  LayeredPresentation res1{Ordinal::parse("w*2+1"), {Ordinal::parse("w*2")}, true};
  CHECK(min_extension_type(res1) == Ordinal::parse("w*2+1"));

  LayeredPresentation infinite{Ordinal::omega(), {}, false};
  CHECK_THROWS_AS(min_extension_type(infinite), LevelInfinite);
  LayeredPresentation bad_res{Ordinal::parse("w+2"), {Ordinal(3)}, true};
  CHECK_THROWS_AS(min_extension_type(bad_res), std::invalid_argument);
}

TEST_CASE("finite spectrum") {
  SpectrumReport c4 = spectrum_finite(chain(4));
  CHECK(c4.extensions.count == 1);
  CHECK(c4.min_type == Ordinal(4));
  CHECK(c4.single_type);

  CHECK(spectrum_finite(antichain(3)).extensions.count == 6);
  SpectrumReport tt = spectrum_finite(two_plus_two());
  CHECK(tt.extensions.count == 6);
  CHECK(tt.min_type == Ordinal(4));
}

TEST_CASE("autonomous subsets") {
  auto tt = autonomous_subsets(two_plus_two(), true);
  CHECK(tt == std::vector<std::vector<int>>{{0, 1}, {2, 3}});

  FinitePoset sum = lexicographic_sum(chain(2), {antichain(2), antichain(2)});
  auto blocks = autonomous_subsets(sum, true);
  CHECK(std::find(blocks.begin(), blocks.end(), std::vector<int>{0, 1}) != blocks.end());
  CHECK(std::find(blocks.begin(), blocks.end(), std::vector<int>{2, 3}) != blocks.end());

  auto c3 = autonomous_subsets(chain(3), true);
  CHECK(c3 == std::vector<std::vector<int>>{{0, 1}, {1, 2}});

  CHECK_THROWS_AS(autonomous_subsets(antichain(25), false, AutonomousMode::exhaustive),
                  TooLargeForExhaustive);

  Rng rng(89);
  for (int it = 0; it < 120; ++it) {
    FinitePoset p = random_poset(rng, 1 + static_cast<int>(rng() % 10));
    CHECK(autonomous_subsets(p, false, AutonomousMode::fast) ==
          autonomous_subsets(p, false, AutonomousMode::exhaustive));
    CHECK(autonomous_subsets(p, true, AutonomousMode::fast) ==
          autonomous_subsets(p, true, AutonomousMode::exhaustive));
  }
}

TEST_CASE("powerset tower") {
  CHECK(powerset_tower(1) == antichain(2));

  FinitePoset t2 = powerset_tower(2);
  CHECK(t2.size() == 6);
  CHECK(t2.pairs() == std::vector<std::pair<int, int>>{{0, 3}, {0, 5}, {1, 4}, {1, 5}});

  // The empty set at level 1 is isolated, so the tower decomposes; the
  // brute-force scan reports the component as a proper autonomous set.
  auto mods = autonomous_subsets(t2, true, AutonomousMode::exhaustive);
  CHECK(std::find(mods.begin(), mods.end(), std::vector<int>{0, 1, 3, 4, 5}) != mods.end());
  CHECK(autonomous_subsets(t2, true, AutonomousMode::fast) == mods);

  FinitePoset t3 = powerset_tower(3);
  CHECK(t3.size() == 22);
  // levels 0 and 2 are fully comparable
  for (int i = 0; i < 2; ++i)
    for (int j = 6; j < 22; ++j) CHECK(t3.less(i, j));

  CHECK_THROWS_AS(powerset_tower(4), TowerTooTall);
  CHECK_THROWS_AS(powerset_tower(0), TowerTooTall);
}

TEST_CASE("antichain rank") {
  CHECK(antichain_rank(antichain(5)) == 5);
  CHECK(antichain_rank(chain(1)) == 1);
  CHECK(antichain_rank(chain(7)) == 1);
  CHECK(antichain_rank(from_edges(0, {})) == 0);
  CHECK_THROWS_AS(antichain_rank(antichain(17)), TooLarge);

  Rng rng(97);
  for (int it = 0; it < 60; ++it) {
    FinitePoset p = random_poset(rng, 1 + static_cast<int>(rng() % 8));
    CHECK(antichain_rank(p) == antichain_rank_oracle(p));
  }
}

TEST_CASE("uniform kind matches the exhaustive monotone search") {
  // oracle: some order-preserving phi with values below the boundary covers
  // levels [0, boundary-1) iff the witness reports kind uniform
  auto monotone_phi_exists = [](const FinitePoset& p, int boundary) {
    HeightProfile prof = levels(p);
    int h = prof.poset_height;
    std::vector<int> need(static_cast<std::size_t>(boundary), 0);
    for (int a = 0; a < boundary; ++a) {
      int t = a;
      for (int x : prof.levels[static_cast<std::size_t>(a)])
        for (int z = 0; z < p.size(); ++z)
          if (!p.less(x, z)) t = std::max(t, prof.height[static_cast<std::size_t>(z)]);
      need[static_cast<std::size_t>(a)] = t;
    }
    int run = 0;
    for (int a = 0; a + 1 < boundary; ++a) {
      run = std::max(run, need[static_cast<std::size_t>(a)]);
      if (run >= std::min(boundary, h - 1)) return false;
    }
    return true;
  };

  Rng rng(103);
  for (int it = 0; it < 200; ++it) {
    FinitePoset p = random_poset(rng, 1 + static_cast<int>(rng() % 25), 0.3);
    int h = levels(p).poset_height;
    if (h < 2) continue;
    int boundary = 1 + static_cast<int>(rng() % (h - 1));  // stay below the top level
    UniformityWitness w = uniformity(p, boundary);
    CHECK((w.kind == UniformityKind::uniform) == monotone_phi_exists(p, boundary));
    if (w.kind == UniformityKind::uniform) CHECK(w.weak_margin >= boundary - 1);  // uniform implies weak
    for (std::size_t a = 0; a < w.phi.size(); ++a) CHECK(w.phi[a] >= static_cast<int>(a));
    if (w.kind == UniformityKind::uniform)
      for (std::size_t a = 0; a + 1 < w.phi.size(); ++a) CHECK(w.phi[a] <= w.phi[a + 1]);
  }
}
