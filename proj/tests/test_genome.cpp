#include <catch2/catch_amalgamated.hpp>

#include "dnalg/coxeter.hpp"
#include "dnalg/genome.hpp"

#include <random>
#include <set>

using namespace dnalg;

TEST_CASE("inversion of a cyclic interval") {
  CircularGenome g({1, 2, 3, 4, 5, 6});
  CircularGenome h = inversion(g, 1, 3); // regions 2,3,4
  CHECK(h.labels() == std::vector<int>{1, -4, -3, -2, 5, 6});

  CircularGenome one = inversion(g, 2, 2);
  CHECK(one.labels() == std::vector<int>{1, 2, -3, 4, 5, 6});

  CHECK(inversion(h, 1, 3).labels() == g.labels()); // involution

  // wrapping interval
  CircularGenome w = inversion(g, 4, 1); // regions 5,6,1,2
  CHECK(w.labels() == std::vector<int>{-6, -5, 3, 4, -2, -1});

  // unsigned genomes reverse without negation
  CircularGenome u({1, 2, 3, 4}, false);
  CHECK(inversion(u, 0, 1).labels() == std::vector<int>{2, 1, 3, 4});
}

TEST_CASE("dihedral canonical forms") {
  CircularGenome a({1, 2, 3, 4}), b({2, 3, 4, 1});
  CHECK(dihedral_canonical(a).labels() == dihedral_canonical(b).labels());
  CircularGenome c({-4, -3, -2, -1});
  CHECK(dihedral_canonical(a).labels() == dihedral_canonical(c).labels());
  // a reflected-without-negation signed genome is NOT equivalent
  CircularGenome d({4, 3, 2, 1});
  CHECK(dihedral_canonical(a).labels() != dihedral_canonical(d).labels());
}

TEST_CASE("unsigned circular class count is (n-1)!/2") {
  for (int n : {4, 5}) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    std::set<std::vector<int>> classes;
    do {
      classes.insert(dihedral_canonical(CircularGenome(v, false)).labels());
    } while (std::next_permutation(v.begin(), v.end()));
    int fact = 1;
    for (int i = 2; i < n; ++i) fact *= i;
    CHECK(static_cast<int>(classes.size()) == fact / 2);
  }
}

TEST_CASE("distance basics") {
  CircularGenome g({1, 2, 3, 4, 5});
  CHECK(distance_bfs(g, g, GeneratorSet::all()) == 0);
  CircularGenome h = inversion(g, 1, 3);
  CHECK(distance_bfs(g, h, GeneratorSet::all()) == 1);
  CHECK(distance_bfs(h, g, GeneratorSet::all()) == 1);

  // all-negated n=4 genome; value frozen from the exhaustive BFS
  CircularGenome a4({1, 2, 3, 4}), b4({-1, -2, -3, -4});
  auto d = distance_bfs(a4, b4, GeneratorSet::all());
  REQUIRE(d.has_value());
  CHECK(*d == 3);
}

TEST_CASE("metric properties on samples") {
  std::mt19937 rng(501);
  auto random_genome = [&rng](int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    std::shuffle(v.begin(), v.end(), rng);
    for (auto &x : v)
      if (rng() % 2) x = -x;
    return CircularGenome(v);
  };
  for (int t = 0; t < 8; ++t) {
    CircularGenome a = random_genome(5);
    CircularGenome b = a;
    int steps = rng() % 3;
    for (int s = 0; s < steps; ++s) b = inversion(b, rng() % 5, rng() % 5);
    CircularGenome c = b;
    for (int s = 0; s < (int)(rng() % 2); ++s) c = inversion(c, rng() % 5, rng() % 5);
    auto dab = distance_bfs(a, b, GeneratorSet::all());
    auto dba = distance_bfs(b, a, GeneratorSet::all());
    auto dac = distance_bfs(a, c, GeneratorSet::all());
    auto dbc = distance_bfs(b, c, GeneratorSet::all());
    REQUIRE(dab.has_value());
    CHECK(*dab == *dba);
    CHECK(*dac <= *dab + *dbc);
    CHECK((*dab == 0) ==
          (dihedral_canonical(a).labels() == dihedral_canonical(b).labels()));
  }
}

TEST_CASE("restricted generators never shorten distances") {
  std::mt19937 rng(502);
  for (int t = 0; t < 6; ++t) {
    std::vector<int> v{1, 2, 3, 4, 5};
    std::shuffle(v.begin(), v.end(), rng);
    for (auto &x : v)
      if (rng() % 2) x = -x;
    CircularGenome a({1, 2, 3, 4, 5}), b(v);
    auto dall = distance_bfs(a, b, GeneratorSet::all());
    auto dmax = distance_bfs(a, b, GeneratorSet::max_length(2));
    REQUIRE(dall.has_value());
    if (dmax.has_value()) CHECK(*dall <= *dmax);
  }
}

TEST_CASE("terminus-fixing generators preserve the terminus region") {
  CircularGenome g({1, 2, 3, 4, 5, 6}, true, 6);
  auto gens = GeneratorSet::terminus_fixing();
  for (auto [i, j] : gens.intervals(g)) {
    CircularGenome h = inversion(g, i, j);
    CHECK(std::abs(h.labels()[g.terminus_position()]) == 6);
  }
  // distance respecting the terminus
  CircularGenome h = inversion(g, 1, 3);
  auto d = distance_bfs(g, h, gens);
  REQUIRE(d.has_value());
  CHECK(*d == 1);
}

TEST_CASE("terminus-symmetric generators form a small orbit") {
  CircularGenome g({1, 2, 3, 4, 5, 6}, true, 6);
  auto gens = GeneratorSet::terminus_symmetric();
  auto ivs = gens.intervals(g);
  CHECK(!ivs.empty());
  for (auto [i, j] : ivs) {
    CircularGenome h = inversion(g, i, j);
    CHECK(std::abs(h.labels()[g.terminus_position()]) == 6);
    CHECK(inversion(h, i, j).labels() == g.labels());
  }
  // most targets are unreachable under this tiny set
  CircularGenome far({2, 1, 3, 4, 6, 5}, true, 6);
  auto d = distance_bfs(g, far, gens);
  CHECK(!d.has_value());
}

TEST_CASE("type-B length formula equals BFS") {
  for (int n : {3, 4}) {
    auto oracle = typeB_length_bfs(n);
    CHECK(oracle.size() == (n == 3 ? 48u : 384u));
    for (const auto &[w, d] : oracle) CHECK(typeB_length(w) == d);
  }
  CHECK(typeB_length(SignedPermutation::identity(4)) == 0);
  CHECK(typeB_length(SignedPermutation::sign_flip_first(4)) == 1);
  CHECK(typeB_length(SignedPermutation({-1, -2})) == 4); // longest element of B2
}

TEST_CASE("affine length formula equals BFS") {
  CHECK(affine_length(AffinePermutation::identity(5)) == 0);
  CHECK(affine_length(AffinePermutation({2, 1, 3})) == 1);
  CHECK(affine_length(AffinePermutation({-1, 4})) == 2);
  for (int n : {3, 4}) {
    auto oracle = affine_length_bfs(n, 8);
    for (const auto &[w, d] : oracle) CHECK(affine_length(w) == d);
  }
  CHECK_THROWS_AS(AffinePermutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(AffinePermutation({2, 3, 4}), std::invalid_argument);
}

TEST_CASE("circular swap distance fast path equals BFS") {
  std::mt19937 rng(503);
  CircularGenome a = CircularGenome::identity(6, false);
  CHECK(circular_swap_distance_fast(a, a) == 0);
  for (int t = 0; t < 100; ++t) {
    std::vector<int> v{1, 2, 3, 4, 5, 6};
    std::shuffle(v.begin(), v.end(), rng);
    CircularGenome b(v, false);
    auto bfs = circular_swap_distance_bfs(a, b);
    REQUIRE(bfs.has_value());
    CHECK(circular_swap_distance_fast(a, b) == *bfs);
  }
}

TEST_CASE("breakpoint cycle bound") {
  SignedPermutation id4 = SignedPermutation::identity(4);
  CHECK(breakpoint_cycle_bound(id4, id4) == 0);

  // one inversion apart
  SignedPermutation a({1, -3, -2, 4});
  CHECK(breakpoint_cycle_bound(a, id4) == 1);
  CHECK(breakpoint_cycle_bound(id4, a) == 1);

  std::mt19937 rng(504);
  for (int t = 0; t < 40; ++t) {
    int n = 4 + rng() % 3;
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    std::shuffle(v.begin(), v.end(), rng);
    for (auto &x : v)
      if (rng() % 2) x = -x;
    SignedPermutation b(v);
    SignedPermutation c = b;
    int steps = rng() % 4;
    for (int s = 0; s < steps; ++s) {
      auto w = c.images();
      int i = rng() % n, j = rng() % n;
      if (i > j) std::swap(i, j);
      std::reverse(w.begin() + i, w.begin() + j + 1);
      for (int k = i; k <= j; ++k) w[k] = -w[k];
      c = SignedPermutation(w);
    }
    int bound = breakpoint_cycle_bound(b, c);
    int dist = linear_inversion_distance_bfs(b, c);
    CHECK(bound <= dist);
    if (dist <= 1) CHECK(bound == dist);
  }
}

TEST_CASE("genome text round trip") {
  CircularGenome g = CircularGenome::parse("1,-4,-3,-2,5,6*");
  CHECK(g.labels() == std::vector<int>{1, -4, -3, -2, 5, 6});
  CHECK(g.terminus_label() == 6);
  CHECK(g.str() == "1,-4,-3,-2,5,6*");
  CHECK(CircularGenome::parse(g.str()) == g);
  CHECK_THROWS_AS(CircularGenome::parse("1,2,x"), GenomeError);
  CHECK_THROWS_AS(CircularGenome::parse("1,1,2"), GenomeError);
  CHECK_THROWS_AS(CircularGenome::parse("1,2*,3*"), GenomeError);
}
