#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cylfuse/affine.hpp"
#include "cylfuse/symcore.hpp"

using namespace cylfuse;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
using AP = AffinePermutation;

std::vector<AP> generators(int k) {
  std::vector<AP> gens;
  for (int i = 0; i < k; ++i) gens.push_back(AP::sigma(i, k));
  gens.push_back(AP::tau(k));
  gens.push_back(AP::tau(k).inverse());
  return gens;
}

}  // namespace

TEST_CASE("sigma windows") {
  CHECK(AP::sigma(1, 2).window() == std::vector<long long>{2, 1});
  CHECK(AP::sigma(0, 3).window() == std::vector<long long>{0, 2, 4});
  for (int k = 2; k <= 4; ++k)
    for (int i = 0; i < k; ++i)
      CHECK(compose(AP::sigma(i, k), AP::sigma(i, k)) == AP::identity(k));
}

TEST_CASE("tau and composition") {
  CHECK(AP::tau(2).window() == std::vector<long long>{0, 1});
  for (int k = 2; k <= 4; ++k) {
    AP t = AP::tau(k);
    for (int i = 0; i <= k - 1; ++i)
      CHECK(compose(t, AP::sigma((i + 1) % k, k)) ==
            compose(AP::sigma(i, k), t));
    CHECK(compose(t, t.inverse()) == AP::identity(k));
  }
}

TEST_CASE("braid and commutation relations") {
  for (int k = 3; k <= 4; ++k)
    for (int i = 0; i < k; ++i) {
      int j = (i + 1) % k;
      CHECK(compose(AP::sigma(i, k), compose(AP::sigma(j, k), AP::sigma(i, k))) ==
            compose(AP::sigma(j, k), compose(AP::sigma(i, k), AP::sigma(j, k))));
    }
  // commuting pairs, |i-j| > 1 mod k
  CHECK(compose(AP::sigma(0, 4), AP::sigma(2, 4)) ==
        compose(AP::sigma(2, 4), AP::sigma(0, 4)));
  CHECK(compose(AP::sigma(1, 4), AP::sigma(3, 4)) ==
        compose(AP::sigma(3, 4), AP::sigma(1, 4)));
}

TEST_CASE("y generators") {
  CHECK(AP::y_generator(1, 1) == AP::tau(1));
  CHECK(AP::y_generator(1, 1).window() == std::vector<long long>{0});

  SUBCASE("translations commute") {
    for (int k = 2; k <= 3; ++k)
      for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
          CHECK(compose(AP::y_generator(i, k), AP::y_generator(j, k)) ==
                compose(AP::y_generator(j, k), AP::y_generator(i, k)));
  }

  SUBCASE("y_i moves only residue class i") {
    for (int k = 1; k <= 4; ++k)
      for (int i = 1; i <= k; ++i) {
        AP y = AP::y_generator(i, k);
        for (int m = 1; m <= k; ++m)
          CHECK(y(m) == (m == i ? m - k : m));
      }
  }
}

TEST_CASE("random words satisfy the extended group conditions") {
  std::mt19937 rng(7);
  for (int k = 2; k <= 4; ++k) {
    auto gens = generators(k);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      AP w = AP::identity(k);
      for (int step = 0; step < 8; ++step) w = compose(w, gens[pick(rng)]);
      CHECK(w.is_extended_affine());
      // sigma words alone stay in the non-extended group
    }
    AP s = AP::identity(k);
    for (int i = 0; i < k; ++i) s = compose(s, AP::sigma(i, k));
    CHECK(s.is_affine());
    CHECK_FALSE(AP::tau(k).is_affine());
  }
}

TEST_CASE("loop evaluation and action") {
  LoopFunction la = LoopFunction::from_partition(P({2, 1}), 2, 3);
  CHECK(la(1) == 2);
  CHECK(la(2) == 1);
  CHECK(la(3) == -1);
  CHECK(la(0) == 4);

  SUBCASE("identity and right-action axiom") {
    CHECK(la.act(AP::identity(2)) == la);
    std::mt19937 rng(11);
    auto gens = generators(2);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      AP u = gens[pick(rng)], v = gens[pick(rng)];
      CHECK(la.act(u).act(v) == la.act(compose(u, v)));
    }
  }

  SUBCASE("tau action wraps with +n") {
    CHECK(la.act(AP::tau(2)).window() == std::vector<long long>{4, 2});
  }
}

TEST_CASE("loop_shift") {
  LoopFunction la = LoopFunction::from_partition(P({4, 3, 2}), 3, 4);
  CHECK(la.shift(0) == la);
  CHECK(la.shift(1).window() == std::vector<long long>{6, 4, 3});
  CHECK(la.shift(1).shift(-1) == la);
  // shifting by tau action agrees
  CHECK(la.act(AP::tau(3)) == la.shift(1));
}

TEST_CASE("reduce_to_alcove") {
  SUBCASE("already reduced") {
    LoopFunction la = LoopFunction::from_partition(P({2, 1}), 2, 3);
    AlcoveReduction r = reduce_to_alcove(la);
    CHECK(r.alcove == P({2, 1}));
    CHECK(r.witness == AP::identity(2));
  }

  SUBCASE("window examples") {
    CHECK(reduce_to_alcove(LoopFunction(2, 3, {5, 1})).alcove == P({2, 1}));
    CHECK(reduce_to_alcove(LoopFunction(2, 3, {4, 1})).alcove == P({1, 1}));
  }

  SUBCASE("witness really maps onto the alcove window") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> val(-6, 9);
    for (int trial = 0; trial < 200; ++trial) {
      int k = 2 + trial % 2, n = 3 + trial % 2;
      std::vector<long long> w(static_cast<std::size_t>(k));
      for (auto& v : w) v = val(rng);
      LoopFunction f(k, n, w);
      AlcoveReduction r = reduce_to_alcove(f);
      CHECK(f.act(r.witness) ==
            LoopFunction::from_partition(r.alcove, k, n));
    }
  }

  SUBCASE("fundamental domain uniqueness over random orbit elements") {
    std::mt19937 rng(31);
    for (auto [k, n] : {std::pair{2, 3}, std::pair{3, 4}}) {
      auto gens = generators(k);
      std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
      for (const Partition& nu : alcove_partitions(k, n)) {
        LoopFunction base = LoopFunction::from_partition(nu, k, n);
        for (int trial = 0; trial < 25; ++trial) {
          AP w = AP::identity(k);
          for (int step = 0; step < 6; ++step) w = compose(w, gens[pick(rng)]);
          CHECK(reduce_to_alcove(base.act(w)).alcove == nu);
        }
      }
    }
  }
}

TEST_CASE("loop_conjugate") {
  SUBCASE("alcove window gives the padded ordinary conjugate") {
    LoopFunction mu = LoopFunction::from_partition(P({2, 2, 1}), 3, 4);
    CHECK(mu.conjugate_loop().window() == std::vector<long long>{3, 2, 0, 0});
    for (auto [k, n] : {std::pair{2, 3}, std::pair{3, 4}, std::pair{2, 4}})
      for (const Partition& la : alcove_partitions(k, n)) {
        LoopFunction c =
            LoopFunction::from_partition(la, k, n).conjugate_loop();
        IntTuple expect = conjugate(la).padded(n);
        CHECK(c.window() ==
              std::vector<long long>(expect.begin(), expect.end()));
      }
  }

  SUBCASE("involution, including shifted loops") {
    for (auto [k, n] : {std::pair{2, 3}, std::pair{3, 4}})
      for (const Partition& la : alcove_partitions(k, n))
        for (int d = -2; d <= 2; ++d) {
          LoopFunction f = LoopFunction::from_partition(la, k, n).shift(d);
          CHECK(f.conjugate_loop().conjugate_loop() == f);
        }
  }

  SUBCASE("periodicity of the conjugate") {
    LoopFunction f = LoopFunction(2, 3, {5, 1});
    LoopFunction c = f.conjugate_loop();
    for (int j = -5; j <= 5; ++j) CHECK(c(j + 3) == c(j) - 2);
  }
}

TEST_CASE("cylindric containment and cells") {
  SUBCASE("equal loops give the empty cell list") {
    LoopFunction mu = LoopFunction::from_partition(P({2, 1}), 2, 3);
    CHECK(cylindric_contains(mu, mu));
    CHECK(shape_cells(CylindricShape{P({2, 1}), 0, P({2, 1}), 2, 3}).empty());
  }

  SUBCASE("running example shape has 8 strip cells") {
    CylindricShape shape{P({4, 3, 2}), 1, P({2, 2, 1}), 3, 4};
    CHECK(shape_cells(shape).size() == 8);
  }

  SUBCASE("non-contained pair") {
    LoopFunction mu = LoopFunction::from_partition(P({3, 3}), 2, 3);
    LoopFunction la = LoopFunction::from_partition(P({1, 1}), 2, 3);
    CHECK_FALSE(cylindric_contains(mu, la));
  }

  SUBCASE("cell count is nd + |lambda| - |mu| over a grid") {
    for (auto [k, n] : {std::pair{2, 3}, std::pair{3, 4}})
      for (const Partition& la : alcove_partitions(k, n))
        for (const Partition& mu : alcove_partitions(k, n))
          for (long long d = 0; d <= 2; ++d) {
            LoopFunction bot = LoopFunction::from_partition(mu, k, n);
            LoopFunction top = LoopFunction::from_partition(la, k, n).shift(d);
            if (!cylindric_contains(bot, top)) continue;
            CylindricShape shape{la, d, mu, k, n};
            CHECK(static_cast<long>(shape_cells(shape).size()) ==
                  n * d + la.size() - mu.size());
          }
  }
}

TEST_CASE("alcove_partitions") {
  CHECK(alcove_partitions(2, 3).size() == 6);
  CHECK(alcove_partitions(1, 4).size() == 4);
  auto list = alcove_partitions(3, 3);
  CHECK(list.size() == 10);
  for (std::size_t i = 1; i < list.size(); ++i) CHECK(list[i - 1] > list[i]);
  for (const Partition& p : list)
    CHECK(LoopFunction::from_partition(p, 3, 3).in_alcove());
}
