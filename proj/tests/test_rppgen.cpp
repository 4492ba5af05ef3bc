#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cylfuse/rppgen.hpp"

using namespace cylfuse;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

}  // namespace

TEST_CASE("enumerate_rpp") {
  SUBCASE("trivial shapes") {
    auto chains = enumerate_rpp(P({2, 1}), P({2, 1}), {});
    REQUIRE(chains.size() == 1);
    CHECK(chains[0].steps.size() == 1);
    CHECK(rpp_weight_factor(chains[0]) == 1);
  }

  SUBCASE("single column growth") {
    auto chains = enumerate_rpp(P({2}), P({}), {1, 1});
    REQUIRE(chains.size() == 1);
    CHECK(chains[0].steps ==
          std::vector<Partition>{P({}), P({1}), P({2})});
  }

  SUBCASE("three-row shape admits chains of weight (3,1,0)") {
    auto chains = enumerate_rpp(P({4, 3, 2}), P({2, 2, 1}), {3, 1, 0});
    CHECK(!chains.empty());
    for (const RppChain& c : chains) {
      CHECK(c.steps.front() == P({2, 2, 1}));
      CHECK(c.steps.back() == P({4, 3, 2}));
      for (std::size_t i = 1; i < c.steps.size(); ++i) {
        CHECK(c.steps[i].contains(c.steps[i - 1]));
        CHECK(c.steps[i].size() - c.steps[i - 1].size() == c.weight[i - 1]);
      }
    }
  }

  SUBCASE("zero steps repeat the partition") {
    auto chains = enumerate_rpp(P({1}), P({}), {0, 1, 0});
    REQUIRE(chains.size() == 1);
    CHECK(chains[0].steps ==
          std::vector<Partition>{P({}), P({}), P({1}), P({1})});
  }

  SUBCASE("impossible weights give the empty list") {
    CHECK(enumerate_rpp(P({2}), P({}), {3}).empty());
    CHECK(enumerate_rpp(P({2}), P({1, 1}), {1}).empty());
  }
}

TEST_CASE("rpp_weight_factor") {
  auto chains = enumerate_rpp(P({2, 1}), P({1}), {2});
  // single step (1) -> (2,1), factor chi_{(2,1)/(1)} = 2
  REQUIRE(chains.size() == 1);
  CHECK(rpp_weight_factor(chains[0]) == 2);
}

TEST_CASE("h_skew_expansion") {
  SUBCASE("empty mu reduces to h_expansion") {
    for (int k = 2; k <= 4; k += 2)
      for (long m = 0; m <= 6; ++m)
        for (const Partition& la :
             partitions_of(m, static_cast<int>(m), static_cast<int>(m)))
          CHECK(h_skew_expansion(la, P({}), k) == h_expansion(la, k));
  }

  SUBCASE("lambda = mu gives the constant 1") {
    MExpansion e = h_skew_expansion(P({2, 2}), P({2, 2}), 3);
    CHECK(e.coeff(P({})) == 1);
    CHECK(e.coeffs().size() == 1);
  }

  SUBCASE("coefficients equal chi_of_weight, the independent route") {
    for (long m = 2; m <= 6; ++m)
      for (const Partition& la :
           partitions_of(m, static_cast<int>(m), static_cast<int>(m)))
        for (long mb = 0; mb < m; ++mb)
          for (const Partition& mu :
               partitions_of(mb, static_cast<int>(mb), static_cast<int>(mb))) {
            if (!la.contains(mu)) continue;
            int k = static_cast<int>(m);
            MExpansion e = h_skew_expansion(la, mu, k);
            for (const Partition& nu :
                 partitions_of(m - mb, k, static_cast<int>(m - mb)))
              CHECK(e.coeff(nu) == chi_of_weight(la, mu, nu));
          }
  }
}

TEST_CASE("chi_cyl closed form") {
  SUBCASE("d=0 reduces to chi_skew on full alcove grids") {
    for (auto [k, n] : {std::pair{2, 3}, std::pair{3, 4}})
      for (const Partition& la : alcove_partitions(k, n))
        for (const Partition& mu : alcove_partitions(k, n))
          CHECK(chi_cyl(la, 0, mu, k, n) == chi_skew(la, mu));
  }

  SUBCASE("non-contained shape gives zero") {
    CHECK(chi_cyl(P({1, 1}), 0, P({3, 3}), 2, 3) == 0);
  }

  SUBCASE("three-row cylindric shape is nonempty") {
    CHECK(chi_cyl(P({4, 3, 2}), 1, P({2, 2, 1}), 3, 4) >= 1);
  }

  SUBCASE("rejects non-alcove input") {
    CHECK_THROWS(chi_cyl(P({5, 1}), 0, P({1}), 2, 3));
  }
}

TEST_CASE("chi_cyl equals chi_cyl_by_count") {
  for (auto [k, n] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 3},
                      std::pair{3, 4}})
    for (const Partition& la : alcove_partitions(k, n))
      for (const Partition& mu : alcove_partitions(k, n))
        for (long long d = 0; d <= 1; ++d)
          CHECK(chi_cyl(la, d, mu, k, n) == chi_cyl_by_count(la, d, mu, k, n));
  // the full d <= 2 grid incl. the bound-doubling guard runs in acceptance
}

TEST_CASE("enumerate_cyl_chains") {
  SUBCASE("single step iff contained") {
    Partition la({4, 3, 2}), mu({2, 2, 1});
    auto chains = enumerate_cyl_chains(la, 1, mu, {8}, 3, 4);
    REQUIRE(chains.size() == 1);
    CHECK(chains[0].loops == std::vector<Partition>{mu, la});
    CHECK(chains[0].offsets == std::vector<long long>{0, 1});
  }

  SUBCASE("weight (4,3,1) is realisable on the three-row shape") {
    auto chains = enumerate_cyl_chains(P({4, 3, 2}), 1, P({2, 2, 1}),
                                       {4, 3, 1}, 3, 4);
    CHECK(!chains.empty());
    for (const CylChain& c : chains) {
      CHECK(c.loops.front() == P({2, 2, 1}));
      CHECK(c.loops.back() == P({4, 3, 2}));
      for (std::size_t i = 1; i < c.loops.size(); ++i) {
        long long delta = c.offsets[i] - c.offsets[i - 1];
        CHECK(delta >= 0);
        // strip cell count identity
        CHECK(c.weight[i - 1] ==
              4 * delta + c.loops[i].size() - c.loops[i - 1].size());
        LoopFunction bot = LoopFunction::from_partition(c.loops[i - 1], 3, 4);
        LoopFunction top =
            LoopFunction::from_partition(c.loops[i], 3, 4).shift(delta);
        CHECK(cylindric_contains(bot, top));
      }
    }
  }

  SUBCASE("impossible weight gives the empty list") {
    CHECK(enumerate_cyl_chains(P({4, 3, 2}), 1, P({2, 2, 1}), {8, 1}, 3, 4)
              .empty());
    CHECK(enumerate_cyl_chains(P({4, 3, 2}), 1, P({2, 2, 1}), {7}, 3, 4)
              .empty());
  }
}

TEST_CASE("cyl_h_coefficient") {
  SUBCASE("d=0 agrees with the skew expansion") {
    for (auto [k, n] : {std::pair{2, 3}, std::pair{3, 4}})
      for (const Partition& la : alcove_partitions(k, n))
        for (const Partition& mu : alcove_partitions(k, n)) {
          if (!la.contains(mu)) continue;
          MExpansion skew = h_skew_expansion(la, mu, k);
          long deg = la.size() - mu.size();
          for (const Partition& nu :
               partitions_of(deg, k, static_cast<int>(deg)))
            CHECK(cyl_h_coefficient(la, 0, mu, nu, k, n) == skew.coeff(nu));
        }
  }

  SUBCASE("wrong degree gives zero") {
    CHECK(cyl_h_coefficient(P({2, 1}), 1, P({1, 1}), P({2}), 2, 3) == 0);
  }

  SUBCASE("weight-composition invariance (symmetry witness)") {
    int k = 3, n = 4;
    Partition la({4, 3, 2}), mu({2, 2, 1});
    ChiCylCache cache(k, n);
    for (const Partition& nu : partitions_of(8, k, 8)) {
      Int expect = cyl_h_coefficient(la, 1, mu, nu, k, n, &cache);
      IntTuple theta(nu.parts().begin(), nu.parts().end());
      std::sort(theta.begin(), theta.end());
      do {
        Int got = 0;
        for (const CylChain& c : enumerate_cyl_chains(la, 1, mu, theta, k, n)) {
          Int w = 1;
          for (std::size_t i = 1; i < c.loops.size(); ++i)
            w *= cache.chi(c.loops[i], c.offsets[i] - c.offsets[i - 1],
                           c.loops[i - 1]);
          got += w;
        }
        CHECK(got == expect);
      } while (std::next_permutation(theta.begin(), theta.end()));
    }
  }
}

TEST_CASE("cyl_h_expansion") {
  SUBCASE("lambda = mu at d=0 is the constant 1") {
    MExpansion e = cyl_h_expansion(P({2, 2}), 0, P({2, 2}), 2, 3);
    CHECK(e.coeff(P({})) == 1);
    CHECK(e.coeffs().size() == 1);
  }

  SUBCASE("homogeneous of degree nd + |lambda| - |mu|") {
    MExpansion e = cyl_h_expansion(P({4, 3, 2}), 1, P({2, 2, 1}), 3, 4);
    CHECK(!e.coeffs().empty());
    for (const auto& [nu, c] : e.coeffs()) CHECK(nu.size() == 8);
  }
}
