#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "cylfuse/fusion.hpp"
#include "cylfuse/modular.hpp"

using namespace cylfuse;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

}  // namespace

TEST_CASE("RationalPhase") {
  RationalPhase a(Rat(1, 3));
  RationalPhase b(Rat(5, 6));
  CHECK((a * b).fraction() == Rat(1, 6));
  CHECK(RationalPhase(Rat(-1, 4)).fraction() == Rat(3, 4));
  CHECK(RationalPhase(Rat(7, 2)).fraction() == Rat(1, 2));
  CHECK(std::abs(RationalPhase(Rat(1, 2)).value() -
                 std::complex<double>(-1, 0)) < 1e-15);

  SUBCASE("long products keep the exact exponent") {
    RationalPhase p;
    for (int i = 0; i < 1000; ++i) p = p * RationalPhase(Rat(1, 7));
    CHECK(p.fraction() == Rat(1000 % 7, 7));
  }
}

TEST_CASE("eval_m") {
  SUBCASE("k=1 single monomial") {
    for (int a = 0; a <= 4; ++a)
      for (int b = -4; b <= 4; ++b) {
        std::complex<double> expect = RationalPhase(Rat(a * b, 5)).value();
        CHECK(std::abs(eval_m(P({a}), {b}, 1, 5) - expect) < 1e-12);
      }
  }

  SUBCASE("m_empty is 1 everywhere") {
    CHECK(std::abs(eval_m(P({}), {1, 2}, 2, 3) - 1.0) < 1e-15);
  }

  SUBCASE("triangle-inequality bound") {
    for (const Partition& la : alcove_partitions(2, 4))
      for (const Partition& al : alcove_partitions(2, 4))
        CHECK(std::abs(eval_m(la, al.padded(2), 2, 4)) <=
              static_cast<double>(distinct_rearrangements(la, 2).size()) +
                  1e-12);
  }
}

TEST_CASE("s_matrix") {
  SUBCASE("k=1 is the DFT-type matrix") {
    ComplexMatrix s = s_matrix(1, 4);
    double r = 1.0 / std::sqrt(4.0);
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t j = 0; j < s.dim(); ++j) {
        int a = s.basis[i].part(1), b = s.basis[j].part(1);
        std::complex<double> expect = RationalPhase(Rat(a * b, 4)).value();
        CHECK(std::abs(s.a[i][j] - r * expect) < 1e-12);
      }
  }

  SUBCASE("unitarity on the acceptance set") {
    for (auto [k, n] : {std::pair{1, 5}, std::pair{2, 3}, std::pair{2, 4},
                        std::pair{3, 3}}) {
      ComplexMatrix s = s_matrix(k, n);
      CHECK(max_deviation(matrix_product(s, conjugate_transpose(s)),
                          identity_matrix(s.basis)) < 1e-9);
    }
  }

  SUBCASE("row for (n^k) has modulus n^{-k/2} sqrt ratio") {
    int k = 2, n = 3;
    ComplexMatrix s = s_matrix(k, n);
    Partition top({3, 3});
    std::size_t row = 0;
    while (s.basis[row] != top) ++row;
    for (std::size_t j = 0; j < s.dim(); ++j) {
      double expect =
          std::sqrt(stabilizer_order(top.padded(k)).convert_to<double>() /
                    stabilizer_order(s.basis[j].padded(k)).convert_to<double>()) /
          3.0;
      CHECK(std::abs(std::abs(s.a[row][j]) - expect) < 1e-12);
    }
  }
}

TEST_CASE("dual_weight and c_matrix") {
  CHECK(dual_weight(P({3, 1}), 2, 3) == P({3, 2}));
  CHECK(dual_weight(P({2, 1}), 2, 3) == P({2, 1}));

  SUBCASE("no part equal to n: plain complement") {
    CHECK(dual_weight(P({2, 1}), 2, 4) == P({3, 2}));
  }

  SUBCASE("involution on every alcove") {
    for (auto [k, n] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 3}})
      for (const Partition& la : alcove_partitions(k, n))
        CHECK(dual_weight(dual_weight(la, k, n), k, n) == la);
  }

  SUBCASE("c_matrix is a permutation matrix squaring to identity") {
    for (auto [k, n] : {std::pair{2, 3}, std::pair{3, 3}}) {
      ComplexMatrix c = c_matrix(k, n);
      for (std::size_t i = 0; i < c.dim(); ++i) {
        int row_ones = 0, col_ones = 0;
        for (std::size_t j = 0; j < c.dim(); ++j) {
          CHECK((c.a[i][j] == 0.0 || c.a[i][j] == 1.0));
          if (c.a[i][j] == 1.0) ++row_ones;
          if (c.a[j][i] == 1.0) ++col_ones;
        }
        CHECK(row_ones == 1);
        CHECK(col_ones == 1);
      }
      CHECK(max_deviation(matrix_product(c, c), identity_matrix(c.basis)) == 0);
    }
  }
}

TEST_CASE("verlinde_n") {
  SUBCASE("k=1, n=4 reproduces the cyclic rule") {
    for (const Partition& a : alcove_partitions(1, 4))
      for (const Partition& b : alcove_partitions(1, 4))
        for (const Partition& c : alcove_partitions(1, 4)) {
          VerlindeResult r = verlinde_n(a, b, c, 1, 4);
          REQUIRE(r.ok);
          CHECK(r.rounded == n_coefficient(a, b, c, 1, 4));
        }
  }

  SUBCASE("matches n_coefficient at (2,3)") {
    for (const Partition& a : alcove_partitions(2, 3))
      for (const Partition& b : alcove_partitions(2, 3))
        for (const Partition& c : alcove_partitions(2, 3)) {
          VerlindeResult r = verlinde_n(a, b, c, 2, 3);
          REQUIRE(r.ok);
          CHECK(std::abs(r.value.imag()) < 1e-9);
          CHECK(r.rounded == n_coefficient(a, b, c, 2, 3));
        }
  }
}

TEST_CASE("idempotent_check") {
  SUBCASE("k=1 DFT projectors") {
    IdempotentReport r = idempotent_check(1, 6, 1e-9);
    CHECK(r.pass);
    CHECK(r.max_dev_delta < 1e-12);
  }
  SUBCASE("(2,3)") {
    IdempotentReport r = idempotent_check(2, 3, 1e-9);
    CHECK(r.pass);
  }
}

TEST_CASE("modular_relations_report") {
  for (auto [k, n] : {std::pair{1, 3}, std::pair{2, 3}, std::pair{2, 4},
                      std::pair{3, 3}}) {
    ModularReport rep = modular_relations_report(k, n, 1e-9);
    for (const RelationDeviation& r : rep.relations) {
      INFO(r.relation << " at k=" << k << " n=" << n << " dev=" << r.max_dev);
      CHECK(r.pass);
    }
    CHECK(rep.pass);
  }

  SUBCASE("CTC=T implies theta is dual-invariant; check directly") {
    int k = 2, n = 3;
    ComplexMatrix t = t_matrix(k, n);
    for (std::size_t i = 0; i < t.dim(); ++i) {
      Partition dual = dual_weight(t.basis[i], k, n);
      std::size_t j = 0;
      while (t.basis[j] != dual) ++j;
      CHECK(std::abs(t.a[i][i] - t.a[j][j]) < 1e-12);
    }
  }
}
