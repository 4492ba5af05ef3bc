#include "cylfuse/selftest.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "cylfuse/fusion.hpp"
#include "cylfuse/modular.hpp"
#include "cylfuse/rppgen.hpp"
#include "cylfuse/symcore.hpp"

namespace cylfuse {

namespace {

struct Checker {
  bool pass = true;
  std::string detail;
  long checks = 0;

  void fail(const std::string& msg) {
    if (pass) detail = msg;
    pass = false;
  }

  template <typename A, typename B>
  void equal(const A& a, const B& b, const std::string& context) {
    ++checks;
    if (!(a == b)) {
      std::ostringstream os;
      os << context << ": " << a << " != " << b;
      fail(os.str());
    }
  }

  void require(bool ok, const std::string& context) {
    ++checks;
    if (!ok) fail(context);
  }

  CriterionResult result(int id, const std::string& name) const {
    CriterionResult r{id, name, pass, detail};
    if (pass) {
      std::ostringstream os;
      os << checks << " checks";
      r.detail = os.str();
    }
    return r;
  }
};

CriterionResult criterion1() {
  Checker c;
  for (int k = 1; k <= 4; ++k)
    for (const Partition& la : partitions_in_box(k, 4))
      for (const Partition& mu : partitions_in_box(k, 4))
        c.equal(chi_skew(la, mu), chi_skew_by_count(la, mu, k),
                "chi " + la.to_string() + "/" + mu.to_string());
  return c.result(1, "chi_skew closed form = set count, box (4^4)");
}

CriterionResult criterion2() {
  Checker c;
  for (long m = 0; m <= 6; ++m)
    for (const Partition& la :
         partitions_of(m, static_cast<int>(m), static_cast<int>(m)))
      for (long mb = 0; mb <= m; ++mb)
        for (const Partition& mu :
             partitions_of(mb, static_cast<int>(mb), static_cast<int>(mb))) {
          if (!la.contains(mu)) continue;
          int k = std::max<int>(1, static_cast<int>(m));
          MExpansion e = h_skew_expansion(la, mu, k);
          for (const Partition& nu :
               partitions_of(m - mb, k, static_cast<int>(m - mb)))
            c.equal(e.coeff(nu), chi_of_weight(la, mu, nu),
                    "h_skew " + la.to_string() + "/" + mu.to_string() +
                        " at " + nu.to_string());
        }
  return c.result(2, "RPP weighted sum = coproduct coefficient, |lambda|<=6");
}

CriterionResult criterion3() {
  Checker c;
  for (auto [k, n] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 3},
                      std::pair{3, 4}})
    for (const Partition& la : alcove_partitions(k, n))
      for (const Partition& mu : alcove_partitions(k, n))
        for (long long d = 0; d <= 2; ++d) {
          Int closed = chi_cyl(la, d, mu, k, n);
          Int counted = chi_cyl_by_count(la, d, mu, k, n);
          c.equal(closed, counted,
                  "chi_cyl " + la.to_string() + "/" + std::to_string(d) + "/" +
                      mu.to_string());
          c.equal(counted, chi_cyl_by_count(la, d, mu, k, n, 2),
                  "band doubling " + la.to_string() + "/" +
                      std::to_string(d) + "/" + mu.to_string());
        }
  return c.result(3, "cylindric chi binomial formula = affine set count");
}

CriterionResult criterion4() {
  Checker c;
  for (auto [k, n] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 3},
                      std::pair{3, 4}})
    for (const Partition& la : alcove_partitions(k, n))
      for (const Partition& mu : alcove_partitions(k, n))
        for (long long d = 0; d <= 2; ++d) {
          long deg = n * d + la.size() - mu.size();
          if (deg < 0) continue;
          MExpansion lhs = cyl_h_expansion(la, d, mu, k, n);
          MExpansion rhs(k);
          for (const Partition& nu :
               partitions_of(deg, k, static_cast<int>(deg))) {
            Int N = n_coefficient(mu, nu, la, k, n);
            if (N == 0) continue;
            MExpansion h = h_expansion(nu, k);
            for (const auto& [s, coeff] : h.coeffs()) rhs.add(s, N * coeff);
          }
          c.require(lhs == rhs, "h_{lambda/d/mu} expansion " + la.to_string() +
                                    "/" + std::to_string(d) + "/" +
                                    mu.to_string());
        }
  return c.result(4, "cylindric h = sum_nu N h_nu as polynomials");
}

CriterionResult criterion5() {
  Checker c;
  for (auto [k, n] : {std::pair{2, 3}, std::pair{3, 3}})
    for (const Partition& mu : alcove_partitions(k, n))
      for (const Partition& la : alcove_partitions(k, n))
        for (long m = 0; m <= n + k; ++m)
          for (const Partition& nu : partitions_of(m, k, static_cast<int>(m)))
            c.equal(n_reduced(mu, nu, la, k, n),
                    n_coefficient(mu, nu, la, k, n),
                    "N reduced " + mu.to_string() + "," + nu.to_string() +
                        " -> " + la.to_string());
  return c.result(5, "multinomial reduction of N to the alcove");
}

CriterionResult criterion6() {
  Checker c;
  for (auto [k, n] : {std::pair{1, 4}, std::pair{2, 3}, std::pair{2, 4},
                      std::pair{3, 3}}) {
    auto alcove = alcove_partitions(k, n);
    for (const Partition& a : alcove)
      for (const Partition& b : alcove) {
        FusionElement fa = FusionElement::basis(a, k, n);
        FusionElement fb = FusionElement::basis(b, k, n);
        FusionElement ab = fusion_product(fa, fb);
        c.require(ab == fusion_product(fb, fa),
                  "commutativity " + a.to_string() + "*" + b.to_string());
        for (const Partition& d : alcove)
          c.require(fusion_product(ab, FusionElement::basis(d, k, n)) ==
                        fusion_product(fa, fusion_product(fb,
                            FusionElement::basis(d, k, n))),
                    "associativity " + a.to_string() + "*" + b.to_string() +
                        "*" + d.to_string());
      }
    Partition top(std::vector<int>(static_cast<std::size_t>(k), n));
    FusionElement unit(k, n);
    unit.add(top, LaurentZ::monomial(-k, 1));
    for (const Partition& mu : alcove) {
      FusionElement fb = FusionElement::basis(mu, k, n);
      c.require(fusion_product(unit, fb) == fb, "unit on " + mu.to_string());
    }
  }
  for (auto [k, n] : {std::pair{1, 3}, std::pair{2, 3}, std::pair{2, 4},
                      std::pair{3, 3}})
    c.require(rational_determinant(gram_matrix(k, n, Rat(1))) != 0,
              "gram determinant (" + std::to_string(k) + "," +
                  std::to_string(n) + ")");
  return c.result(6, "fusion ring axioms and Frobenius nondegeneracy");
}

CriterionResult criterion7() {
  Checker c;
  for (int n = 1; n <= 8; ++n)
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int d = 1; d <= n; ++d) {
          Int expect = (a + b - d) % n == 0 && a + b >= d ? 1 : 0;
          c.equal(n_coefficient(Partition({a}), Partition({b}),
                                Partition({d}), 1, n),
                  expect,
                  "k=1 rule n=" + std::to_string(n) + " a=" +
                      std::to_string(a) + " b=" + std::to_string(b));
        }
  return c.result(7, "k=1 fusion is the cyclic group rule, n<=8");
}

CriterionResult criterion8() {
  Checker c;
  for (auto [k, n] : {std::pair{1, 5}, std::pair{2, 3}, std::pair{2, 4},
                      std::pair{3, 3}}) {
    auto alcove = alcove_partitions(k, n);
    for (const Partition& a : alcove)
      for (const Partition& b : alcove)
        for (const Partition& d : alcove) {
          VerlindeResult r = verlinde_n(a, b, d, k, n);
          c.require(r.ok, "verlinde well-conditioned " + a.to_string() + "," +
                              b.to_string() + "," + d.to_string() +
                              (r.issue.empty() ? "" : ": " + r.issue));
          if (!r.ok) continue;
          c.equal(Int(r.rounded), n_coefficient(a, b, d, k, n),
                  "verlinde " + a.to_string() + "," + b.to_string() + " -> " +
                      d.to_string());
        }
  }
  return c.result(8, "residue formula reproduces N on the grid");
}

CriterionResult criterion9() {
  Checker c;
  for (auto [k, n] : {std::pair{1, 5}, std::pair{2, 3}, std::pair{2, 4},
                      std::pair{3, 3}}) {
    ModularReport rep = modular_relations_report(k, n, 1e-9);
    for (const RelationDeviation& r : rep.relations)
      c.require(r.pass, r.relation + " at (" + std::to_string(k) + "," +
                            std::to_string(n) + "), dev " +
                            std::to_string(r.max_dev));
  }
  return c.result(9, "modular S/T/C relations within 1e-9");
}

CriterionResult criterion10() {
  Checker c;
  for (auto [k, n] : {std::pair{1, 6}, std::pair{2, 3}, std::pair{2, 4}}) {
    IdempotentReport rep = idempotent_check(k, n, 1e-9);
    c.require(rep.pass, "idempotents at (" + std::to_string(k) + "," +
                            std::to_string(n) + "), dev " +
                            std::to_string(rep.max_dev_delta));
  }
  return c.result(10, "idempotent evaluations within 1e-9 of delta");
}

CriterionResult criterion11() {
  Checker c;
  CylindricShape shape{Partition({4, 3, 2}), 1, Partition({2, 2, 1}), 3, 4};
  c.equal(shape_cells(shape).size(), std::size_t{8}, "strip cell count");
  auto chains = enumerate_cyl_chains(Partition({4, 3, 2}), 1,
                                     Partition({2, 2, 1}), {4, 3, 1}, 3, 4);
  c.require(!chains.empty(), "no cylindric RPP of weight (4,3,1)");
  return c.result(11, "shape (4,3,2)/1/(2,2,1): 8 cells, weight (4,3,1) filled");
}

}  // namespace

std::vector<CriterionResult> run_acceptance_criteria() {
  return {criterion1(), criterion2(), criterion3(), criterion4(),
          criterion5(), criterion6(), criterion7(), criterion8(),
          criterion9(), criterion10(), criterion11()};
}

}  // namespace cylfuse
