#ifndef CYLFUSE_MODULAR_HPP_
#define CYLFUSE_MODULAR_HPP_

#include <complex>
#include <string>
#include <vector>

#include "cylfuse/affine.hpp"
#include "cylfuse/symcore.hpp"

namespace cylfuse {

// The complex number e^{2*pi*i*r} with r an exact rational, reduced mod 1.
// Products of phases stay exact until the final conversion.
class RationalPhase {
 public:
  RationalPhase() : r_(0) {}
  explicit RationalPhase(Rat r) : r_(reduce(std::move(r))) {}

  const Rat& fraction() const { return r_; }
  std::complex<double> value() const;

  friend RationalPhase operator*(const RationalPhase& a, const RationalPhase& b) {
    return RationalPhase(a.r_ + b.r_);
  }
  friend bool operator==(const RationalPhase& a, const RationalPhase& b) = default;

 private:
  static Rat reduce(Rat r);
  Rat r_;
};

// Square complex matrix indexed by A_{k,n} in lexicographically decreasing
// order; the same order is shared by S, T and C.
struct ComplexMatrix {
  std::vector<Partition> basis;
  std::vector<std::vector<std::complex<double>>> a;

  std::size_t dim() const { return basis.size(); }
};

ComplexMatrix matrix_product(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix conjugate_transpose(const ComplexMatrix& x);
ComplexMatrix identity_matrix(const std::vector<Partition>& basis);
double max_deviation(const ComplexMatrix& x, const ComplexMatrix& y);

// m_lambda evaluated at (zeta^{alpha_1},...,zeta^{alpha_k}), zeta = e^{2pi i/n}.
// alpha entries may be negative.
std::complex<double> eval_m(const Partition& lambda, const IntTuple& alpha,
                            int k, int n);

// S_{lambda,alpha} = sqrt(|S_lambda|/|S_alpha|) m_lambda(zeta^alpha) / n^{k/2}.
ComplexMatrix s_matrix(int k, int n);

// Diagonal T with phase -k(n-1)/24 + sum lambda_i(n-lambda_i)/(2n) of a turn.
ComplexMatrix t_matrix(int k, int n);

// lambda* : image of (n-lambda_k,...,n-lambda_1) under tau^{m_n(lambda)}.
Partition dual_weight(const Partition& lambda, int k, int n);

// Charge conjugation permutation matrix delta_{lambda,mu*}.
ComplexMatrix c_matrix(int k, int n);

struct VerlindeResult {
  std::complex<double> value;
  long long rounded = 0;
  bool ok = false;            // |value - rounded| <= 1e-6 and no tiny S entry
  std::string issue;
};

// Residue formula for N_{lambda,mu}^nu with S_{nu,alpha}^{-1} read as the
// inverse-matrix entry conj(S_{alpha,nu}); the integer-match tests pin this
// reading down.
VerlindeResult verlinde_n(const Partition& lambda, const Partition& mu,
                          const Partition& nu, int k, int n);

struct IdempotentReport {
  double max_dev_delta = 0;  // |e_alpha(zeta^beta) - delta_{alpha,beta}|
  double max_dev_unity = 0;  // |sum_alpha e_alpha(zeta^beta) - 1|
  double tol = 0;
  bool pass = false;
};

IdempotentReport idempotent_check(int k, int n, double tol);

struct RelationDeviation {
  std::string relation;
  double max_dev = 0;
  bool pass = false;
};

struct ModularReport {
  std::vector<RelationDeviation> relations;
  double tol = 0;
  bool pass = false;
};

// Checks (ST)^3 = S^2 = C, C^2 = Id, S S* = Id, S* = CS = SC, CTC = T.
ModularReport modular_relations_report(int k, int n, double tol);

}  // namespace cylfuse

#endif  // CYLFUSE_MODULAR_HPP_
