#ifndef CYLFUSE_SYMCORE_HPP_
#define CYLFUSE_SYMCORE_HPP_

#include <map>
#include <vector>

#include "cylfuse/partition.hpp"

namespace cylfuse {

// C(a,b), zero whenever a < 0, b < 0 or b > a.
Int binomial(long a, long b);

Int factorial(int n);

// C(total; parts...) = total! / prod parts_i!; zero unless all parts >= 0
// and they sum to total.
Int multinomial(int total, const std::vector<int>& parts);

// Conjugate partition: column counts of the Young diagram.
Partition conjugate(const Partition& lambda);

// |S_mu| = prod over distinct entry values (zeros included) of m!.
Int stabilizer_order(const IntTuple& mu);

// All distinct k-tuples that rearrange (mu_1,...,mu_k) padded with zeros,
// in lexicographically decreasing order. Length k!/|S_mu|.
std::vector<IntTuple> distinct_rearrangements(const Partition& mu, int k);

// Number of distinct permutations alpha of mu with alpha inside lambda,
// as the closed binomial product over conjugate columns.
Int chi_skew(const Partition& lambda, const Partition& mu);

// Same count obtained by filtering distinct_rearrangements(mu,k) against
// the componentwise bound lambda.
Int chi_skew_by_count(const Partition& lambda, const Partition& mu, int k);

// Coefficient of m_nu in m_lambda * m_mu, counted as pairs of distinct
// rearrangements summing to nu.
Int f_coefficient(const Partition& lambda, const Partition& mu,
                  const Partition& nu, int k);

// Number of finite N-matrices with row sums lambda and column sums mu;
// the coefficient of m_mu in h_lambda.
Int l_matrix_count(const Partition& lambda, const Partition& mu);

// chi_{nu/mu}(lambda) = sum_alpha L_{lambda,alpha} f^nu_{alpha,mu};
// zero unless |nu| = |mu| + |lambda|.
Int chi_of_weight(const Partition& nu, const Partition& mu,
                  const Partition& lambda);

// All partitions of m with at most max_parts parts, each part <= max_part.
std::vector<Partition> partitions_of(long m, int max_parts, int max_part);

// All partitions contained in the box (max_part^max_parts), any size.
std::vector<Partition> partitions_in_box(int max_parts, int max_part);

// A symmetric polynomial in k variables, stored in the monomial basis.
class MExpansion {
 public:
  explicit MExpansion(int k) : k_(k) {}

  int k() const { return k_; }
  const std::map<Partition, Int>& coeffs() const { return coeffs_; }

  Int coeff(const Partition& mu) const {
    auto it = coeffs_.find(mu);
    return it == coeffs_.end() ? Int(0) : it->second;
  }

  // Drops partitions with more than k parts; erases entries reaching zero.
  void add(const Partition& mu, const Int& c);

  static MExpansion monomial(const Partition& mu, int k) {
    MExpansion e(k);
    e.add(mu, 1);
    return e;
  }

  friend MExpansion operator+(const MExpansion& a, const MExpansion& b);
  // Brute-force product: expands every m_lambda into its full monomial
  // orbit, multiplies exponentwise and regroups. This is the oracle the
  // rest of the library is tested against.
  friend MExpansion operator*(const MExpansion& a, const MExpansion& b);
  friend bool operator==(const MExpansion& a, const MExpansion& b) = default;

 private:
  int k_;
  std::map<Partition, Int> coeffs_;
};

// m-basis expansion of h_lambda = h_{lambda_1} h_{lambda_2} ... in k
// variables.
MExpansion h_expansion(const Partition& lambda, int k);

}  // namespace cylfuse

#endif  // CYLFUSE_SYMCORE_HPP_
