#ifndef CYLFUSE_AFFINE_HPP_
#define CYLFUSE_AFFINE_HPP_

#include <utility>
#include <vector>

#include "cylfuse/partition.hpp"

namespace cylfuse {

// A bijection w : Z -> Z with w(m+k) = w(m)+k, stored by its window
// (w(1),...,w(k)). Equality is window equality.
class AffinePermutation {
 public:
  AffinePermutation(int k, std::vector<long long> window);

  int k() const { return k_; }
  const std::vector<long long>& window() const { return window_; }

  long long operator()(long long m) const;

  static AffinePermutation identity(int k);
  // Simple reflection sigma_i, 0 <= i <= k-1: m -> m+1 if m = i mod k,
  // m -> m-1 if m = i+1 mod k, else fixed.
  static AffinePermutation sigma(int i, int k);
  // Shift m -> m-1.
  static AffinePermutation tau(int k);
  // Translation generators: y_k = tau o sigma_1 o ... o sigma_{k-1},
  // y_i = sigma_i o y_{i+1} o sigma_i.
  static AffinePermutation y_generator(int i, int k);
  // y^alpha = y_1^{alpha_1} o ... o y_k^{alpha_k}; alpha may be negative.
  static AffinePermutation y_power(const std::vector<int>& alpha);

  AffinePermutation inverse() const;

  // Window sum; equals k(k+1)/2 exactly on the non-extended affine group
  // and k(k+1)/2 mod k on the whole extended group.
  long long window_sum() const;
  bool is_extended_affine() const;   // residue bijectivity + sum mod k
  bool is_affine() const;            // additionally exact sum

  friend bool operator==(const AffinePermutation& a,
                         const AffinePermutation& b) = default;

 private:
  int k_;
  std::vector<long long> window_;
};

// (u o v)(m) = u(v(m)).
AffinePermutation compose(const AffinePermutation& u,
                          const AffinePermutation& v);

// An element of P_{k,n}: a function Z -> Z with f(m+k) = f(m) - n, stored
// by its window (f(1),...,f(k)).
class LoopFunction {
 public:
  LoopFunction(int k, int n, std::vector<long long> window)
      : k_(k), n_(n), window_(std::move(window)) {}

  static LoopFunction from_partition(const Partition& lambda, int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  const std::vector<long long>& window() const { return window_; }

  long long operator()(long long m) const;

  // n >= f(1) >= ... >= f(k) > 0.
  bool in_alcove() const;
  Partition alcove_partition() const;

  // lambda o tau^d: window i -> f(i-d).
  LoopFunction shift(long long d) const;

  // Right action window i -> f(w(i)); the result is again in P_{k,n}.
  LoopFunction act(const AffinePermutation& w) const;

  // Boundary-path transpose, a LoopFunction over (n,k):
  // f'_j = #{i>=1 : f(i) >= j} - #{i<=0 : f(i) < j}.
  LoopFunction conjugate_loop() const;

  friend bool operator==(const LoopFunction& a, const LoopFunction& b) = default;

 private:
  int k_;
  int n_;
  std::vector<long long> window_;
};

struct AlcoveReduction {
  Partition alcove;           // the unique orbit point in A_{k,n}
  AffinePermutation witness;  // act(input, witness) has that window
};

AlcoveReduction reduce_to_alcove(const LoopFunction& f);

// mu[0] <= lambda[d], checked on one period.
bool cylindric_contains(const LoopFunction& mu, const LoopFunction& lambda_d);

// Cells between two cylindric loops lambda in A_{k,n}, degree d, mu in
// A_{k,n}.
struct CylindricShape {
  Partition lambda;
  long long d = 0;
  Partition mu;
  int k = 0;
  int n = 0;
};

struct Cell {
  long long row;  // 1 <= row <= k
  long long col;  // mu[0]_row < col <= lambda[d]_row
  friend bool operator==(const Cell&, const Cell&) = default;
};

// Cells in the fundamental strip 1 <= i <= k; count is nd + |lambda| - |mu|
// whenever the shape is contained.
std::vector<Cell> shape_cells(const CylindricShape& shape);

// All partitions in A_{k,n}, lexicographically decreasing.
std::vector<Partition> alcove_partitions(int k, int n);

}  // namespace cylfuse

#endif  // CYLFUSE_AFFINE_HPP_
