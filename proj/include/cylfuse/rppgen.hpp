#ifndef CYLFUSE_RPPGEN_HPP_
#define CYLFUSE_RPPGEN_HPP_

#include <map>
#include <tuple>
#include <vector>

#include "cylfuse/affine.hpp"
#include "cylfuse/symcore.hpp"

namespace cylfuse {

// A reverse plane partition of shape top/base as a chain of nested
// partitions; steps[0] = base, steps.back() = top.
struct RppChain {
  std::vector<Partition> steps;
  IntTuple weight;  // |steps[i]/steps[i-1]|
};

// All chains base -> top with the prescribed stepwise sizes theta.
// Steps of size 0 repeat the partition.
std::vector<RppChain> enumerate_rpp(const Partition& top, const Partition& base,
                                    const IntTuple& theta);

// prod over steps of chi_skew.
Int rpp_weight_factor(const RppChain& chain);

// h_{lambda/mu} in k variables: coefficient of m_nu is the chi-weighted
// count of RPP chains of weight nu.
MExpansion h_skew_expansion(const Partition& lambda, const Partition& mu, int k);

// chi_{lambda/d/mu} as the difference of two binomial products over the
// conjugate cylindric loops.
Int chi_cyl(const Partition& lambda, long long d, const Partition& mu,
            int k, int n);

// The same count by enumerating affine permutations in a bounded band;
// band_scale enlarges the search window (used by the bound-doubling check).
Int chi_cyl_by_count(const Partition& lambda, long long d, const Partition& mu,
                     int k, int n, int band_scale = 1);

// A cylindric RPP as a sequence of cylindric loops with offsets.
struct CylChain {
  int k = 0;
  int n = 0;
  std::vector<Partition> loops;      // all in A_{k,n}
  std::vector<long long> offsets;    // 0 = d_0 <= d_1 <= ... <= d_l = d
  IntTuple weight;                   // strip cell counts per step
};

std::vector<CylChain> enumerate_cyl_chains(const Partition& lambda, long long d,
                                           const Partition& mu,
                                           const IntTuple& theta, int k, int n);

// Memo table for chi_cyl values within one expansion run.
class ChiCylCache {
 public:
  ChiCylCache(int k, int n) : k_(k), n_(n) {}
  Int chi(const Partition& lambda, long long d, const Partition& mu);

 private:
  int k_, n_;
  std::map<std::tuple<Partition, long long, Partition>, Int> table_;
};

// chi_{lambda/d/mu}(nu): chi-weighted count of cylindric chains of weight nu.
Int cyl_h_coefficient(const Partition& lambda, long long d, const Partition& mu,
                      const Partition& nu, int k, int n,
                      ChiCylCache* cache = nullptr);

// Full m-basis expansion of h_{lambda/d/mu} in k variables.
MExpansion cyl_h_expansion(const Partition& lambda, long long d,
                           const Partition& mu, int k, int n);

}  // namespace cylfuse

#endif  // CYLFUSE_RPPGEN_HPP_
