#include "cylfuse/rppgen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cylfuse {

namespace {

// All partitions nu with lo <= nu <= hi componentwise and |nu| = target.
void between_rec(const std::vector<int>& lo, const std::vector<int>& hi,
                 long target, std::size_t row, int prev, std::vector<int>& acc,
                 std::vector<Partition>& out) {
  if (row == hi.size()) {
    if (target == 0) out.emplace_back(acc);
    return;
  }
  int lower = row < lo.size() ? lo[row] : 0;
  int upper = std::min(hi[row], prev);
  for (int v = upper; v >= lower; --v) {
    if (v > target) continue;
    acc.push_back(v);
    between_rec(lo, hi, target - v, row + 1, v, acc, out);
    acc.pop_back();
  }
}

std::vector<Partition> partitions_between(const Partition& lo,
                                          const Partition& hi, long size) {
  std::vector<Partition> out;
  if (size < lo.size() || size > hi.size()) return out;
  std::vector<int> acc;
  between_rec(lo.parts(), hi.parts(), size, 0,
              hi.empty() ? 0 : hi.parts()[0], acc, out);
  return out;
}

void rpp_rec(const Partition& top, const IntTuple& theta, std::size_t step,
             std::vector<Partition>& chain, std::vector<RppChain>& out) {
  if (step == theta.size()) {
    if (chain.back() == top) {
      IntTuple w(theta.begin(), theta.end());
      out.push_back(RppChain{chain, std::move(w)});
    }
    return;
  }
  const Partition& cur = chain.back();
  long next_size = cur.size() + theta[step];
  for (const Partition& nu : partitions_between(cur, top, next_size)) {
    chain.push_back(nu);
    rpp_rec(top, theta, step + 1, chain, out);
    chain.pop_back();
  }
}

}  // namespace

std::vector<RppChain> enumerate_rpp(const Partition& top, const Partition& base,
                                    const IntTuple& theta) {
  std::vector<RppChain> out;
  if (!top.contains(base)) return out;
  long total = 0;
  for (int t : theta) {
    if (t < 0) return out;
    total += t;
  }
  if (total != top.size() - base.size()) return out;
  std::vector<Partition> chain{base};
  rpp_rec(top, theta, 0, chain, out);
  return out;
}

Int rpp_weight_factor(const RppChain& chain) {
  Int r = 1;
  for (std::size_t i = 1; i < chain.steps.size(); ++i)
    r *= chi_skew(chain.steps[i], chain.steps[i - 1]);
  return r;
}

MExpansion h_skew_expansion(const Partition& lambda, const Partition& mu, int k) {
  if (!lambda.contains(mu))
    throw std::invalid_argument("h_skew_expansion: mu not contained in lambda");
  MExpansion r(k);
  long deg = lambda.size() - mu.size();
  for (const Partition& nu : partitions_of(deg, k, static_cast<int>(deg))) {
    Int c = 0;
    IntTuple theta(nu.parts().begin(), nu.parts().end());
    for (const RppChain& chain : enumerate_rpp(lambda, mu, theta))
      c += rpp_weight_factor(chain);
    r.add(nu, c);
  }
  return r;
}

Int chi_cyl(const Partition& lambda, long long d, const Partition& mu,
            int k, int n) {
  LoopFunction lam = LoopFunction::from_partition(lambda, k, n);
  LoopFunction muf = LoopFunction::from_partition(mu, k, n);
  if (!lam.in_alcove() || !muf.in_alcove())
    throw std::invalid_argument("chi_cyl: partitions must lie in the alcove");
  LoopFunction mc = muf.conjugate_loop();
  auto product = [&](long long dd) {
    LoopFunction lc = lam.shift(dd).conjugate_loop();
    Int p = 1;
    for (int j = 1; j <= n; ++j)
      p *= binomial(lc(j) - mc(j + 1), mc(j) - mc(j + 1));
    return p;
  };
  return product(d) - product(d - 1);
}

namespace {

// Enumerates shift vectors t in [-B,B]^k with sum 0 and records every
// distinct admissible window of mu o w.
void by_count_rec(const LoopFunction& mu, const LoopFunction& bound,
                  const std::vector<int>& perm, int band, std::size_t pos,
                  long long tsum, std::vector<long long>& win,
                  std::set<std::vector<long long>>& seen) {
  int k = mu.k();
  if (pos == perm.size()) return;  // unreachable; guarded below
  for (long long t = -band; t <= band; ++t) {
    if (pos + 1 == perm.size() && tsum + t != 0) continue;
    long long value = mu(perm[pos]) - static_cast<long long>(mu.n()) * t;
    if (value > bound(static_cast<long long>(pos) + 1)) continue;
    win.push_back(value);
    if (pos + 1 == perm.size())
      seen.insert(win);
    else
      by_count_rec(mu, bound, perm, band, pos + 1, tsum + t, win, seen);
    win.pop_back();
  }
}

}  // namespace

Int chi_cyl_by_count(const Partition& lambda, long long d, const Partition& mu,
                     int k, int n, int band_scale) {
  LoopFunction lam = LoopFunction::from_partition(lambda, k, n);
  LoopFunction muf = LoopFunction::from_partition(mu, k, n);
  if (!lam.in_alcove() || !muf.in_alcove())
    throw std::invalid_argument("chi_cyl_by_count: partitions must lie in the alcove");
  LoopFunction bound = lam.shift(d);
  long long lam1 = lambda.part(1);
  int band =
      static_cast<int>(2 + (lam1 + n * std::max<long long>(d, 0) + n - 1) / n);
  band *= band_scale;

  std::vector<int> perm(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  std::sort(perm.begin(), perm.end());
  std::set<std::vector<long long>> seen;
  do {
    std::vector<long long> win;
    by_count_rec(muf, bound, perm, band, 0, 0, win, seen);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<long>(seen.size());
}

namespace {

struct StepTarget {
  Partition loop;
  long long delta;
};

// Valid next loops for one chain step of the given strip cell count.
std::vector<StepTarget> step_targets(const Partition& cur, int theta,
                                     const std::vector<Partition>& alcove,
                                     int k, int n) {
  std::vector<StepTarget> out;
  LoopFunction curf = LoopFunction::from_partition(cur, k, n);
  for (const Partition& nu : alcove) {
    long long num = theta - (nu.size() - cur.size());
    if (num < 0 || num % n != 0) continue;
    long long delta = num / n;
    LoopFunction nuf = LoopFunction::from_partition(nu, k, n).shift(delta);
    if (cylindric_contains(curf, nuf)) out.push_back(StepTarget{nu, delta});
  }
  return out;
}

void cyl_chain_rec(const Partition& lambda, long long d, const IntTuple& theta,
                   const std::vector<Partition>& alcove, int k, int n,
                   std::size_t step, std::vector<Partition>& loops,
                   std::vector<long long>& offsets,
                   std::vector<CylChain>& out) {
  if (step == theta.size()) {
    if (loops.back() == lambda && offsets.back() == d) {
      CylChain c;
      c.k = k;
      c.n = n;
      c.loops = loops;
      c.offsets = offsets;
      c.weight = theta;
      out.push_back(std::move(c));
    }
    return;
  }
  for (const StepTarget& t :
       step_targets(loops.back(), theta[step], alcove, k, n)) {
    loops.push_back(t.loop);
    offsets.push_back(offsets.back() + t.delta);
    cyl_chain_rec(lambda, d, theta, alcove, k, n, step + 1, loops, offsets, out);
    offsets.pop_back();
    loops.pop_back();
  }
}

}  // namespace

std::vector<CylChain> enumerate_cyl_chains(const Partition& lambda, long long d,
                                           const Partition& mu,
                                           const IntTuple& theta, int k, int n) {
  std::vector<CylChain> out;
  long total = 0;
  for (int t : theta) {
    if (t < 0) return out;
    total += t;
  }
  if (total != n * d + lambda.size() - mu.size()) return out;
  std::vector<Partition> alcove = alcove_partitions(k, n);
  std::vector<Partition> loops{mu};
  std::vector<long long> offsets{0};
  cyl_chain_rec(lambda, d, theta, alcove, k, n, 0, loops, offsets, out);
  return out;
}

Int ChiCylCache::chi(const Partition& lambda, long long d, const Partition& mu) {
  auto key = std::make_tuple(lambda, d, mu);
  auto it = table_.find(key);
  if (it != table_.end()) return it->second;
  Int v = chi_cyl(lambda, d, mu, k_, n_);
  table_.emplace(std::move(key), v);
  return v;
}

namespace {

Int cyl_coeff_rec(const Partition& lambda, long long d, const IntTuple& theta,
                  const std::vector<Partition>& alcove, int k, int n,
                  std::size_t step, const Partition& cur, long long dcur,
                  ChiCylCache& cache) {
  if (step == theta.size())
    return (cur == lambda && dcur == d) ? Int(1) : Int(0);
  Int total = 0;
  for (const StepTarget& t : step_targets(cur, theta[step], alcove, k, n)) {
    Int w = cache.chi(t.loop, t.delta, cur);
    if (w == 0) continue;
    total += w * cyl_coeff_rec(lambda, d, theta, alcove, k, n, step + 1,
                               t.loop, dcur + t.delta, cache);
  }
  return total;
}

}  // namespace

Int cyl_h_coefficient(const Partition& lambda, long long d, const Partition& mu,
                      const Partition& nu, int k, int n, ChiCylCache* cache) {
  if (nu.size() != n * d + lambda.size() - mu.size()) return 0;
  if (nu.length() > k) return 0;
  ChiCylCache local(k, n);
  ChiCylCache& c = cache ? *cache : local;
  IntTuple theta(nu.parts().begin(), nu.parts().end());
  std::vector<Partition> alcove = alcove_partitions(k, n);
  return cyl_coeff_rec(lambda, d, theta, alcove, k, n, 0, mu, 0, c);
}

MExpansion cyl_h_expansion(const Partition& lambda, long long d,
                           const Partition& mu, int k, int n) {
  MExpansion r(k);
  long deg = n * d + lambda.size() - mu.size();
  if (deg < 0) return r;
  ChiCylCache cache(k, n);
  for (const Partition& nu : partitions_of(deg, k, static_cast<int>(deg)))
    r.add(nu, cyl_h_coefficient(lambda, d, mu, nu, k, n, &cache));
  return r;
}

}  // namespace cylfuse
