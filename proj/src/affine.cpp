#include "cylfuse/affine.hpp"

#include <algorithm>
#include <stdexcept>

namespace cylfuse {

namespace {

// Decomposes m-1 = q*k + r with 0 <= r < k.
inline void split_index(long long m, int k, long long& q, long long& r) {
  r = (m - 1) % k;
  if (r < 0) r += k;
  q = (m - 1 - r) / k;
}

}  // namespace

AffinePermutation::AffinePermutation(int k, std::vector<long long> window)
    : k_(k), window_(std::move(window)) {
  if (k_ < 1 || static_cast<int>(window_.size()) != k_)
    throw std::invalid_argument("AffinePermutation: bad window length");
  std::vector<bool> seen(static_cast<std::size_t>(k_), false);
  for (long long v : window_) {
    long long r = v % k_;
    if (r < 0) r += k_;
    if (seen[static_cast<std::size_t>(r)])
      throw std::invalid_argument("AffinePermutation: window residues collide");
    seen[static_cast<std::size_t>(r)] = true;
  }
}

long long AffinePermutation::operator()(long long m) const {
  long long q, r;
  split_index(m, k_, q, r);
  return window_[static_cast<std::size_t>(r)] + q * k_;
}

AffinePermutation AffinePermutation::identity(int k) {
  std::vector<long long> w(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return AffinePermutation(k, std::move(w));
}

AffinePermutation AffinePermutation::sigma(int i, int k) {
  if (i < 0 || i >= k) throw std::invalid_argument("sigma: index out of range");
  std::vector<long long> w(static_cast<std::size_t>(k));
  for (int m = 1; m <= k; ++m) {
    long long v = m;
    if ((m - i) % k == 0)
      v = m + 1;
    else if ((m - i - 1) % k == 0)
      v = m - 1;
    w[static_cast<std::size_t>(m - 1)] = v;
  }
  return AffinePermutation(k, std::move(w));
}

AffinePermutation AffinePermutation::tau(int k) {
  std::vector<long long> w(static_cast<std::size_t>(k));
  for (int m = 1; m <= k; ++m) w[static_cast<std::size_t>(m - 1)] = m - 1;
  return AffinePermutation(k, std::move(w));
}

AffinePermutation AffinePermutation::y_generator(int i, int k) {
  if (i < 1 || i > k) throw std::invalid_argument("y_generator: index out of range");
  AffinePermutation y = tau(k);
  for (int j = 1; j <= k - 1; ++j) y = compose(y, sigma(j, k));
  for (int j = k - 1; j >= i; --j) y = compose(sigma(j, k), compose(y, sigma(j, k)));
  return y;
}

AffinePermutation AffinePermutation::y_power(const std::vector<int>& alpha) {
  int k = static_cast<int>(alpha.size());
  AffinePermutation r = identity(k);
  for (int i = 1; i <= k; ++i) {
    if (alpha[static_cast<std::size_t>(i - 1)] == 0) continue;
    AffinePermutation y = y_generator(i, k);
    int e = alpha[static_cast<std::size_t>(i - 1)];
    if (e < 0) {
      y = y.inverse();
      e = -e;
    }
    for (int j = 0; j < e; ++j) r = compose(r, y);
  }
  return r;
}

AffinePermutation AffinePermutation::inverse() const {
  std::vector<long long> inv(static_cast<std::size_t>(k_));
  for (int j = 1; j <= k_; ++j) {
    for (int i = 1; i <= k_; ++i) {
      long long v = window_[static_cast<std::size_t>(i - 1)];
      if (((j - v) % k_ + k_) % k_ == 0) {
        inv[static_cast<std::size_t>(j - 1)] = i + (j - v) / k_ * k_;
        break;
      }
    }
  }
  return AffinePermutation(k_, std::move(inv));
}

long long AffinePermutation::window_sum() const {
  long long s = 0;
  for (long long v : window_) s += v;
  return s;
}

bool AffinePermutation::is_extended_affine() const {
  // Residue bijectivity is enforced by the constructor; the sum condition
  // mod k follows from it, so only sanity-check it here.
  long long base = static_cast<long long>(k_) * (k_ + 1) / 2;
  return ((window_sum() - base) % k_) == 0;
}

bool AffinePermutation::is_affine() const {
  return window_sum() == static_cast<long long>(k_) * (k_ + 1) / 2;
}

AffinePermutation compose(const AffinePermutation& u, const AffinePermutation& v) {
  if (u.k() != v.k()) throw std::invalid_argument("compose: mismatched k");
  std::vector<long long> w(v.window().size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = u(v.window()[i]);
  return AffinePermutation(u.k(), std::move(w));
}

LoopFunction LoopFunction::from_partition(const Partition& lambda, int k, int n) {
  IntTuple t = lambda.padded(k);
  return LoopFunction(k, n, std::vector<long long>(t.begin(), t.end()));
}

long long LoopFunction::operator()(long long m) const {
  long long q, r;
  split_index(m, k_, q, r);
  return window_[static_cast<std::size_t>(r)] - q * n_;
}

bool LoopFunction::in_alcove() const {
  if (window_.front() > n_ || window_.back() < 1) return false;
  for (std::size_t i = 0; i + 1 < window_.size(); ++i)
    if (window_[i] < window_[i + 1]) return false;
  return true;
}

Partition LoopFunction::alcove_partition() const {
  if (!in_alcove()) throw std::logic_error("loop window not in alcove");
  return Partition(std::vector<int>(window_.begin(), window_.end()));
}

LoopFunction LoopFunction::shift(long long d) const {
  std::vector<long long> w(window_.size());
  for (int i = 1; i <= k_; ++i)
    w[static_cast<std::size_t>(i - 1)] = (*this)(i - d);
  return LoopFunction(k_, n_, std::move(w));
}

LoopFunction LoopFunction::act(const AffinePermutation& w) const {
  if (w.k() != k_) throw std::invalid_argument("act: mismatched k");
  std::vector<long long> out(window_.size());
  for (int i = 1; i <= k_; ++i)
    out[static_cast<std::size_t>(i - 1)] = (*this)(w(i));
  return LoopFunction(k_, n_, std::move(out));
}

LoopFunction LoopFunction::conjugate_loop() const {
  long long maxw = *std::max_element(window_.begin(), window_.end());
  long long minw = *std::min_element(window_.begin(), window_.end());
  std::vector<long long> conj(static_cast<std::size_t>(n_));
  for (int j = 1; j <= n_; ++j) {
    // #{i >= 1 : f(i) >= j}: fails for all i once f has dropped below j.
    long long qmax = std::max<long long>(0, (maxw - j) / n_ + 2);
    long long pos = 0;
    for (long long i = 1; i <= k_ * qmax; ++i)
      if ((*this)(i) >= j) ++pos;
    // #{i <= 0 : f(i) < j}: fails once f has climbed to j or above.
    long long qmin = std::max<long long>(0, (j - minw) / n_ + 2);
    long long neg = 0;
    for (long long i = 0; i > -k_ * qmin; --i)
      if ((*this)(i) < j) ++neg;
    conj[static_cast<std::size_t>(j - 1)] = pos - neg;
  }
  return LoopFunction(n_, k_, std::move(conj));
}

AlcoveReduction reduce_to_alcove(const LoopFunction& f) {
  int k = f.k();
  int n = f.n();
  LoopFunction c = f;
  AffinePermutation acc = AffinePermutation::identity(k);

  // Translate each window entry into (0,n]. The direction in which y_i
  // moves entry i under the action is probed, not assumed.
  for (int i = 1; i <= k; ++i) {
    long long v = c.window()[static_cast<std::size_t>(i - 1)];
    long long t = 0;  // unique shift with 0 < v + n*t <= n
    while (v + n * t > n) --t;
    while (v + n * t <= 0) ++t;
    if (t == 0) continue;
    AffinePermutation y = AffinePermutation::y_generator(i, k);
    long long delta =
        c.act(y).window()[static_cast<std::size_t>(i - 1)] - v;  // +-n
    std::vector<int> alpha(static_cast<std::size_t>(k), 0);
    alpha[static_cast<std::size_t>(i - 1)] = static_cast<int>(n * t / delta);
    AffinePermutation step = AffinePermutation::y_power(alpha);
    c = c.act(step);
    acc = compose(acc, step);
  }

  // Sort the window descending with adjacent transpositions.
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 1; j <= k - 1; ++j) {
      if (c.window()[static_cast<std::size_t>(j - 1)] <
          c.window()[static_cast<std::size_t>(j)]) {
        AffinePermutation s = AffinePermutation::sigma(j, k);
        c = c.act(s);
        acc = compose(acc, s);
        moved = true;
      }
    }
  }

  return AlcoveReduction{c.alcove_partition(), acc};
}

bool cylindric_contains(const LoopFunction& mu, const LoopFunction& lambda_d) {
  if (mu.k() != lambda_d.k() || mu.n() != lambda_d.n())
    throw std::invalid_argument("cylindric_contains: mismatched (k,n)");
  for (int i = 1; i <= mu.k(); ++i)
    if (mu(i) > lambda_d(i)) return false;
  return true;
}

std::vector<Cell> shape_cells(const CylindricShape& shape) {
  LoopFunction top =
      LoopFunction::from_partition(shape.lambda, shape.k, shape.n).shift(shape.d);
  LoopFunction bot = LoopFunction::from_partition(shape.mu, shape.k, shape.n);
  if (!cylindric_contains(bot, top))
    throw std::invalid_argument("shape_cells: mu[0] not below lambda[d]");
  std::vector<Cell> cells;
  for (int i = 1; i <= shape.k; ++i)
    for (long long j = bot(i) + 1; j <= top(i); ++j)
      cells.push_back(Cell{i, j});
  return cells;
}

namespace {

void alcove_rec(int k, int n, int maxp, std::vector<int>& acc,
                std::vector<Partition>& out) {
  if (static_cast<int>(acc.size()) == k) {
    out.emplace_back(acc);
    return;
  }
  for (int p = maxp; p >= 1; --p) {
    acc.push_back(p);
    alcove_rec(k, n, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> alcove_partitions(int k, int n) {
  std::vector<Partition> out;
  std::vector<int> acc;
  alcove_rec(k, n, n, acc, out);
  return out;
}

}  // namespace cylfuse
