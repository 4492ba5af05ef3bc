#include "cylfuse/symcore.hpp"

#include <algorithm>
#include <functional>

namespace cylfuse {

Int binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  Int r = 1;
  for (long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int multinomial(int total, const std::vector<int>& parts) {
  int sum = 0;
  for (int p : parts) {
    if (p < 0) return 0;
    sum += p;
  }
  if (sum != total) return 0;
  Int r = factorial(total);
  for (int p : parts) r /= factorial(p);
  return r;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols;
  if (!lambda.empty()) {
    cols.resize(static_cast<std::size_t>(lambda.parts()[0]), 0);
    for (int p : lambda.parts())
      for (int j = 0; j < p; ++j) ++cols[j];
  }
  return Partition(std::move(cols));
}

Int stabilizer_order(const IntTuple& mu) {
  std::map<int, int> mult;
  for (int v : mu) ++mult[v];
  Int r = 1;
  for (const auto& [v, m] : mult) r *= factorial(m);
  return r;
}

std::vector<IntTuple> distinct_rearrangements(const Partition& mu, int k) {
  IntTuple t = mu.padded(k);  // throws if mu has > k parts
  std::vector<IntTuple> out;
  do {
    out.push_back(t);
  } while (std::prev_permutation(t.begin(), t.end()));
  return out;
}

Int chi_skew(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) return 0;
  Partition lc = conjugate(lambda);
  Partition mc = conjugate(mu);
  int top = std::max(lc.length(), mc.length());
  Int r = 1;
  for (int i = 1; i <= top; ++i)
    r *= binomial(lc.part(i) - mc.part(i + 1), mc.part(i) - mc.part(i + 1));
  return r;
}

Int chi_skew_by_count(const Partition& lambda, const Partition& mu, int k) {
  IntTuple bound = lambda.padded(k);
  Int count = 0;
  for (const IntTuple& a : distinct_rearrangements(mu, k)) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) ok = a[i] <= bound[i];
    if (ok) ++count;
  }
  return count;
}

Int f_coefficient(const Partition& lambda, const Partition& mu,
                  const Partition& nu, int k) {
  IntTuple target = nu.padded(k);
  Int count = 0;
  for (const IntTuple& a : distinct_rearrangements(lambda, k))
    for (const IntTuple& b : distinct_rearrangements(mu, k)) {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) ok = a[i] + b[i] == target[i];
      if (ok) ++count;
    }
  return count;
}

namespace {

// Distributes `rem` over columns j..end with per-column caps, recursing into
// the next row when this one is exhausted.
Int l_matrix_rows(const std::vector<int>& rows, std::size_t row,
                  std::vector<int>& colrem, std::size_t col, int rem) {
  if (rem == 0 && col <= colrem.size()) {
    if (row + 1 == rows.size()) {
      for (int c : colrem)
        if (c != 0) return 0;
      return 1;
    }
    return l_matrix_rows(rows, row + 1, colrem, 0, rows[row + 1]);
  }
  if (col >= colrem.size()) return 0;
  Int total = 0;
  int cap = std::min(rem, colrem[col]);
  for (int put = 0; put <= cap; ++put) {
    colrem[col] -= put;
    total += l_matrix_rows(rows, row, colrem, col + 1, rem - put);
    colrem[col] += put;
  }
  return total;
}

}  // namespace

Int l_matrix_count(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return 0;
  if (lambda.empty()) return 1;
  if (mu.empty()) return 0;
  std::vector<int> rows = lambda.parts();
  std::vector<int> colrem = mu.parts();
  return l_matrix_rows(rows, 0, colrem, 0, rows[0]);
}

Int chi_of_weight(const Partition& nu, const Partition& mu,
                  const Partition& lambda) {
  if (nu.size() != mu.size() + lambda.size()) return 0;
  if (nu.empty()) return 1;
  int k = nu.length();
  if (mu.length() > k) return 0;
  Int total = 0;
  for (const Partition& alpha :
       partitions_of(lambda.size(), k, static_cast<int>(lambda.size()))) {
    Int l = l_matrix_count(lambda, alpha);
    if (l != 0) total += l * f_coefficient(alpha, mu, nu, k);
  }
  return total;
}

namespace {

void partitions_rec(long m, int max_parts, int max_part,
                    std::vector<int>& acc, std::vector<Partition>& out) {
  if (m == 0) {
    out.emplace_back(acc);
    return;
  }
  if (max_parts == 0) return;
  int hi = static_cast<int>(std::min<long>(max_part, m));
  for (int p = hi; p >= 1; --p) {
    acc.push_back(p);
    partitions_rec(m - p, max_parts - 1, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(long m, int max_parts, int max_part) {
  std::vector<Partition> out;
  if (m < 0) return out;
  std::vector<int> acc;
  partitions_rec(m, max_parts, max_part, acc, out);
  return out;
}

std::vector<Partition> partitions_in_box(int max_parts, int max_part) {
  std::vector<Partition> out;
  for (long m = 0; m <= static_cast<long>(max_parts) * max_part; ++m) {
    auto layer = partitions_of(m, max_parts, max_part);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

void MExpansion::add(const Partition& mu, const Int& c) {
  if (mu.length() > k_ || c == 0) return;
  Int& slot = coeffs_[mu];
  slot += c;
  if (slot == 0) coeffs_.erase(mu);
}

MExpansion operator+(const MExpansion& a, const MExpansion& b) {
  MExpansion r = a;
  for (const auto& [mu, c] : b.coeffs_) r.add(mu, c);
  return r;
}

MExpansion operator*(const MExpansion& a, const MExpansion& b) {
  if (a.k_ != b.k_) throw std::invalid_argument("MExpansion: mismatched k");
  // The m-basis coefficient of nu is the number of monomial pairs whose
  // exponent sum is the sorted tuple nu itself.
  MExpansion r(a.k_);
  for (const auto& [la, ca] : a.coeffs_) {
    auto orbit_a = distinct_rearrangements(la, a.k_);
    for (const auto& [mu, cb] : b.coeffs_) {
      auto orbit_b = distinct_rearrangements(mu, a.k_);
      Int c = ca * cb;
      for (const IntTuple& x : orbit_a)
        for (const IntTuple& y : orbit_b) {
          IntTuple z(x.size());
          bool sorted = true;
          for (std::size_t i = 0; i < x.size(); ++i) {
            z[i] = x[i] + y[i];
            if (i > 0 && z[i - 1] < z[i]) sorted = false;
          }
          if (sorted) r.add(Partition(std::move(z)), c);
        }
    }
  }
  return r;
}

MExpansion h_expansion(const Partition& lambda, int k) {
  MExpansion r(k);
  for (const Partition& mu :
       partitions_of(lambda.size(), k, static_cast<int>(lambda.size())))
    r.add(mu, l_matrix_count(lambda, mu));
  return r;
}

}  // namespace cylfuse
