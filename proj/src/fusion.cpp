#include "cylfuse/fusion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cylfuse/rppgen.hpp"

namespace cylfuse {

Rat LaurentZ::eval(const Rat& z0) const {
  Rat r = 0;
  for (const auto& [e, c] : coeffs_) {
    if (z0 == 0 && e < 0) throw std::domain_error("LaurentZ::eval at z=0");
    Rat p = 1;
    long long a = e < 0 ? -e : e;
    for (long long i = 0; i < a; ++i) p *= z0;
    if (e < 0) p = 1 / p;
    r += Rat(c) * p;
  }
  return r;
}

LaurentZ operator+(const LaurentZ& a, const LaurentZ& b) {
  LaurentZ r = a;
  for (const auto& [e, c] : b.coeffs_) r.add(e, c);
  return r;
}

LaurentZ operator*(const LaurentZ& a, const LaurentZ& b) {
  LaurentZ r;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) r.add(ea + eb, ca * cb);
  return r;
}

FusionElement FusionElement::basis(const Partition& lambda, int k, int n) {
  if (!LoopFunction::from_partition(lambda, k, n).in_alcove())
    throw std::invalid_argument("FusionElement: partition outside alcove");
  FusionElement e(k, n);
  e.add(lambda, LaurentZ::monomial(0, 1));
  return e;
}

void FusionElement::add(const Partition& lambda, const LaurentZ& c) {
  if (c.is_zero()) return;
  LaurentZ& slot = terms_[lambda];
  slot = slot + c;
  if (slot.is_zero()) terms_.erase(lambda);
}

FusionElement operator+(const FusionElement& a, const FusionElement& b) {
  if (a.k_ != b.k_ || a.n_ != b.n_)
    throw std::invalid_argument("FusionElement: mismatched (k,n)");
  FusionElement r = a;
  for (const auto& [mu, c] : b.terms_) r.add(mu, c);
  return r;
}

Int n_coefficient(const Partition& mu, const Partition& nu,
                  const Partition& lambda, int k, int n, int band_scale) {
  LoopFunction lam = LoopFunction::from_partition(lambda, k, n);
  if (!lam.in_alcove() ||
      !LoopFunction::from_partition(mu, k, n).in_alcove())
    throw std::invalid_argument("n_coefficient: mu, lambda must lie in the alcove");
  if (nu.length() > k) return 0;
  long long num = mu.size() + nu.size() - lambda.size();
  if (num < 0 || num % n != 0) return 0;
  long long d = num / n;

  long long band = 2 + (mu.part(1) + nu.part(1) + n) / n;
  band *= band_scale;

  // Probe the literal action of each y generator on lambda; its effect on
  // window entry i is an offset of +-n and every other entry is untouched.
  // The windows lambda o y^alpha then follow entrywise without composing
  // full generator words per alpha.
  std::vector<long long> ydelta(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    LoopFunction moved = lam.act(AffinePermutation::y_generator(i, k));
    for (int j = 1; j <= k; ++j) {
      long long diff = moved.window()[static_cast<std::size_t>(j - 1)] -
                       lam.window()[static_cast<std::size_t>(j - 1)];
      if (j == i) {
        if (diff != n && diff != -n)
          throw std::logic_error("n_coefficient: unexpected y action");
        ydelta[static_cast<std::size_t>(i - 1)] = diff;
      } else if (diff != 0) {
        throw std::logic_error("n_coefficient: y action not diagonal");
      }
    }
  }

  Int count = 0;
  for (const IntTuple& a : distinct_rearrangements(mu, k))
    for (const IntTuple& b : distinct_rearrangements(nu, k)) {
      bool ok = true;
      long long asum = 0;
      for (int i = 0; i < k && ok; ++i) {
        long long diff = static_cast<long long>(a[static_cast<std::size_t>(i)]) +
                         b[static_cast<std::size_t>(i)] -
                         lam.window()[static_cast<std::size_t>(i)];
        if (diff % n != 0) {
          ok = false;
          break;
        }
        long long alpha = diff / ydelta[static_cast<std::size_t>(i)];
        if (alpha < -band || alpha > band) ok = false;
        asum += alpha;
      }
      if (ok && asum == d) ++count;
    }
  return count;
}

Int n_reduced(const Partition& mu, const Partition& nu,
              const Partition& lambda, int k, int n) {
  if (nu.length() > k) return 0;
  long long num = mu.size() + nu.size() - lambda.size();
  if (num < 0 || num % n != 0) return 0;

  AlcoveReduction red = reduce_to_alcove(LoopFunction::from_partition(nu, k, n));
  const Partition& nucheck = red.alcove;

  IntTuple padded = nu.padded(k);
  int maxpart = 0;
  for (int v : padded) maxpart = std::max(maxpart, v);

  // Residue class n collects the parts 0, n, 2n, ...
  auto class_mults = [&](int residue) {
    std::vector<int> mults;
    for (int v = (residue == n ? 0 : residue); v <= maxpart; v += n) {
      int m = 0;
      for (int p : padded) m += (p == v);
      mults.push_back(m);
    }
    return mults;
  };

  Int factor = multinomial(nucheck.multiplicity(n), class_mults(n));
  for (int i = 1; i <= n - 1; ++i)
    factor *= multinomial(nucheck.multiplicity(i), class_mults(i));
  if (factor == 0) return 0;
  return n_coefficient(mu, nucheck, lambda, k, n) * factor;
}

FusionElement fusion_product(const FusionElement& a, const FusionElement& b) {
  if (a.k() != b.k() || a.n() != b.n())
    throw std::invalid_argument("fusion_product: mismatched (k,n)");
  int k = a.k();
  int n = a.n();
  FusionElement r(k, n);
  std::vector<Partition> alcove = alcove_partitions(k, n);
  for (const auto& [la, ca] : a.terms())
    for (const auto& [mu, cb] : b.terms()) {
      LaurentZ c = ca * cb;
      for (const Partition& nu : alcove) {
        long long num = la.size() + mu.size() - nu.size();
        if (num < 0 || num % n != 0) continue;
        Int N = n_coefficient(la, mu, nu, k, n);
        if (N == 0) continue;
        r.add(nu, (c * LaurentZ::monomial(num / n, N)));
      }
    }
  return r;
}

ScaledLaurent epsilon(const FusionElement& a) {
  int k = a.k();
  int n = a.n();
  Partition top(std::vector<int>(static_cast<std::size_t>(k), n));
  Int denom = 1;
  for (int i = 0; i < k; ++i) denom *= n;
  return ScaledLaurent{a.coeff(top).shifted(k), denom};
}

std::vector<std::vector<Rat>> gram_matrix(int k, int n, const Rat& z0) {
  if (z0 == 0) throw std::invalid_argument("gram_matrix: z0 must be nonzero");
  std::vector<Partition> basis = alcove_partitions(k, n);
  std::size_t dim = basis.size();
  std::vector<std::vector<Rat>> g(dim, std::vector<Rat>(dim, Rat(0)));
  for (std::size_t i = 0; i < dim; ++i) {
    FusionElement mi = FusionElement::basis(basis[i], k, n);
    for (std::size_t j = i; j < dim; ++j) {
      ScaledLaurent e =
          epsilon(fusion_product(mi, FusionElement::basis(basis[j], k, n)));
      Rat v = e.numerator.eval(z0) / Rat(e.denominator);
      g[i][j] = v;
      g[j][i] = v;
    }
  }
  return g;
}

Rat rational_determinant(std::vector<std::vector<Rat>> m) {
  std::size_t dim = m.size();
  Rat det = 1;
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    while (pivot < dim && m[pivot][col] == 0) ++pivot;
    if (pivot == dim) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < dim; ++row) {
      if (m[row][col] == 0) continue;
      Rat f = m[row][col] / m[col][col];
      for (std::size_t j = col; j < dim; ++j) m[row][j] -= f * m[col][j];
    }
  }
  return det;
}

bool h_action_check(const Partition& lambda, const Partition& mu, int k, int n) {
  MExpansion hm = h_expansion(lambda, k);
  for (const Partition& nu : alcove_partitions(k, n)) {
    long long num = lambda.size() + mu.size() - nu.size();
    Int lhs = 0;
    for (const auto& [sigma, c] : hm.coeffs())
      lhs += c * n_reduced(mu, sigma, nu, k, n);
    Int rhs = 0;
    if (num >= 0 && num % n == 0)
      rhs = cyl_h_coefficient(nu, num / n, mu, lambda, k, n);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace cylfuse
