#ifndef CYLFUSE_FUSION_HPP_
#define CYLFUSE_FUSION_HPP_

#include <map>
#include <vector>

#include "cylfuse/affine.hpp"
#include "cylfuse/symcore.hpp"

namespace cylfuse {

// A Laurent polynomial in z with exact integer coefficients.
class LaurentZ {
 public:
  LaurentZ() = default;

  static LaurentZ monomial(long long exponent, const Int& coeff) {
    LaurentZ p;
    p.add(exponent, coeff);
    return p;
  }

  const std::map<long long, Int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Int coeff(long long exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Int(0) : it->second;
  }

  void add(long long exponent, const Int& c) {
    if (c == 0) return;
    Int& slot = coeffs_[exponent];
    slot += c;
    if (slot == 0) coeffs_.erase(exponent);
  }

  // Multiplies by z^shift.
  LaurentZ shifted(long long shift) const {
    LaurentZ r;
    for (const auto& [e, c] : coeffs_) r.add(e + shift, c);
    return r;
  }

  Rat eval(const Rat& z0) const;  // z0 != 0 required for negative exponents

  friend LaurentZ operator+(const LaurentZ& a, const LaurentZ& b);
  friend LaurentZ operator*(const LaurentZ& a, const LaurentZ& b);
  friend bool operator==(const LaurentZ& a, const LaurentZ& b) = default;

 private:
  std::map<long long, Int> coeffs_;
};

// An element of the fusion algebra V_k(n): a LaurentZ-linear combination of
// the monomial basis {m_lambda}, lambda in A_{k,n}.
class FusionElement {
 public:
  FusionElement(int k, int n) : k_(k), n_(n) {}

  static FusionElement basis(const Partition& lambda, int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  const std::map<Partition, LaurentZ>& terms() const { return terms_; }

  LaurentZ coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? LaurentZ() : it->second;
  }

  void add(const Partition& lambda, const LaurentZ& c);

  friend FusionElement operator+(const FusionElement& a, const FusionElement& b);
  friend bool operator==(const FusionElement& a, const FusionElement& b) = default;

 private:
  int k_;
  int n_;
  std::map<Partition, LaurentZ> terms_;
};

// Fusion coefficient N_{mu,nu}^lambda: pairs of distinct rearrangements
// (a,b) of mu and nu with a+b = lambda o y^alpha, |alpha| = d. The alpha
// search runs over a bounded box; band_scale enlarges it for the
// bound-doubling check.
Int n_coefficient(const Partition& mu, const Partition& nu,
                  const Partition& lambda, int k, int n, int band_scale = 1);

// Same coefficient through the alcove representative of nu and multinomial
// multiplicity factors.
Int n_reduced(const Partition& mu, const Partition& nu,
              const Partition& lambda, int k, int n);

// Bilinear extension of m_lambda m_mu = sum z^d N m_nu.
FusionElement fusion_product(const FusionElement& a, const FusionElement& b);

// A Laurent polynomial divided by an exact integer denominator.
struct ScaledLaurent {
  LaurentZ numerator;
  Int denominator = 1;
};

// Frobenius trace: picks the m_{(n^k)} component, multiplies by z^k and
// divides by n^k.
ScaledLaurent epsilon(const FusionElement& a);

// [eps(m_lambda m_mu)] at z = z0, indexed by A_{k,n} in lexicographically
// decreasing order.
std::vector<std::vector<Rat>> gram_matrix(int k, int n, const Rat& z0);

Rat rational_determinant(std::vector<std::vector<Rat>> m);

// Verifies h_lambda m_mu = sum_nu z^d chi_{nu/d/mu}(lambda) m_nu by
// computing both sides independently.
bool h_action_check(const Partition& lambda, const Partition& mu, int k, int n);

}  // namespace cylfuse

#endif  // CYLFUSE_FUSION_HPP_
