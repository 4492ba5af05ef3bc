#include "cylfuse/modular.hpp"

#include <cmath>
#include <stdexcept>

namespace cylfuse {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double to_double(const Int& v) { return v.convert_to<double>(); }

}  // namespace

Rat RationalPhase::reduce(Rat r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  Int q = num / den;
  if (r < 0 && q * den != num) q -= 1;
  return r - Rat(q);
}

std::complex<double> RationalPhase::value() const {
  double x = kTwoPi * r_.convert_to<double>();
  return {std::cos(x), std::sin(x)};
}

ComplexMatrix matrix_product(const ComplexMatrix& x, const ComplexMatrix& y) {
  std::size_t dim = x.dim();
  ComplexMatrix r{x.basis, {}};
  r.a.assign(dim, std::vector<std::complex<double>>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t l = 0; l < dim; ++l) {
      std::complex<double> v = x.a[i][l];
      if (v == 0.0) continue;
      for (std::size_t j = 0; j < dim; ++j) r.a[i][j] += v * y.a[l][j];
    }
  return r;
}

ComplexMatrix conjugate_transpose(const ComplexMatrix& x) {
  std::size_t dim = x.dim();
  ComplexMatrix r{x.basis, {}};
  r.a.assign(dim, std::vector<std::complex<double>>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) r.a[i][j] = std::conj(x.a[j][i]);
  return r;
}

ComplexMatrix identity_matrix(const std::vector<Partition>& basis) {
  std::size_t dim = basis.size();
  ComplexMatrix r{basis, {}};
  r.a.assign(dim, std::vector<std::complex<double>>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i) r.a[i][i] = 1.0;
  return r;
}

double max_deviation(const ComplexMatrix& x, const ComplexMatrix& y) {
  double dev = 0;
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j)
      dev = std::max(dev, std::abs(x.a[i][j] - y.a[i][j]));
  return dev;
}

std::complex<double> eval_m(const Partition& lambda, const IntTuple& alpha,
                            int k, int n) {
  if (static_cast<int>(alpha.size()) != k)
    throw std::invalid_argument("eval_m: alpha must have length k");
  std::complex<double> sum = 0;
  for (const IntTuple& a : distinct_rearrangements(lambda, k)) {
    long e = 0;
    for (int i = 0; i < k; ++i) e += static_cast<long>(a[i]) * alpha[i];
    sum += RationalPhase(Rat(e, n)).value();
  }
  return sum;
}

ComplexMatrix s_matrix(int k, int n) {
  std::vector<Partition> basis = alcove_partitions(k, n);
  std::size_t dim = basis.size();
  std::vector<double> stab(dim);
  for (std::size_t i = 0; i < dim; ++i)
    stab[i] = to_double(stabilizer_order(basis[i].padded(k)));
  double norm = std::pow(static_cast<double>(n), k / 2.0);
  ComplexMatrix s{basis, {}};
  s.a.assign(dim, std::vector<std::complex<double>>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      s.a[i][j] = std::sqrt(stab[i] / stab[j]) *
                  eval_m(basis[i], basis[j].padded(k), k, n) / norm;
  return s;
}

ComplexMatrix t_matrix(int k, int n) {
  std::vector<Partition> basis = alcove_partitions(k, n);
  ComplexMatrix t = identity_matrix(basis);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Rat e = -Rat(static_cast<long>(k) * (n - 1), 24);
    for (int p : basis[i].parts())
      e += Rat(static_cast<long>(p) * (n - p), 2L * n);
    t.a[i][i] = RationalPhase(e).value();
  }
  return t;
}

Partition dual_weight(const Partition& lambda, int k, int n) {
  IntTuple padded = lambda.padded(k);
  std::vector<long long> window(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    window[static_cast<std::size_t>(i)] = n - padded[static_cast<std::size_t>(k - 1 - i)];
  int shift = lambda.multiplicity(n);
  return LoopFunction(k, n, std::move(window)).shift(shift).alcove_partition();
}

ComplexMatrix c_matrix(int k, int n) {
  std::vector<Partition> basis = alcove_partitions(k, n);
  std::size_t dim = basis.size();
  ComplexMatrix c{basis, {}};
  c.a.assign(dim, std::vector<std::complex<double>>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i) {
    Partition dual = dual_weight(basis[i], k, n);
    for (std::size_t j = 0; j < dim; ++j)
      if (basis[j] == dual) c.a[i][j] = 1.0;
  }
  return c;
}

VerlindeResult verlinde_n(const Partition& lambda, const Partition& mu,
                          const Partition& nu, int k, int n) {
  ComplexMatrix s = s_matrix(k, n);
  const std::vector<Partition>& basis = s.basis;
  auto row_of = [&](const Partition& p) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == p) return i;
    throw std::invalid_argument("verlinde_n: partition outside alcove");
  };
  std::size_t rl = row_of(lambda), rm = row_of(mu), rn = row_of(nu);

  double norm = std::pow(static_cast<double>(n), k / 2.0);

  VerlindeResult res;
  std::complex<double> sum = 0;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    // S is symmetric and unitary, so the inverse-matrix entry
    // (S^{-1})_{nu,alpha} is conj(S_{nu,alpha}). The entrywise reciprocal
    // 1/S_{nu,alpha} fails already at k=1, where it overcounts by a
    // factor n. The empty row uses m_empty = 1 with |S_empty| = 1; taking
    // |S_empty| = k! instead misses the integer match by sqrt(k!).
    std::complex<double> sinv = std::conj(s.a[rn][j]);
    double stab_a = to_double(stabilizer_order(basis[j].padded(k)));
    std::complex<double> s_empty = std::sqrt(1.0 / stab_a) / norm;
    sum += s.a[rl][j] * s.a[rm][j] * sinv / s_empty;
  }
  double pref = std::sqrt(
      to_double(stabilizer_order(nu.padded(k))) /
      (to_double(stabilizer_order(lambda.padded(k))) *
       to_double(stabilizer_order(mu.padded(k)))));
  res.value = pref * sum;
  res.rounded = std::llround(res.value.real());
  double drift = std::abs(res.value - std::complex<double>(
                                          static_cast<double>(res.rounded), 0));
  if (drift > 1e-6) {
    res.issue = "value not within 1e-6 of an integer";
    return res;
  }
  res.ok = true;
  return res;
}

IdempotentReport idempotent_check(int k, int n, double tol) {
  std::vector<Partition> basis = alcove_partitions(k, n);
  std::size_t dim = basis.size();
  std::vector<double> stab(dim);
  for (std::size_t i = 0; i < dim; ++i)
    stab[i] = to_double(stabilizer_order(basis[i].padded(k)));
  double nk = std::pow(static_cast<double>(n), k);

  IdempotentReport rep;
  rep.tol = tol;
  for (std::size_t b = 0; b < dim; ++b) {
    IntTuple beta = basis[b].padded(k);
    std::complex<double> unity = 0;
    for (std::size_t a = 0; a < dim; ++a) {
      IntTuple alpha_neg = basis[a].padded(k);
      for (int& v : alpha_neg) v = -v;
      std::complex<double> e = 0;
      for (std::size_t l = 0; l < dim; ++l)
        e += stab[l] / stab[a] * eval_m(basis[l], alpha_neg, k, n) *
             eval_m(basis[l], beta, k, n);
      e /= nk;
      unity += e;
      double target = (a == b) ? 1.0 : 0.0;
      rep.max_dev_delta = std::max(rep.max_dev_delta, std::abs(e - target));
    }
    rep.max_dev_unity = std::max(rep.max_dev_unity, std::abs(unity - 1.0));
  }
  rep.pass = rep.max_dev_delta < tol && rep.max_dev_unity < tol;
  return rep;
}

ModularReport modular_relations_report(int k, int n, double tol) {
  ComplexMatrix s = s_matrix(k, n);
  ComplexMatrix t = t_matrix(k, n);
  ComplexMatrix c = c_matrix(k, n);
  ComplexMatrix id = identity_matrix(s.basis);
  ComplexMatrix sstar = conjugate_transpose(s);

  ComplexMatrix st = matrix_product(s, t);
  ComplexMatrix st3 = matrix_product(st, matrix_product(st, st));
  ComplexMatrix s2 = matrix_product(s, s);

  ModularReport rep;
  rep.tol = tol;
  auto push = [&](const std::string& name, double dev) {
    rep.relations.push_back(RelationDeviation{name, dev, dev < tol});
  };
  push("(ST)^3=C", max_deviation(st3, c));
  push("S^2=C", max_deviation(s2, c));
  push("C^2=Id", max_deviation(matrix_product(c, c), id));
  push("SS*=Id", max_deviation(matrix_product(s, sstar), id));
  push("S*=CS", max_deviation(sstar, matrix_product(c, s)));
  push("S*=SC", max_deviation(sstar, matrix_product(s, c)));
  push("CTC=T", max_deviation(matrix_product(c, matrix_product(t, c)), t));
  rep.pass = true;
  for (const auto& r : rep.relations) rep.pass = rep.pass && r.pass;
  return rep;
}

}  // namespace cylfuse
