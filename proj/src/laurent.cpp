#include "cuntzlab/laurent.hpp"

#include <algorithm>
#include <cmath>

#include "cuntzlab/errors.hpp"

namespace cuntzlab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

LaurentPoly LaurentPoly::basis(long n, cplx c) {
  LaurentPoly p;
  p.set_coeff(n, c);
  return p;
}

long LaurentPoly::min_index() const {
  if (coeffs_.empty()) throw DomainError("min_index of the zero polynomial");
  return coeffs_.begin()->first;
}

long LaurentPoly::max_index() const {
  if (coeffs_.empty()) throw DomainError("max_index of the zero polynomial");
  return coeffs_.rbegin()->first;
}

cplx LaurentPoly::coeff(long n) const {
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? cplx{0.0} : it->second;
}

void LaurentPoly::set_coeff(long n, cplx c) {
  if (std::abs(c) <= tol::kPrune) {
    coeffs_.erase(n);
  } else {
    coeffs_[n] = c;
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [n, c] : rhs.coeffs_) coeffs_[n] += c;
  prune();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [n, c] : rhs.coeffs_) coeffs_[n] -= c;
  prune();
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(cplx s) {
  for (auto& [n, c] : coeffs_) c *= s;
  prune();
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [n, cn] : a.coeffs_)
    for (const auto& [m, cm] : b.coeffs_) out.coeffs_[n + m] += cn * cm;
  out.prune();
  return out;
}

LaurentPoly LaurentPoly::conj_reflect() const {
  LaurentPoly out;
  for (const auto& [n, c] : coeffs_) out.coeffs_[-n] = std::conj(c);
  return out;
}

cplx LaurentPoly::eval(cplx z) const {
  cplx acc = 0.0;
  for (const auto& [n, c] : coeffs_) acc += c * std::pow(z, static_cast<double>(n));
  return acc;
}

void LaurentPoly::prune(double eps) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (std::abs(it->second) <= eps) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
}

cplx inner_product(const LaurentPoly& f, const LaurentPoly& g) {
  // Iterate over the sparser operand.
  const LaurentPoly& small = f.term_count() <= g.term_count() ? f : g;
  const LaurentPoly& big = f.term_count() <= g.term_count() ? g : f;
  cplx acc = 0.0;
  for (const auto& [n, c] : small.coeffs()) {
    cplx other = big.coeff(n);
    if (&small == &f) {
      acc += std::conj(c) * other;
    } else {
      acc += std::conj(other) * c;
    }
  }
  return acc;
}

double norm(const LaurentPoly& f) {
  double acc = 0.0;
  for (const auto& [n, c] : f.coeffs()) acc += std::norm(c);
  return std::sqrt(acc);
}

LaurentPoly compose_power(const LaurentPoly& f, int N) {
  if (N < 2) throw DomainError("compose_power requires N >= 2");
  LaurentPoly out;
  for (const auto& [n, c] : f.coeffs()) out.set_coeff(static_cast<long>(N) * n, c);
  return out;
}

LaurentPoly downsample(const LaurentPoly& f, int j, int N) {
  if (N < 2) throw DomainError("downsample requires N >= 2");
  if (j < 0 || j >= N) throw DomainError("downsample residue out of range");
  LaurentPoly out;
  for (const auto& [n, c] : f.coeffs()) {
    long d = n - j;
    long q = d / N;
    if (q * N == d) out.set_coeff(q, c);
  }
  return out;
}

double coefficient_abs_sum(const LaurentPoly& f) {
  double acc = 0.0;
  for (const auto& [n, c] : f.coeffs()) acc += std::abs(c);
  return acc;
}

namespace {

double grid_sup(const LaurentPoly& f) {
  if (f.is_zero()) return 0.0;
  long pts = std::max<long>(4096, 64 * (f.span() + 1));
  double best = 0.0;
  for (long k = 0; k < pts; ++k) {
    double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(pts);
    cplx z{std::cos(theta), std::sin(theta)};
    best = std::max(best, std::abs(f.eval(z)));
  }
  return best;
}

}  // namespace

double sup_norm(const LaurentPoly& f) { return grid_sup(f); }

double derivative_sup_norm(const LaurentPoly& f) {
  LaurentPoly d;
  for (const auto& [n, c] : f.coeffs())
    d.set_coeff(n, c * cplx{0.0, -2.0 * kPi * static_cast<double>(n)});
  return grid_sup(d);
}

}  // namespace cuntzlab
