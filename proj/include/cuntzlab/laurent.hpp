#pragma once

#include <complex>
#include <map>

#include "cuntzlab/tolerances.hpp"

namespace cuntzlab {

using cplx = std::complex<double>;

/// Finite complex Laurent series on the torus, stored as a sparse map from
/// the Fourier index n to the coefficient of e_n(z) = z^n.  Coefficients with
/// modulus below the prune tolerance are dropped after every operation, so
/// the support is always finite and min/max indices are O(1).
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly basis(long n, cplx c = 1.0);  // c * e_n
  static LaurentPoly one() { return basis(0); }

  bool is_zero() const { return coeffs_.empty(); }
  long min_index() const;  // throws DomainError when zero
  long max_index() const;
  long span() const { return is_zero() ? 0 : max_index() - min_index(); }
  std::size_t term_count() const { return coeffs_.size(); }

  cplx coeff(long n) const;
  void set_coeff(long n, cplx c);
  const std::map<long, cplx>& coeffs() const { return coeffs_; }

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(cplx s);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, cplx s) { return a *= s; }
  friend LaurentPoly operator*(cplx s, LaurentPoly a) { return a *= s; }

  /// Convolution product (pointwise product of functions on the torus).
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  /// g~ with g~(z) = conj(g(z)) on |z| = 1, i.e. coefficient n -> conj(c_{-n}).
  LaurentPoly conj_reflect() const;

  cplx eval(cplx z) const;

  void prune(double eps = tol::kPrune);

 private:
  std::map<long, cplx> coeffs_;
};

/// <f|g> = sum conj(f_n) g_n, conjugate-linear in the first argument.
cplx inner_product(const LaurentPoly& f, const LaurentPoly& g);
double norm(const LaurentPoly& f);

/// f(z) -> f(z^N).
LaurentPoly compose_power(const LaurentPoly& f, int N);

/// T_j^* f: e_n -> e_{(n-j)/N} when N | (n-j), else 0.
LaurentPoly downsample(const LaurentPoly& f, int j, int N);

/// Sup of |f| over the torus, estimated on a dense equispaced grid of
/// max(4096, 64*(span+1)) points.  The returned value is the grid maximum,
/// which never exceeds the coefficient-sum upper bound sum |f_n|.
double sup_norm(const LaurentPoly& f);

/// Sup of |d/dx f(e^{-i 2 pi x})|; the derivative series has coefficients
/// -i 2 pi n f_n, so derivative_sup_norm(e_n) = 2 pi |n| exactly.
double derivative_sup_norm(const LaurentPoly& f);

double coefficient_abs_sum(const LaurentPoly& f);

}  // namespace cuntzlab
