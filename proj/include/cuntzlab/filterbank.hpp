#pragma once

#include <vector>

#include "cuntzlab/laurent.hpp"

namespace cuntzlab {

/// Subband filter system m_0, ..., m_{N-1} on the torus.
struct FilterBank {
  int N = 2;
  std::vector<LaurentPoly> filters;

  FilterBank() = default;
  FilterBank(int scale, std::vector<LaurentPoly> m);

  static FilterBank haar();            // m_0 = (1+z)/sqrt2, m_1 = (1-z)/sqrt2
  static FilterBank stretched_haar();  // m_0 = (1+z^3)/sqrt2, m_1 = (1-z^3)/sqrt2
  static FilterBank identity(int N);   // m_j = z^j
  /// N-point DFT bank m_j = N^{-1/2} sum_k rho^{jk} z^k; constant polyphase
  /// matrix equal to the Fourier matrix, low-pass for every N.
  static FilterBank fourier(int N);
};

/// N x N matrix of Laurent polynomials A_{i,j}(z) collecting the N-decimated
/// components of each filter.
struct PolyphaseMatrix {
  int N = 2;
  std::vector<std::vector<LaurentPoly>> entries;

  PolyphaseMatrix() = default;
  explicit PolyphaseMatrix(int scale);
  const LaurentPoly& at(int i, int j) const { return entries[i][j]; }
  LaurentPoly& at(int i, int j) { return entries[i][j]; }
};

/// A_{i,j}(z) = (1/N) sum_{w^N=z} m_i(w) w^{-j}; coefficient of e_m in
/// A_{i,j} equals the coefficient of e_{Nm+j} in m_i, exactly.
PolyphaseMatrix polyphase(const FilterBank& bank);

/// m_j(z) = sum_k A_{j,k}(z^N) z^k; exact inverse of polyphase().
FilterBank synthesize_filters(const PolyphaseMatrix& A);

struct UnitaryReport {
  bool pass = false;
  double max_residual = 0.0;
};

/// A(z) A(z)^* = I as an exact Laurent-matrix identity: residual is the
/// largest coefficient deviation of sum_j A_{ij} conj~(A_{kj}) from
/// delta_{ik} e_0.
UnitaryReport check_unitary(const PolyphaseMatrix& A, double tolerance = 1e-10);

struct LowpassReport {
  bool pass = false;
  double max_residual = 0.0;
  double matrix_residual = 0.0;  // |A_{jk}(1) - N^{-1/2} rho^{jk}|
  double filter_residual = 0.0;  // |m_j(rho^k) - delta_{jk} sqrt(N)|
};

/// The subband ordering condition: A(1) is the Hadamard/Fourier matrix,
/// equivalently m_j(rho^k) = delta_{jk} sqrt(N) with rho = e^{i 2 pi / N}.
LowpassReport check_lowpass(const PolyphaseMatrix& A, double tolerance = 1e-10);
LowpassReport check_lowpass(const FilterBank& bank, double tolerance = 1e-10);

/// M_1 = N^{-1/2} max_j ||m_j'|| with the derivative taken in x for
/// z = e^{-i 2 pi x}.
double lipschitz_M1(const FilterBank& bank);

}  // namespace cuntzlab
