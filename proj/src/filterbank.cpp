#include "cuntzlab/filterbank.hpp"

#include <cmath>

#include "cuntzlab/errors.hpp"

namespace cuntzlab {

namespace {
constexpr double kPi = 3.14159265358979323846;

cplx root_of_unity(int N, long k) {
  double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(N);
  return {std::cos(theta), std::sin(theta)};
}
}  // namespace

FilterBank::FilterBank(int scale, std::vector<LaurentPoly> m)
    : N(scale), filters(std::move(m)) {
  if (N < 2) throw DomainError("filter bank scale must be >= 2");
  if (static_cast<int>(filters.size()) != N)
    throw DomainError("filter bank must contain exactly N filters");
}

FilterBank FilterBank::haar() {
  double s = 1.0 / std::sqrt(2.0);
  LaurentPoly m0 = LaurentPoly::basis(0, s) + LaurentPoly::basis(1, s);
  LaurentPoly m1 = LaurentPoly::basis(0, s) + LaurentPoly::basis(1, -s);
  return FilterBank(2, {m0, m1});
}

FilterBank FilterBank::stretched_haar() {
  double s = 1.0 / std::sqrt(2.0);
  LaurentPoly m0 = LaurentPoly::basis(0, s) + LaurentPoly::basis(3, s);
  LaurentPoly m1 = LaurentPoly::basis(0, s) + LaurentPoly::basis(3, -s);
  return FilterBank(2, {m0, m1});
}

FilterBank FilterBank::identity(int N) {
  std::vector<LaurentPoly> m;
  for (int j = 0; j < N; ++j) m.push_back(LaurentPoly::basis(j));
  return FilterBank(N, std::move(m));
}

FilterBank FilterBank::fourier(int N) {
  double s = 1.0 / std::sqrt(static_cast<double>(N));
  std::vector<LaurentPoly> m;
  for (int j = 0; j < N; ++j) {
    LaurentPoly mj;
    for (int k = 0; k < N; ++k) mj.set_coeff(k, s * root_of_unity(N, static_cast<long>(j) * k));
    m.push_back(mj);
  }
  return FilterBank(N, std::move(m));
}

PolyphaseMatrix::PolyphaseMatrix(int scale) : N(scale) {
  if (N < 2) throw DomainError("polyphase scale must be >= 2");
  entries.assign(N, std::vector<LaurentPoly>(N));
}

PolyphaseMatrix polyphase(const FilterBank& bank) {
  PolyphaseMatrix A(bank.N);
  for (int i = 0; i < bank.N; ++i) {
    for (const auto& [n, c] : bank.filters[i].coeffs()) {
      long j = n % bank.N;
      if (j < 0) j += bank.N;
      long m = (n - j) / bank.N;
      A.at(i, static_cast<int>(j)).set_coeff(m, c);
    }
  }
  return A;
}

FilterBank synthesize_filters(const PolyphaseMatrix& A) {
  std::vector<LaurentPoly> m(A.N);
  for (int j = 0; j < A.N; ++j) {
    for (int k = 0; k < A.N; ++k) {
      for (const auto& [n, c] : A.at(j, k).coeffs())
        m[j].set_coeff(static_cast<long>(A.N) * n + k, c);
    }
  }
  return FilterBank(A.N, std::move(m));
}

UnitaryReport check_unitary(const PolyphaseMatrix& A, double tolerance) {
  UnitaryReport rep;
  for (int i = 0; i < A.N; ++i) {
    for (int k = 0; k < A.N; ++k) {
      LaurentPoly acc;
      for (int j = 0; j < A.N; ++j) acc += A.at(i, j) * A.at(k, j).conj_reflect();
      if (i == k) acc -= LaurentPoly::one();
      for (const auto& [n, c] : acc.coeffs())
        rep.max_residual = std::max(rep.max_residual, std::abs(c));
    }
  }
  rep.pass = rep.max_residual <= tolerance;
  return rep;
}

LowpassReport check_lowpass(const PolyphaseMatrix& A, double tolerance) {
  LowpassReport rep;
  double root_n = std::sqrt(static_cast<double>(A.N));
  for (int j = 0; j < A.N; ++j)
    for (int k = 0; k < A.N; ++k) {
      cplx expected = root_of_unity(A.N, static_cast<long>(j) * k) / root_n;
      rep.matrix_residual =
          std::max(rep.matrix_residual, std::abs(A.at(j, k).eval(1.0) - expected));
    }
  FilterBank bank = synthesize_filters(A);
  for (int j = 0; j < A.N; ++j)
    for (int k = 0; k < A.N; ++k) {
      cplx expected = (j == k) ? cplx{root_n} : cplx{0.0};
      rep.filter_residual = std::max(
          rep.filter_residual,
          std::abs(bank.filters[j].eval(root_of_unity(A.N, k)) - expected));
    }
  rep.max_residual = std::max(rep.matrix_residual, rep.filter_residual);
  rep.pass = rep.max_residual <= tolerance;
  return rep;
}

LowpassReport check_lowpass(const FilterBank& bank, double tolerance) {
  return check_lowpass(polyphase(bank), tolerance);
}

double lipschitz_M1(const FilterBank& bank) {
  double worst = 0.0;
  for (const LaurentPoly& m : bank.filters)
    worst = std::max(worst, derivative_sup_norm(m));
  return worst / std::sqrt(static_cast<double>(bank.N));
}

}  // namespace cuntzlab
