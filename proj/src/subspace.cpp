#include "cuntzlab/subspace.hpp"

#include <cmath>

#include "cuntzlab/errors.hpp"
#include "cuntzlab/tolerances.hpp"

namespace cuntzlab {

Backend Subspace::backend() const {
  if (basis.empty()) throw EmptySpan("backend of an empty subspace");
  return basis.front().backend();
}

Subspace orthonormalize(const std::vector<ComplexVec>& vectors, double rank_tolerance) {
  if (vectors.empty()) throw EmptySpan("orthonormalize of an empty family");
  Backend b = vectors.front().backend();
  Subspace out;
  for (const ComplexVec& v : vectors) {
    if (v.backend() != b) throw BackendMismatch("mixed backends in one span");
    ComplexVec w = v;
    // Two MGS sweeps keep the Gram residual near machine precision.
    for (int sweep = 0; sweep < 2; ++sweep)
      for (const ComplexVec& u : out.basis) w -= u * inner_product(u, w);
    double n = norm(w);
    if (n < rank_tolerance) continue;
    out.basis.push_back(w * cplx{1.0 / n});
  }
  if (out.basis.empty()) throw EmptySpan("all vectors dropped by rank tolerance");
  return out;
}

ComplexVec project_out(const Subspace& sub, const ComplexVec& v) {
  ComplexVec w = v;
  for (const ComplexVec& u : sub.basis) w -= u * inner_product(u, w);
  // Second sweep for the same reason as in orthonormalize.
  for (const ComplexVec& u : sub.basis) w -= u * inner_product(u, w);
  return w;
}

ComplexVec project_onto(const Subspace& sub, const ComplexVec& v) {
  ComplexVec w = v;
  w -= project_out(sub, v);
  return w;
}

double distance(const Subspace& sub, const ComplexVec& v) {
  return norm(project_out(sub, v));
}

double containment_residual(const Subspace& a, const Subspace& b) {
  double worst = 0.0;
  for (const ComplexVec& x : a.basis) worst = std::max(worst, distance(b, x));
  return worst;
}

double span_gap(const Subspace& a, const Subspace& b) {
  return std::max(containment_residual(a, b), containment_residual(b, a));
}

void normalize_phases(Subspace& sub) {
  for (ComplexVec& v : sub.basis) {
    if (v.backend() != Backend::Laurent) continue;
    const LaurentPoly& p = v.laurent();
    if (p.is_zero()) continue;
    double best = 0.0;
    cplx lead = 1.0;
    for (const auto& [n, c] : p.coeffs()) {
      if (std::abs(c) > best + 1e-12) {
        best = std::abs(c);
        lead = c;
      }
    }
    v *= std::conj(lead) / std::abs(lead);
  }
}

}  // namespace cuntzlab
