#pragma once

#include <optional>
#include <vector>

#include "cuntzlab/vec.hpp"

namespace cuntzlab {

/// Finite orthonormal family spanning a subspace of one backend.  The
/// optional ambient window M (Laurent: span{e_{-M},...,e_M}; step: all cells
/// at level M) is carried only for saturation / complement operations.
struct Subspace {
  std::vector<ComplexVec> basis;
  std::optional<int> ambient_window;

  int dim() const { return static_cast<int>(basis.size()); }
  Backend backend() const;
};

/// Modified Gram-Schmidt with a re-orthogonalization pass; vectors whose
/// residual norm falls below the rank tolerance are dropped, input order is
/// preserved.  Throws EmptySpan when nothing survives.
Subspace orthonormalize(const std::vector<ComplexVec>& vectors,
                        double rank_tolerance = 1e-9);

/// Component of v orthogonal to the subspace.
ComplexVec project_out(const Subspace& sub, const ComplexVec& v);
/// Orthogonal projection of v onto the subspace.
ComplexVec project_onto(const Subspace& sub, const ComplexVec& v);
/// Distance from v to the subspace.
double distance(const Subspace& sub, const ComplexVec& v);

/// max_x ||(I - P_B) x|| over the orthonormal basis of A: zero iff A <= B.
double containment_residual(const Subspace& a, const Subspace& b);

/// Symmetric span distance: max of the two containment residuals.  Equals
/// sin of the largest principal angle when the dimensions agree.
double span_gap(const Subspace& a, const Subspace& b);

/// Deterministic phase: rotate each basis vector so its largest coefficient
/// is real positive (Laurent backend only; other backends returned as-is).
void normalize_phases(Subspace& sub);

}  // namespace cuntzlab
