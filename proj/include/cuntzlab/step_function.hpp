#pragma once

#include <vector>

#include "cuntzlab/laurent.hpp"

namespace cuntzlab {

/// Piecewise-constant function on [0,1) over the N-adic partition at a given
/// level: value index m covers [m N^{-level}, (m+1) N^{-level}).  Functions
/// are stored at the coarsest exact level; binary operations refine both
/// operands to the common level first.  The inner product uses normalized
/// Lebesgue measure, <f|g> = mean of conj(f) g over cells.
class StepFunction {
 public:
  StepFunction() : scale_(2), level_(0), values_(1, cplx{0.0}) {}
  StepFunction(int N, int level, std::vector<cplx> values);

  static StepFunction constant(int N, cplx c = 1.0);
  /// Indicator of the union of the given cells at `level`.
  static StepFunction indicator(int N, int level, const std::vector<long>& cells);

  int scale() const { return scale_; }
  int level() const { return level_; }
  const std::vector<cplx>& values() const { return values_; }
  long cell_count() const { return static_cast<long>(values_.size()); }

  /// Same function represented at a finer level (values replicated).
  StepFunction refined(int target_level) const;

  StepFunction& operator+=(const StepFunction& rhs);
  StepFunction& operator-=(const StepFunction& rhs);
  StepFunction& operator*=(cplx s);
  friend StepFunction operator+(StepFunction a, const StepFunction& b) { return a += b; }
  friend StepFunction operator-(StepFunction a, const StepFunction& b) { return a -= b; }
  friend StepFunction operator*(StepFunction a, cplx s) { return a *= s; }
  friend StepFunction operator*(cplx s, StepFunction a) { return a *= s; }

  /// Pointwise product.
  friend StepFunction operator*(const StepFunction& a, const StepFunction& b);

  bool is_zero(double eps = tol::kPrune) const;

  /// Drops trailing refinement when every block of N values is constant.
  void coarsen();

 private:
  int scale_;
  int level_;
  std::vector<cplx> values_;
};

cplx inner_product(const StepFunction& f, const StepFunction& g);
double norm(const StepFunction& f);

}  // namespace cuntzlab
