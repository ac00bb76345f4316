#pragma once

namespace cuntzlab::tol {

// Coefficients below this are pruned after every arithmetic op.
inline constexpr double kPrune = 1e-14;

// Rank tolerance in Gram-Schmidt and kernel extraction.
inline constexpr double kRank = 1e-9;

// Co-invariance / stability / containment residual threshold.
inline constexpr double kCoinvariant = 1e-10;

// Default threshold wherever a floating-point identity is asserted.
inline constexpr double kIdentity = 1e-10;

// Adjoint duality and isometry checks.
inline constexpr double kAdjoint = 1e-12;

// Hard cap on the number of multi-index words in one enumeration.
inline constexpr long kWordCap = 1L << 22;

}  // namespace cuntzlab::tol
