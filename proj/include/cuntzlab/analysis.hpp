#pragma once

#include <optional>

#include "cuntzlab/representation.hpp"
#include "cuntzlab/subspace.hpp"

namespace cuntzlab {

struct CheckReport {
  bool pass = false;
  double residual = 0.0;
};

/// S^* L <= L: residual is max over basis x and j of ||(I - P_L) S_j^* x||.
CheckReport is_coinvariant(const Representation& rep, const Subspace& L,
                           double tolerance = 1e-10);

/// L <= S L, the equivalent condition; residual measured against span{S_i x}.
CheckReport is_contained_in_SL(const Representation& rep, const Subspace& L,
                               double tolerance = 1e-10);

/// Projection side of the endomorphism alpha(P) = sum S_i P S_i^*: the span
/// S L = span{S_i x}, re-orthonormalized.
Subspace alpha_project(const Representation& rep, const Subspace& L);

/// span{S_j^* x}, re-orthonormalized.
Subspace s_star_image(const Representation& rep, const Subspace& L);

/// S^k L by iterating alpha_project.
Subspace s_power(const Representation& rep, const Subspace& L, int k);

/// mu(L) = (S L) minus L for co-invariant L; throws NotCoinvariant otherwise.
Subspace wandering_part(const Representation& rep, const Subspace& L,
                        double tolerance = 1e-10);

struct WanderingCheck {
  bool pass = false;
  double max_overlap = 0.0;
};

/// All |<x | S_I y>| vanish for basis pairs and 1 <= |I| <= depth.
WanderingCheck is_wandering(const Representation& rep, const Subspace& W, int depth,
                            double tolerance = 1e-10);

struct Decomposition {
  std::vector<Subspace> layers;  // [L, W, SW, ..., S^{depth} W]
  double max_overlap = 0.0;      // worst |<u|v>| across distinct layers
  double max_inclusion_residual = 0.0;  // S^{k+1} L inside the partial sums
};

/// The orthogonal resolution of a nontrivial co-invariant subspace; throws
/// ReducingSubspace when L = S L within tolerance.
Decomposition decompose(const Representation& rep, const Subspace& L, int depth,
                        double tolerance = 1e-10);

/// M = span{E_i L}: co-invariant and stable, contains L.
Subspace stabilize(const Representation& rep, const Subspace& L,
                   double tolerance = 1e-10);

/// Invariance under every range projection E_i.
CheckReport is_stable(const Representation& rep, const Subspace& L,
                      double tolerance = 1e-10);

/// Orthonormal basis of the ambient window: Laurent span{e_{-M},...,e_M} or
/// all step cells at level M (normalized indicators).
std::vector<ComplexVec> window_basis(const Representation& rep, int M);

/// max over window basis vectors of dist(., S^depth L)^2; zero means the
/// orbit of L saturates the window at that depth.
double saturation_defect(const Representation& rep, const Subspace& L, int depth,
                         int window);

/// Depth-bounded purity probe: runs the fixpoint iteration
/// L_{k+1} = {x in L_k : S_j x in L_k for all j} `depth` times and returns a
/// unit vector of the surviving core, or nothing.  "Nothing" certifies purity
/// only up to this depth.
std::optional<ComplexVec> invariance_witness(const Representation& rep,
                                             const Subspace& L, int depth);

/// lambda(W): the window complement of F_depth(W) = W + SW + ... + S^depth W.
/// Throws NotWandering if W fails its wandering check at this depth.
Subspace lambda_complement(const Representation& rep, const Subspace& W, int window,
                           int depth);

struct MuLambdaReport {
  double contains_residual = 0.0;  // max dist of W basis from mu(lambda(W))
  int extra_dim = 0;               // boundary defect of the window construction
};

/// Round trip W = mu(lambda(W)) at window scale, boundary defect reported.
MuLambdaReport mu_lambda_check(const Representation& rep, const Subspace& W,
                               int window, int depth);

struct CuntzToeplitzReport {
  double relation_residual = 0.0;     // (a) T_i^* T_j = delta_{ij} P_F
  double inequality_min_eig = 0.0;    // (b) min eig of P_F - sum T_i T_i^*
  double annihilation_residual = 0.0; // (c) T_i^* w = 0 on W
  bool pass = false;
};

/// Compression T_i = P_F S_i P_F on F_depth(W); relation (a) is checked on
/// the layers below the top one, where the truncation is exact.
CuntzToeplitzReport cuntz_toeplitz_check(const Representation& rep, const Subspace& W,
                                         int depth, double tolerance = 1e-10);

}  // namespace cuntzlab
