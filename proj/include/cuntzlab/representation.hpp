#pragma once

#include <memory>
#include <vector>

#include "cuntzlab/filterbank.hpp"
#include "cuntzlab/vec.hpp"

namespace cuntzlab {

/// One concrete operator backend for the isometries S_0, ..., S_{N-1}:
///
///  * Filter: (S_j f)(z) = m_j(z) f(z^N) on Laurent polynomials; the
///    constructor rejects banks whose polyphase matrix is not unitary (tests
///    may use filter_unchecked to build deliberately broken systems).
///  * Base:   T_j e_n = e_{Nn+j}; the Filter representation with A = I.
///  * Step:   S_j f = sqrt(N) chi_{cell set j} (f o multiplication by N) on
///    N-adic step functions; the default N = 2 partition is
///    A = [0,1/4) u [3/4,1), B = [1/4,3/4).
///  * Fock:   word action on GNS vectors S_I S_J^* Omega of the state omega.
class Representation {
 public:
  enum class Kind { Filter, Base, Step, Fock };

  static Representation filter(FilterBank bank, double tolerance = 1e-10);
  static Representation filter_unchecked(FilterBank bank);
  static Representation base(int N);
  static Representation step2();
  /// General step backend: `assignment[cell]` at the given level names the
  /// residue whose branch region contains that cell; each parent cell's N
  /// branches must cover all residues exactly once.
  static Representation step(int N, std::vector<int> assignment, int level);
  static Representation fock(int N);

  Kind kind() const { return kind_; }
  int N() const { return n_; }
  Backend expected_backend() const;

  const FilterBank& bank() const;
  const PolyphaseMatrix& poly() const;
  const std::vector<int>& step_assignment() const { return step_assign_; }
  int step_assignment_level() const { return step_level_; }

  /// Largest filter degree span (Filter kind), used for window sizing.
  long filter_degree_span() const;

  ComplexVec S(int j, const ComplexVec& v) const;
  ComplexVec S_star(int j, const ComplexVec& v) const;
  /// S_I = S_{i_1} ... S_{i_k} (rightmost letter acts first).
  ComplexVec word(const MultiIndex& I, const ComplexVec& v) const;
  /// S_I^* = S_{i_k}^* ... S_{i_1}^* (first letter acts first).
  ComplexVec word_star(const MultiIndex& I, const ComplexVec& v) const;
  ComplexVec E(int j, const ComplexVec& v) const;  // E_j = S_j S_j^*

 private:
  Representation() = default;

  Kind kind_ = Kind::Base;
  int n_ = 2;
  // Filter payload
  FilterBank bank_;
  PolyphaseMatrix poly_;
  std::vector<std::vector<LaurentPoly>> poly_conj_;  // conj~(A_{i,j}) cache
  // Step payload
  int step_level_ = 0;
  std::vector<int> step_assign_;

  void check_index(int j) const;
  LaurentPoly s_laurent(int j, const LaurentPoly& v) const;
  LaurentPoly s_star_laurent(int j, const LaurentPoly& v) const;
  StepFunction s_step(int j, const StepFunction& v) const;
  StepFunction s_star_step(int j, const StepFunction& v) const;
  FockVec s_fock(int j, const FockVec& v) const;
  FockVec s_star_fock(int j, const FockVec& v) const;
};

/// Max over probes v and pairs (i,j) of ||S_i^* S_j v - delta_{ij} v|| and of
/// ||sum_j E_j v - v||.
double cuntz_residual(const Representation& rep, const std::vector<ComplexVec>& probes);

/// | sum_{|I|=k} ||S_I^* x||^2 - ||x||^2 |, enumerating all N^k words.
double parseval_level(const Representation& rep, const ComplexVec& x, int k);

/// All words of the given length, in lexicographic order.
std::vector<MultiIndex> all_words(int N, int length);

}  // namespace cuntzlab
