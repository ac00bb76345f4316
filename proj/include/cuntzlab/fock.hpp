#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cuntzlab/laurent.hpp"  // for cplx

namespace cuntzlab {

/// Multi-index over the generator alphabet {0, ..., N-1}.  The empty index is
/// allowed and stands for the unit (S_empty = identity).
using MultiIndex = std::vector<int>;

std::string to_string(const MultiIndex& I);
MultiIndex parse_multi_index(const std::string& csv);  // "0,1,1" -> (0,1,1)

/// Word of the Cuntz algebra in normal form s_I s_J^*, or zero.  Every
/// product of generators and adjoints reduces to exactly one such word by
/// confluence of s_i^* s_j = delta_{ij} 1.
struct NormalWord {
  MultiIndex I;
  MultiIndex J;
  bool zero = false;

  static NormalWord unit() { return {}; }
  static NormalWord make_zero() { return {{}, {}, true}; }
  static NormalWord generator(int i) { return {{i}, {}, false}; }
  static NormalWord generator_star(int i) { return {{}, {i}, false}; }

  NormalWord adjoint() const { return zero ? *this : NormalWord{J, I, false}; }
  bool operator==(const NormalWord& o) const;
};

/// Product reduction: s_J^* s_K collapses via prefix cancellation.
NormalWord reduce(const NormalWord& a, const NormalWord& b);

/// Exact rational with overflow-checked arithmetic; large enough for every
/// omega value at the supported depths.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1);
  bool is_zero() const { return num == 0; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

/// The state omega(s_I s_J^*) = delta_{I,J} N^{-|I|}, evaluated exactly.
Rational omega(const NormalWord& w, int N);

/// Label (I, J) for the GNS vector S_I S_J^* Omega.
struct FockLabel {
  MultiIndex I;
  MultiIndex J;
  bool operator<(const FockLabel& o) const;
  bool operator==(const FockLabel& o) const { return I == o.I && J == o.J; }
};

/// <S_I S_J^* Omega | S_K S_L^* Omega> through omega; exact.
Rational label_inner(const FockLabel& a, const FockLabel& b, int N);

/// Finite linear combination of GNS vectors in the omega-representation.
/// Inner products are computed through the state only.
class FockVec {
 public:
  FockVec() : scale_(2) {}
  explicit FockVec(int N) : scale_(N) {}
  static FockVec vacuum(int N) { return single(N, {{}, {}}, 1.0); }
  static FockVec single(int N, FockLabel l, cplx c);

  int scale() const { return scale_; }
  const std::map<FockLabel, cplx>& terms() const { return terms_; }
  void add_term(const FockLabel& l, cplx c);
  bool is_zero() const { return terms_.empty(); }

  FockVec& operator+=(const FockVec& rhs);
  FockVec& operator-=(const FockVec& rhs);
  FockVec& operator*=(cplx s);
  friend FockVec operator+(FockVec a, const FockVec& b) { return a += b; }
  friend FockVec operator-(FockVec a, const FockVec& b) { return a -= b; }
  friend FockVec operator*(FockVec a, cplx s) { return a *= s; }
  friend FockVec operator*(cplx s, FockVec a) { return a *= s; }

 private:
  int scale_;
  std::map<FockLabel, cplx> terms_;
};

cplx inner_product(const FockVec& f, const FockVec& g);
double norm(const FockVec& f);

/// Gram matrix of GNS vectors (row-major, dense, real: omega values are
/// rational).  Hermitian PSD up to float conversion.
std::vector<std::vector<double>> gram(const std::vector<FockLabel>& labels, int N);

/// Orthonormal labels {N^{k/2} S_I^* Omega : 1 <= |I| = k <= depth} spanning
/// the co-invariant subspace generated by the backward orbit of Omega.
struct ScaledLabel {
  MultiIndex J;    // the index I of S_I^* Omega
  double scale;    // N^{|I|/2}
};
std::vector<ScaledLabel> coinvariant_basis(int N, int depth);

/// ||P_k S_i P_k|| where P_k projects onto coinvariant_basis(N, depth);
/// largest singular value of the compressed matrix, entries exact before the
/// final float conversion.
double compressed_norm(int N, int i, int depth);

struct WanderingReport {
  bool pass = true;
  Rational max_overlap;      // first nonzero overlap found, else 0
  long checked_words = 0;
};

/// Verifies that W = span{S_i S_j^* Omega} is wandering up to the given word
/// depth: all <x | S_K y> vanish as exact rationals for 1 <= |K| <= depth.
WanderingReport fock_wandering_check(int N, int depth,
                                     bool include_vacuum = false);

}  // namespace cuntzlab
