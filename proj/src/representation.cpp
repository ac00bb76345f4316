#include "cuntzlab/representation.hpp"

#include <cmath>

#include "cuntzlab/errors.hpp"
#include "cuntzlab/tolerances.hpp"

namespace cuntzlab {

namespace {

long ipow(int base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

Representation Representation::filter(FilterBank bank, double tolerance) {
  PolyphaseMatrix A = polyphase(bank);
  UnitaryReport u = check_unitary(A, tolerance);
  if (!u.pass) throw InvalidFilterBank(u.max_residual);
  return filter_unchecked(std::move(bank));
}

Representation Representation::filter_unchecked(FilterBank bank) {
  Representation rep;
  rep.kind_ = Kind::Filter;
  rep.n_ = bank.N;
  rep.poly_ = polyphase(bank);
  rep.bank_ = std::move(bank);
  rep.poly_conj_.assign(rep.n_, std::vector<LaurentPoly>(rep.n_));
  for (int i = 0; i < rep.n_; ++i)
    for (int j = 0; j < rep.n_; ++j)
      rep.poly_conj_[i][j] = rep.poly_.at(i, j).conj_reflect();
  return rep;
}

Representation Representation::base(int N) {
  if (N < 2) throw DomainError("representation scale must be >= 2");
  Representation rep;
  rep.kind_ = Kind::Base;
  rep.n_ = N;
  return rep;
}

Representation Representation::step2() { return step(2, {0, 1, 1, 0}, 2); }

Representation Representation::step(int N, std::vector<int> assignment, int level) {
  if (N < 2) throw DomainError("representation scale must be >= 2");
  if (level < 1) throw DomainError("step assignment level must be >= 1");
  long cells = ipow(N, level);
  if (static_cast<long>(assignment.size()) != cells)
    throw DomainError("step assignment must cover N^level cells");
  // Each parent cell's N branch cells must hit every residue exactly once;
  // this is what makes the S_j isometries with orthogonal ranges summing to I.
  long parents = ipow(N, level - 1);
  for (long c = 0; c < parents; ++c) {
    std::vector<bool> seen(N, false);
    for (int t = 0; t < N; ++t) {
      long cell = c + t * parents;
      int r = assignment[cell];
      if (r < 0 || r >= N || seen[r])
        throw DomainError("step assignment is not a branch transversal");
      seen[r] = true;
    }
  }
  Representation rep;
  rep.kind_ = Kind::Step;
  rep.n_ = N;
  rep.step_level_ = level;
  rep.step_assign_ = std::move(assignment);
  return rep;
}

Representation Representation::fock(int N) {
  if (N < 2) throw DomainError("representation scale must be >= 2");
  Representation rep;
  rep.kind_ = Kind::Fock;
  rep.n_ = N;
  return rep;
}

Backend Representation::expected_backend() const {
  switch (kind_) {
    case Kind::Filter:
    case Kind::Base: return Backend::Laurent;
    case Kind::Step: return Backend::Step;
    case Kind::Fock: return Backend::Fock;
  }
  return Backend::Laurent;
}

const FilterBank& Representation::bank() const {
  if (kind_ != Kind::Filter) throw DomainError("representation has no filter bank");
  return bank_;
}

const PolyphaseMatrix& Representation::poly() const {
  if (kind_ != Kind::Filter) throw DomainError("representation has no polyphase matrix");
  return poly_;
}

long Representation::filter_degree_span() const {
  long span = 0;
  for (const LaurentPoly& m : bank().filters)
    if (!m.is_zero()) span = std::max(span, m.max_index() - m.min_index());
  return span;
}

void Representation::check_index(int j) const {
  if (j < 0 || j >= n_) throw DomainError("generator index out of range");
}

LaurentPoly Representation::s_laurent(int j, const LaurentPoly& v) const {
  if (kind_ == Kind::Base) {
    LaurentPoly out;
    for (const auto& [n, c] : v.coeffs())
      out.set_coeff(static_cast<long>(n_) * n + j, c);
    return out;
  }
  return bank_.filters[j] * compose_power(v, n_);
}

LaurentPoly Representation::s_star_laurent(int j, const LaurentPoly& v) const {
  if (kind_ == Kind::Base) return downsample(v, j, n_);
  LaurentPoly out;
  for (int i = 0; i < n_; ++i) out += poly_conj_[j][i] * downsample(v, i, n_);
  return out;
}

StepFunction Representation::s_step(int j, const StepFunction& v) const {
  int q = step_level_;
  int L = std::max(v.level() + 1, q);
  StepFunction ref = v.refined(L - 1);
  long cells = ipow(n_, L);
  long mod = ipow(n_, L - 1);
  int shift_pow = L - q;
  long shift = ipow(n_, shift_pow);
  double root_n = std::sqrt(static_cast<double>(n_));
  std::vector<cplx> out(cells, cplx{0.0});
  for (long m = 0; m < cells; ++m)
    if (step_assign_[m / shift] == j) out[m] = root_n * ref.values()[m % mod];
  return StepFunction(n_, L, std::move(out));
}

StepFunction Representation::s_star_step(int j, const StepFunction& v) const {
  int q = step_level_;
  int Lo = std::max(v.level() - 1, q - 1);
  StepFunction ref = v.refined(Lo + 1);
  long out_cells = ipow(n_, Lo);
  long assign_shift = ipow(n_, Lo + 1 - q);
  double root_n = std::sqrt(static_cast<double>(n_));
  std::vector<cplx> out(out_cells, cplx{0.0});
  for (long c = 0; c < out_cells; ++c) {
    for (int t = 0; t < n_; ++t) {
      long branch = c + t * out_cells;
      if (step_assign_[branch / assign_shift] == j) {
        out[c] = ref.values()[branch] / root_n;
        break;
      }
    }
  }
  StepFunction result(n_, Lo, std::move(out));
  result.coarsen();
  return result;
}

FockVec Representation::s_fock(int j, const FockVec& v) const {
  FockVec out(n_);
  for (const auto& [l, c] : v.terms()) {
    FockLabel nl = l;
    nl.I.insert(nl.I.begin(), j);
    out.add_term(nl, c);
  }
  return out;
}

FockVec Representation::s_star_fock(int j, const FockVec& v) const {
  FockVec out(n_);
  for (const auto& [l, c] : v.terms()) {
    if (l.I.empty()) {
      FockLabel nl;
      nl.J = l.J;
      nl.J.push_back(j);  // s_j^* s_J^* = (s_J s_j)^*
      out.add_term(nl, c);
    } else if (l.I.front() == j) {
      FockLabel nl;
      nl.I.assign(l.I.begin() + 1, l.I.end());
      nl.J = l.J;
      out.add_term(nl, c);
    }
  }
  return out;
}

ComplexVec Representation::S(int j, const ComplexVec& v) const {
  check_index(j);
  if (v.backend() != expected_backend())
    throw BackendMismatch("vector backend does not match representation");
  switch (kind_) {
    case Kind::Filter:
    case Kind::Base: return s_laurent(j, v.laurent());
    case Kind::Step: return s_step(j, v.step());
    case Kind::Fock: return s_fock(j, v.fock());
  }
  return v;
}

ComplexVec Representation::S_star(int j, const ComplexVec& v) const {
  check_index(j);
  if (v.backend() != expected_backend())
    throw BackendMismatch("vector backend does not match representation");
  switch (kind_) {
    case Kind::Filter:
    case Kind::Base: return s_star_laurent(j, v.laurent());
    case Kind::Step: return s_star_step(j, v.step());
    case Kind::Fock: return s_star_fock(j, v.fock());
  }
  return v;
}

ComplexVec Representation::word(const MultiIndex& I, const ComplexVec& v) const {
  ComplexVec out = v;
  for (auto it = I.rbegin(); it != I.rend(); ++it) out = S(*it, out);
  return out;
}

ComplexVec Representation::word_star(const MultiIndex& I, const ComplexVec& v) const {
  ComplexVec out = v;
  for (int j : I) out = S_star(j, out);
  return out;
}

ComplexVec Representation::E(int j, const ComplexVec& v) const {
  return S(j, S_star(j, v));
}

double cuntz_residual(const Representation& rep, const std::vector<ComplexVec>& probes) {
  if (probes.empty()) throw DomainError("cuntz_residual needs at least one probe");
  double worst = 0.0;
  for (const ComplexVec& v : probes) {
    ComplexVec completeness = v * cplx{-1.0};
    for (int j = 0; j < rep.N(); ++j) {
      ComplexVec sj = rep.S(j, v);
      completeness += rep.S(j, rep.S_star(j, v));
      for (int i = 0; i < rep.N(); ++i) {
        ComplexVec w = rep.S_star(i, sj);
        if (i == j) w -= v;
        worst = std::max(worst, norm(w));
      }
    }
    worst = std::max(worst, norm(completeness));
  }
  return worst;
}

namespace {

double parseval_sum(const Representation& rep, const ComplexVec& v, int remaining) {
  if (remaining == 0) {
    double n = norm(v);
    return n * n;
  }
  if (v.is_zero()) return 0.0;
  double acc = 0.0;
  for (int j = 0; j < rep.N(); ++j)
    acc += parseval_sum(rep, rep.S_star(j, v), remaining - 1);
  return acc;
}

}  // namespace

double parseval_level(const Representation& rep, const ComplexVec& x, int k) {
  if (k < 0) throw DomainError("parseval level must be >= 0");
  double words = std::pow(static_cast<double>(rep.N()), k);
  if (words > static_cast<double>(tol::kWordCap))
    throw DepthOverflow("parseval word count exceeds cap");
  double nx = norm(x);
  return std::abs(parseval_sum(rep, x, k) - nx * nx);
}

std::vector<MultiIndex> all_words(int N, int length) {
  std::vector<MultiIndex> words;
  double count = std::pow(static_cast<double>(N), length);
  if (count > static_cast<double>(tol::kWordCap))
    throw DepthOverflow("word count exceeds cap");
  MultiIndex cur(length, 0);
  if (length == 0) return {cur};
  while (true) {
    words.push_back(cur);
    int pos = length - 1;
    while (pos >= 0 && cur[pos] == N - 1) cur[pos--] = 0;
    if (pos < 0) break;
    ++cur[pos];
  }
  return words;
}

}  // namespace cuntzlab
