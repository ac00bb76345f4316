#pragma once

#include <variant>

#include "cuntzlab/fock.hpp"
#include "cuntzlab/laurent.hpp"
#include "cuntzlab/step_function.hpp"

namespace cuntzlab {

enum class Backend { Laurent, Step, Fock };

const char* backend_name(Backend b);

/// Vector in one of the concrete Hilbert-space backends.  All vectors
/// combined by any operation must share one backend (and scale, for step and
/// fock payloads); a mismatch raises BackendMismatch.
class ComplexVec {
 public:
  ComplexVec() : payload_(LaurentPoly{}) {}
  ComplexVec(LaurentPoly p) : payload_(std::move(p)) {}
  ComplexVec(StepFunction s) : payload_(std::move(s)) {}
  ComplexVec(FockVec f) : payload_(std::move(f)) {}

  Backend backend() const;

  const LaurentPoly& laurent() const;
  const StepFunction& step() const;
  const FockVec& fock() const;

  bool is_zero() const;

  ComplexVec& operator+=(const ComplexVec& rhs);
  ComplexVec& operator-=(const ComplexVec& rhs);
  ComplexVec& operator*=(cplx s);
  friend ComplexVec operator+(ComplexVec a, const ComplexVec& b) { return a += b; }
  friend ComplexVec operator-(ComplexVec a, const ComplexVec& b) { return a -= b; }
  friend ComplexVec operator*(ComplexVec a, cplx s) { return a *= s; }
  friend ComplexVec operator*(cplx s, ComplexVec a) { return a *= s; }

 private:
  std::variant<LaurentPoly, StepFunction, FockVec> payload_;
};

cplx inner_product(const ComplexVec& f, const ComplexVec& g);
double norm(const ComplexVec& f);

}  // namespace cuntzlab
