#include "cuntzlab/vec.hpp"

#include "cuntzlab/errors.hpp"

namespace cuntzlab {

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Laurent: return "laurent";
    case Backend::Step: return "step";
    case Backend::Fock: return "fock";
  }
  return "?";
}

Backend ComplexVec::backend() const {
  if (std::holds_alternative<LaurentPoly>(payload_)) return Backend::Laurent;
  if (std::holds_alternative<StepFunction>(payload_)) return Backend::Step;
  return Backend::Fock;
}

namespace {

[[noreturn]] void mismatch(Backend a, Backend b) {
  throw BackendMismatch(std::string("backend mismatch: ") + backend_name(a) +
                        " vs " + backend_name(b));
}

}  // namespace

const LaurentPoly& ComplexVec::laurent() const {
  if (auto* p = std::get_if<LaurentPoly>(&payload_)) return *p;
  mismatch(Backend::Laurent, backend());
}

const StepFunction& ComplexVec::step() const {
  if (auto* p = std::get_if<StepFunction>(&payload_)) return *p;
  mismatch(Backend::Step, backend());
}

const FockVec& ComplexVec::fock() const {
  if (auto* p = std::get_if<FockVec>(&payload_)) return *p;
  mismatch(Backend::Fock, backend());
}

bool ComplexVec::is_zero() const {
  return std::visit([](const auto& p) { return p.is_zero(); }, payload_);
}

ComplexVec& ComplexVec::operator+=(const ComplexVec& rhs) {
  if (backend() != rhs.backend()) mismatch(backend(), rhs.backend());
  std::visit(
      [&rhs](auto& p) {
        using T = std::decay_t<decltype(p)>;
        p += std::get<T>(rhs.payload_);
      },
      payload_);
  return *this;
}

ComplexVec& ComplexVec::operator-=(const ComplexVec& rhs) {
  if (backend() != rhs.backend()) mismatch(backend(), rhs.backend());
  std::visit(
      [&rhs](auto& p) {
        using T = std::decay_t<decltype(p)>;
        p -= std::get<T>(rhs.payload_);
      },
      payload_);
  return *this;
}

ComplexVec& ComplexVec::operator*=(cplx s) {
  std::visit([s](auto& p) { p *= s; }, payload_);
  return *this;
}

cplx inner_product(const ComplexVec& f, const ComplexVec& g) {
  if (f.backend() != g.backend()) mismatch(f.backend(), g.backend());
  switch (f.backend()) {
    case Backend::Laurent: return inner_product(f.laurent(), g.laurent());
    case Backend::Step: return inner_product(f.step(), g.step());
    case Backend::Fock: return inner_product(f.fock(), g.fock());
  }
  return 0.0;
}

double norm(const ComplexVec& f) {
  switch (f.backend()) {
    case Backend::Laurent: return norm(f.laurent());
    case Backend::Step: return norm(f.step());
    case Backend::Fock: return norm(f.fock());
  }
  return 0.0;
}

}  // namespace cuntzlab
