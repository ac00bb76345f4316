#include "cuntzlab/step_function.hpp"

#include <cmath>

#include "cuntzlab/errors.hpp"

namespace cuntzlab {

namespace {

long ipow(int base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > (1L << 40)) throw DepthOverflow("step-function level too deep");
  }
  return r;
}

}  // namespace

StepFunction::StepFunction(int N, int level, std::vector<cplx> values)
    : scale_(N), level_(level), values_(std::move(values)) {
  if (N < 2) throw DomainError("step function scale must be >= 2");
  if (level < 0) throw DomainError("step function level must be >= 0");
  if (static_cast<long>(values_.size()) != ipow(N, level))
    throw DomainError("step function value count must equal N^level");
}

StepFunction StepFunction::constant(int N, cplx c) {
  return StepFunction(N, 0, std::vector<cplx>{c});
}

StepFunction StepFunction::indicator(int N, int level, const std::vector<long>& cells) {
  std::vector<cplx> v(ipow(N, level), cplx{0.0});
  for (long c : cells) {
    if (c < 0 || c >= static_cast<long>(v.size()))
      throw DomainError("indicator cell out of range");
    v[c] = 1.0;
  }
  return StepFunction(N, level, std::move(v));
}

StepFunction StepFunction::refined(int target_level) const {
  if (target_level < level_)
    throw DomainError("step refinement target below current level");
  if (target_level == level_) return *this;
  long rep = ipow(scale_, target_level - level_);
  std::vector<cplx> v;
  v.reserve(values_.size() * rep);
  for (cplx c : values_)
    for (long r = 0; r < rep; ++r) v.push_back(c);
  return StepFunction(scale_, target_level, std::move(v));
}

StepFunction& StepFunction::operator+=(const StepFunction& rhs) {
  if (scale_ != rhs.scale_) throw BackendMismatch("step scales differ");
  int lv = std::max(level_, rhs.level_);
  *this = refined(lv);
  StepFunction r = rhs.refined(lv);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += r.values_[i];
  return *this;
}

StepFunction& StepFunction::operator-=(const StepFunction& rhs) {
  if (scale_ != rhs.scale_) throw BackendMismatch("step scales differ");
  int lv = std::max(level_, rhs.level_);
  *this = refined(lv);
  StepFunction r = rhs.refined(lv);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= r.values_[i];
  return *this;
}

StepFunction& StepFunction::operator*=(cplx s) {
  for (cplx& c : values_) c *= s;
  return *this;
}

StepFunction operator*(const StepFunction& a, const StepFunction& b) {
  if (a.scale_ != b.scale_) throw BackendMismatch("step scales differ");
  int lv = std::max(a.level_, b.level_);
  StepFunction x = a.refined(lv);
  StepFunction y = b.refined(lv);
  for (std::size_t i = 0; i < x.values_.size(); ++i) x.values_[i] *= y.values_[i];
  return x;
}

bool StepFunction::is_zero(double eps) const {
  for (cplx c : values_)
    if (std::abs(c) > eps) return false;
  return true;
}

void StepFunction::coarsen() {
  while (level_ > 0) {
    long block = scale_;
    bool constant_blocks = true;
    for (std::size_t i = 0; i < values_.size() && constant_blocks; i += block)
      for (long r = 1; r < block; ++r)
        if (values_[i + r] != values_[i]) {
          constant_blocks = false;
          break;
        }
    if (!constant_blocks) return;
    std::vector<cplx> v(values_.size() / block);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i * block];
    values_ = std::move(v);
    --level_;
  }
}

cplx inner_product(const StepFunction& f, const StepFunction& g) {
  if (f.scale() != g.scale()) throw BackendMismatch("step scales differ");
  int lv = std::max(f.level(), g.level());
  StepFunction a = f.refined(lv);
  StepFunction b = g.refined(lv);
  cplx acc = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i)
    acc += std::conj(a.values()[i]) * b.values()[i];
  return acc / static_cast<double>(a.values().size());
}

double norm(const StepFunction& f) {
  double acc = 0.0;
  for (cplx c : f.values()) acc += std::norm(c);
  return std::sqrt(acc / static_cast<double>(f.values().size()));
}

}  // namespace cuntzlab
