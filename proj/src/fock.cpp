#include "cuntzlab/fock.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "cuntzlab/errors.hpp"
#include "cuntzlab/tolerances.hpp"

namespace cuntzlab {

std::string to_string(const MultiIndex& I) {
  std::ostringstream os;
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (k) os << ',';
    os << I[k];
  }
  return os.str();
}

MultiIndex parse_multi_index(const std::string& csv) {
  MultiIndex I;
  std::istringstream is(csv);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    I.push_back(std::stoi(tok));
  }
  return I;
}

bool NormalWord::operator==(const NormalWord& o) const {
  if (zero || o.zero) return zero == o.zero;
  return I == o.I && J == o.J;
}

namespace {

bool is_prefix(const MultiIndex& p, const MultiIndex& w) {
  if (p.size() > w.size()) return false;
  return std::equal(p.begin(), p.end(), w.begin());
}

MultiIndex strip_prefix(const MultiIndex& p, const MultiIndex& w) {
  return MultiIndex(w.begin() + static_cast<long>(p.size()), w.end());
}

MultiIndex concat(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace

NormalWord reduce(const NormalWord& a, const NormalWord& b) {
  if (a.zero || b.zero) return NormalWord::make_zero();
  // (s_{I1} s_{J1}^*) (s_{I2} s_{J2}^*): cancel s_{J1}^* s_{I2}.
  if (is_prefix(a.J, b.I)) {
    // s_{J1}^* s_{I2} = s_{I2 \ J1}
    return NormalWord{concat(a.I, strip_prefix(a.J, b.I)), b.J, false};
  }
  if (is_prefix(b.I, a.J)) {
    // s_{J1}^* s_{I2} = s_{J1 \ I2}^*
    return NormalWord{a.I, concat(b.J, strip_prefix(b.I, a.J)), false};
  }
  return NormalWord::make_zero();
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational omega(const NormalWord& w, int N) {
  if (w.zero) return Rational(0);
  if (w.I != w.J) return Rational(0);
  long long den = 1;
  for (std::size_t k = 0; k < w.I.size(); ++k) {
    if (den > (1LL << 60) / N) throw DepthOverflow("omega denominator overflow");
    den *= N;
  }
  return Rational(1, den);
}

bool FockLabel::operator<(const FockLabel& o) const {
  if (I != o.I) return I < o.I;
  return J < o.J;
}

Rational label_inner(const FockLabel& a, const FockLabel& b, int N) {
  // <S_I S_J^* Omega | S_K S_L^* Omega> = omega(s_J s_I^* s_K s_L^*)
  NormalWord left{a.J, a.I, false};
  NormalWord right{b.I, b.J, false};
  return omega(reduce(left, right), N);
}

FockVec FockVec::single(int N, FockLabel l, cplx c) {
  FockVec v(N);
  v.add_term(l, c);
  return v;
}

void FockVec::add_term(const FockLabel& l, cplx c) {
  auto it = terms_.find(l);
  if (it == terms_.end()) {
    if (std::abs(c) > tol::kPrune) terms_[l] = c;
    return;
  }
  it->second += c;
  if (std::abs(it->second) <= tol::kPrune) terms_.erase(it);
}

FockVec& FockVec::operator+=(const FockVec& rhs) {
  if (scale_ != rhs.scale_) throw BackendMismatch("fock scales differ");
  for (const auto& [l, c] : rhs.terms_) add_term(l, c);
  return *this;
}

FockVec& FockVec::operator-=(const FockVec& rhs) {
  if (scale_ != rhs.scale_) throw BackendMismatch("fock scales differ");
  for (const auto& [l, c] : rhs.terms_) add_term(l, -c);
  return *this;
}

FockVec& FockVec::operator*=(cplx s) {
  if (std::abs(s) <= tol::kPrune) {
    terms_.clear();
    return *this;
  }
  for (auto& [l, c] : terms_) c *= s;
  return *this;
}

cplx inner_product(const FockVec& f, const FockVec& g) {
  if (f.scale() != g.scale()) throw BackendMismatch("fock scales differ");
  cplx acc = 0.0;
  for (const auto& [la, ca] : f.terms())
    for (const auto& [lb, cb] : g.terms()) {
      Rational r = label_inner(la, lb, f.scale());
      if (!r.is_zero()) acc += std::conj(ca) * cb * r.to_double();
    }
  return acc;
}

double norm(const FockVec& f) {
  double v = inner_product(f, f).real();
  return v <= 0.0 ? 0.0 : std::sqrt(v);
}

std::vector<std::vector<double>> gram(const std::vector<FockLabel>& labels, int N) {
  std::size_t n = labels.size();
  std::vector<std::vector<double>> G(n, std::vector<double>(n, 0.0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      G[r][c] = label_inner(labels[r], labels[c], N).to_double();
  return G;
}

namespace {

void enumerate_words(int N, int len, const std::function<void(const MultiIndex&)>& fn) {
  MultiIndex cur(len, 0);
  if (len == 0) {
    fn(cur);
    return;
  }
  while (true) {
    fn(cur);
    int pos = len - 1;
    while (pos >= 0 && cur[pos] == N - 1) cur[pos--] = 0;
    if (pos < 0) break;
    ++cur[pos];
  }
}

long word_count(int N, int depth) {
  long total = 0, layer = 1;
  for (int k = 1; k <= depth; ++k) {
    layer *= N;
    total += layer;
    if (total > tol::kWordCap) throw DepthOverflow("word enumeration too deep");
  }
  return total;
}

}  // namespace

std::vector<ScaledLabel> coinvariant_basis(int N, int depth) {
  if (depth < 1) throw DomainError("coinvariant_basis depth must be >= 1");
  word_count(N, depth);
  std::vector<ScaledLabel> out;
  for (int k = 1; k <= depth; ++k) {
    enumerate_words(N, k, [&](const MultiIndex& I) {
      out.push_back({I, std::pow(static_cast<double>(N), 0.5 * k)});
    });
  }
  return out;
}

double compressed_norm(int N, int i, int depth) {
  if (depth < 1) throw DomainError("compressed_norm depth must be >= 1");
  std::vector<ScaledLabel> basis = coinvariant_basis(N, depth);
  std::size_t n = basis.size();
  // Entry (r, c) = scale_r scale_c <S_{I_r}^* Omega | s_i S_{I_c}^* Omega>,
  // evaluated exactly through omega before the float conversion.
  Eigen::MatrixXd M(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    NormalWord row_adj{basis[r].J, MultiIndex{}, false};  // s_{I_r}
    for (std::size_t c = 0; c < n; ++c) {
      NormalWord col = reduce(NormalWord::generator(i),
                              NormalWord{MultiIndex{}, basis[c].J, false});
      Rational v = omega(reduce(row_adj, col), N);
      M(r, c) = v.is_zero() ? 0.0 : basis[r].scale * basis[c].scale * v.to_double();
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  return n == 0 ? 0.0 : svd.singularValues()(0);
}

WanderingReport fock_wandering_check(int N, int depth, bool include_vacuum) {
  WanderingReport rep;
  std::vector<FockLabel> W;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) W.push_back({{i}, {j}});
  if (include_vacuum) W.push_back({{}, {}});
  for (int k = 1; k <= depth && rep.pass; ++k) {
    enumerate_words(N, k, [&](const MultiIndex& K) {
      if (!rep.pass) return;
      for (const FockLabel& x : W) {
        for (const FockLabel& y : W) {
          // <x | S_K y> = omega(adjoint(x) . (K y))
          NormalWord xs{x.J, x.I, false};
          NormalWord ky{concat(K, y.I), y.J, false};
          Rational v = omega(reduce(xs, ky), N);
          ++rep.checked_words;
          if (!v.is_zero()) {
            rep.pass = false;
            rep.max_overlap = v;
            return;
          }
        }
      }
    });
  }
  return rep;
}

}  // namespace cuntzlab
