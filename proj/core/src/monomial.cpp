#include "knotrep/monomial.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "knotrep/arith.hpp"
#include "knotrep/errors.hpp"

namespace knotrep {

MonomialMatrix::MonomialMatrix(int dim, std::int64_t root_order)
    : perm_(static_cast<std::size_t>(dim)), exps_(static_cast<std::size_t>(dim), 0), n_(root_order) {
  if (dim < 0 || root_order < 1) throw std::invalid_argument("MonomialMatrix: bad size or root order");
  for (int i = 0; i < dim; ++i) perm_[static_cast<std::size_t>(i)] = i;
}

MonomialMatrix::MonomialMatrix(std::vector<int> perm, std::vector<std::int64_t> exps, std::int64_t root_order)
    : perm_(std::move(perm)), exps_(std::move(exps)), n_(root_order) {
  if (n_ < 1) throw std::invalid_argument("MonomialMatrix: root order must be positive");
  if (perm_.size() != exps_.size()) throw std::invalid_argument("MonomialMatrix: perm and exps differ in length");
  std::vector<bool> seen(perm_.size(), false);
  for (int p : perm_) {
    if (p < 0 || static_cast<std::size_t>(p) >= perm_.size() || seen[static_cast<std::size_t>(p)]) {
      throw std::invalid_argument("MonomialMatrix: perm is not a bijection");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  for (auto& e : exps_) e = mod_floor(e, n_);
}

MonomialMatrix MonomialMatrix::companion(int dim, std::int64_t corner_exp, std::int64_t root_order) {
  std::vector<int> perm(static_cast<std::size_t>(dim));
  std::vector<std::int64_t> exps(static_cast<std::size_t>(dim), 0);
  for (int i = 0; i < dim; ++i) perm[static_cast<std::size_t>(i)] = (i + 1) % dim;
  if (dim > 0) exps.back() = corner_exp;
  return {std::move(perm), std::move(exps), root_order};
}

MonomialMatrix MonomialMatrix::diagonal(std::vector<std::int64_t> exps, std::int64_t root_order) {
  std::vector<int> perm(exps.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  return {std::move(perm), std::move(exps), root_order};
}

std::int64_t MonomialMatrix::entry_exponent(int row, int col) const {
  return perm_.at(static_cast<std::size_t>(col)) == row ? exps_[static_cast<std::size_t>(col)] : -1;
}

MonomialMatrix monomial_mul(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.dim() != b.dim() || a.root_order() != b.root_order()) {
    throw DimensionMismatch("monomial_mul: " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()) + " mod " +
                            std::to_string(a.root_order()) + " vs " + std::to_string(b.dim()) + "x" +
                            std::to_string(b.dim()) + " mod " + std::to_string(b.root_order()));
  }
  const auto d = static_cast<std::size_t>(a.dim());
  std::vector<int> perm(d);
  std::vector<std::int64_t> exps(d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto bi = static_cast<std::size_t>(b.perm()[i]);
    perm[i] = a.perm()[bi];
    exps[i] = a.exps()[bi] + b.exps()[i];
  }
  return {std::move(perm), std::move(exps), a.root_order()};
}

MonomialMatrix MonomialMatrix::inverse() const {
  std::vector<int> perm(perm_.size());
  std::vector<std::int64_t> exps(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    const auto p = static_cast<std::size_t>(perm_[i]);
    perm[p] = static_cast<int>(i);
    exps[p] = -exps_[i];
  }
  return {std::move(perm), std::move(exps), n_};
}

MonomialMatrix MonomialMatrix::conjugate_transpose() const {
  // Transposing moves (perm[i], i) to (i, perm[i]); conjugating negates the
  // exponent. For root-of-unity entries this coincides with the inverse, but
  // it is computed independently so a unitarity check means something.
  std::vector<int> perm(perm_.size());
  std::vector<std::int64_t> exps(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    const auto col = static_cast<std::size_t>(perm_[i]);
    perm[col] = static_cast<int>(i);
    exps[col] = n_ - exps_[i];
  }
  return {std::move(perm), std::move(exps), n_};
}

MonomialMatrix MonomialMatrix::power(long k) const {
  MonomialMatrix base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  MonomialMatrix acc(dim(), n_);
  while (e) {
    if (e & 1U) acc = acc * base;
    base = base * base;
    e >>= 1U;
  }
  return acc;
}

MonomialMatrix MonomialMatrix::rescaled(std::int64_t root_order) const {
  if (root_order % n_ != 0) throw std::invalid_argument("rescaled: new root order must be a multiple");
  std::vector<std::int64_t> exps = exps_;
  for (auto& e : exps) e *= root_order / n_;
  return {perm_, std::move(exps), root_order};
}

int MonomialMatrix::permutation_sign() const {
  std::vector<bool> seen(perm_.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm_[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::int64_t MonomialMatrix::det_exponent() const {
  std::int64_t s = 0;
  for (auto e : exps_) s = (s + e) % n_;
  if (permutation_sign() < 0) {
    if (n_ % 2 != 0) throw std::domain_error("det_exponent: odd permutation needs an even root order");
    s = (s + n_ / 2) % n_;
  }
  return s;
}

std::vector<std::int64_t> MonomialMatrix::trace_exponents() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (static_cast<std::size_t>(perm_[i]) == i) out.push_back(exps_[i]);
  return out;
}

bool MonomialMatrix::is_identity() const { return is_scalar(0); }

bool MonomialMatrix::is_scalar(std::int64_t e) const {
  e = mod_floor(e, n_);
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (static_cast<std::size_t>(perm_[i]) != i || exps_[i] != e) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const MonomialMatrix& m) {
  os << "[";
  for (int r = 0; r < m.dim(); ++r) {
    os << (r ? "; " : "");
    for (int c = 0; c < m.dim(); ++c) {
      const auto e = m.entry_exponent(r, c);
      os << (c ? " " : "");
      if (e < 0) os << "0";
      else os << "z" << m.root_order() << "^" << e;
    }
  }
  return os << "]";
}

}  // namespace knotrep
