#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace knotrep {

/// Square matrix with exactly one nonzero entry per column, each a power of
/// zeta_N = exp(2 pi i / N). Column i holds zeta_N^exps[i] in row perm[i].
class MonomialMatrix {
 public:
  MonomialMatrix() = default;
  /// Identity of the given size.
  MonomialMatrix(int dim, std::int64_t root_order);
  /// Throws std::invalid_argument unless perm is a bijection of {0..dim-1}.
  MonomialMatrix(std::vector<int> perm, std::vector<std::int64_t> exps, std::int64_t root_order);

  static MonomialMatrix identity(int dim, std::int64_t root_order) { return {dim, root_order}; }
  /// e_i -> e_{i+1}, e_{n-1} -> zeta^corner_exp * e_0.
  static MonomialMatrix companion(int dim, std::int64_t corner_exp, std::int64_t root_order);
  static MonomialMatrix diagonal(std::vector<std::int64_t> exps, std::int64_t root_order);

  int dim() const { return static_cast<int>(perm_.size()); }
  std::int64_t root_order() const { return n_; }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<std::int64_t>& exps() const { return exps_; }

  /// Exponent of the entry at (row, col), or -1 when that entry is zero.
  std::int64_t entry_exponent(int row, int col) const;

  MonomialMatrix inverse() const;
  MonomialMatrix conjugate_transpose() const;
  MonomialMatrix power(long k) const;
  /// Same matrix over a multiple of the root order.
  MonomialMatrix rescaled(std::int64_t root_order) const;

  int permutation_sign() const;
  /// det = zeta_N^k; requires N even when the permutation is odd.
  std::int64_t det_exponent() const;
  /// Exponents zeta_N^e of the diagonal entries (fixed points of perm);
  /// the trace is their sum.
  std::vector<std::int64_t> trace_exponents() const;
  bool is_identity() const;
  /// True when the matrix is zeta_N^e times the identity.
  bool is_scalar(std::int64_t e) const;

  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

 private:
  std::vector<int> perm_;
  std::vector<std::int64_t> exps_;
  std::int64_t n_ = 1;
};

/// Throws DimensionMismatch on differing size or root order.
MonomialMatrix monomial_mul(const MonomialMatrix& a, const MonomialMatrix& b);
inline MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) { return monomial_mul(a, b); }

std::ostream& operator<<(std::ostream& os, const MonomialMatrix& m);

}  // namespace knotrep
