#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "knotrep/laurent.hpp"

namespace knotrep {

/// Dense polynomial over Q; coefficient i multiplies t^i. Trimmed, so the
/// zero polynomial has no coefficients and degree -1.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> ascending);
  QPoly(long constant);  // NOLINT(google-explicit-constructor)

  /// Polynomial part of p, i.e. t^-valuation * p.
  static QPoly from_laurent(const LaurentPoly& p);
  static QPoly monomial(const mpq_class& c, int e);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int e) const { return e >= 0 && e <= degree() ? c_[static_cast<std::size_t>(e)] : mpq_class(0); }
  const mpq_class& leading() const { return c_.back(); }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const mpq_class& s, QPoly p);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  /// (quotient, remainder) of Euclidean division by a nonzero divisor.
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
  QPoly operator%(const QPoly& d) const { return divmod(d).second; }
  QPoly operator/(const QPoly& d) const { return divmod(d).first; }
  bool divides(const QPoly& multiple) const { return (multiple % *this).is_zero(); }

  QPoly monic() const;
  QPoly derivative() const;
  /// Removes factors of t; these are units in Q[t, t^-1].
  QPoly without_t_factors() const;

  /// Rescaled to coprime integer coefficients with positive leading term.
  LaurentPoly primitive_integer() const;
  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(QPoly a, QPoly b);

/// Square-free decomposition (Yun): returns pairs (f_k, k) with the input
/// equal to lc * prod f_k^k, each f_k monic, square-free and pairwise coprime.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p);

}  // namespace knotrep
