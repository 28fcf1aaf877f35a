#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace knotrep {

/// Integer Laurent polynomial sum_i c_i t^(valuation + i).
///
/// Stored trimmed: the first and last coefficients are nonzero, and the zero
/// polynomial has no coefficients (its valuation is reported as 0).
class LaurentPoly {
 public:
  using Exponent = std::int64_t;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const mpz_class& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(Exponent valuation, std::vector<mpz_class> coeffs);

  static LaurentPoly monomial(const mpz_class& c, Exponent e);
  /// t^e
  static LaurentPoly t(Exponent e = 1) { return monomial(1, e); }
  /// From ascending integer coefficients of an ordinary polynomial.
  static LaurentPoly from_coeffs(std::initializer_list<long> ascending, Exponent valuation = 0);

  bool is_zero() const { return coeffs_.empty(); }
  Exponent valuation() const { return valuation_; }
  /// Highest exponent; equals valuation() for the zero polynomial.
  Exponent top() const { return valuation_ + static_cast<Exponent>(coeffs_.empty() ? 0 : coeffs_.size() - 1); }
  /// top() - valuation(), the degree of the polynomial part.
  Exponent span() const { return top() - valuation_; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coeff(Exponent e) const;
  const mpz_class& leading() const { return coeffs_.back(); }
  const mpz_class& trailing() const { return coeffs_.front(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.valuation_ == b.valuation_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiplication by t^k.
  LaurentPoly shifted(Exponent k) const;
  /// p(t^-1).
  LaurentPoly inverted_variable() const;
  /// Representative of the unit class {+-t^k p}: valuation 0 and positive
  /// leading coefficient.
  LaurentPoly normalized() const;
  /// Exact quotient in Z[t, t^-1], or nullopt when d does not divide *this.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;
  /// Remainder of the polynomial part (valuation >= 0 required) modulo a
  /// monic polynomial m with valuation 0.
  LaurentPoly mod_monic(const LaurentPoly& m) const;

  /// Value at an integer point; requires valuation() >= 0 unless x = +-1.
  mpz_class evaluate(const mpz_class& x) const;

  std::string to_string(char var = 't') const;

 private:
  void trim();

  Exponent valuation_ = 0;
  std::vector<mpz_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// The d-th cyclotomic polynomial.
LaurentPoly cyclotomic(int d);

/// Resultant of the polynomial parts (valuations stripped) of p and q, with
/// the orientation Res(t - a, t - b) = b - a, i.e. lc(q)^deg p * prod_{q(b)=0} p(b).
/// Computed as a fraction-free determinant of the Sylvester matrix.
mpz_class resultant(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace knotrep
