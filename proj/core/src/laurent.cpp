#include "knotrep/laurent.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "knotrep/int_matrix.hpp"

namespace knotrep {

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(mpz_class(constant)) {}

LaurentPoly::LaurentPoly(const mpz_class& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly::LaurentPoly(Exponent valuation, std::vector<mpz_class> coeffs)
    : valuation_(valuation), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, Exponent e) {
  return LaurentPoly(e, {c});
}

LaurentPoly LaurentPoly::from_coeffs(std::initializer_list<long> ascending, Exponent valuation) {
  std::vector<mpz_class> c;
  c.reserve(ascending.size());
  for (long v : ascending) c.emplace_back(v);
  return LaurentPoly(valuation, std::move(c));
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    valuation_ += static_cast<Exponent>(lead);
  }
  if (coeffs_.empty()) valuation_ = 0;
}

mpz_class LaurentPoly::coeff(Exponent e) const {
  if (e < valuation_ || e > top() || coeffs_.empty()) return 0;
  return coeffs_[static_cast<std::size_t>(e - valuation_)];
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const Exponent lo = std::min(valuation_, o.valuation_);
  const Exponent hi = std::max(top(), o.top());
  std::vector<mpz_class> c(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[static_cast<std::size_t>(valuation_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[static_cast<std::size_t>(o.valuation_ - lo) + i] += o.coeffs_[i];
  valuation_ = lo;
  coeffs_ = std::move(c);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly(a.valuation_ + b.valuation_, std::move(c));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  if (is_zero()) return {};
  LaurentPoly r = *this;
  r.valuation_ += k;
  return r;
}

LaurentPoly LaurentPoly::inverted_variable() const {
  if (is_zero()) return {};
  std::vector<mpz_class> c(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(-top(), std::move(c));
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return {};
  LaurentPoly r = shifted(-valuation_);
  if (r.leading() < 0) r = -r;
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
  if (is_zero()) return LaurentPoly{};
  if (span() < d.span()) return std::nullopt;
  std::vector<mpz_class> rem = coeffs_;
  const std::size_t dn = d.coeffs_.size();
  const std::size_t qn = rem.size() - dn + 1;
  std::vector<mpz_class> q(qn);
  for (std::size_t k = qn; k-- > 0;) {
    const mpz_class& top_coeff = rem[k + dn - 1];
    if (top_coeff == 0) continue;
    if (!mpz_divisible_p(top_coeff.get_mpz_t(), d.leading().get_mpz_t())) return std::nullopt;
    mpz_class f;
    mpz_divexact(f.get_mpz_t(), top_coeff.get_mpz_t(), d.leading().get_mpz_t());
    q[k] = f;
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= f * d.coeffs_[j];
  }
  for (const auto& r : rem) {
    if (r != 0) return std::nullopt;
  }
  return LaurentPoly(valuation_ - d.valuation_, std::move(q));
}

LaurentPoly LaurentPoly::mod_monic(const LaurentPoly& m) const {
  if (m.is_zero() || m.valuation() != 0 || m.leading() != 1) {
    throw std::invalid_argument("mod_monic: modulus must be monic with valuation 0");
  }
  if (is_zero()) return {};
  if (valuation_ < 0) throw std::invalid_argument("mod_monic: negative exponents");
  const Exponent deg_m = m.top();
  std::vector<mpz_class> c(static_cast<std::size_t>(top() + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[static_cast<std::size_t>(valuation_) + i] = coeffs_[i];
  for (Exponent k = static_cast<Exponent>(c.size()) - 1; k >= deg_m; --k) {
    const mpz_class f = c[static_cast<std::size_t>(k)];
    if (f == 0) continue;
    for (std::size_t j = 0; j < m.coeffs_.size(); ++j) {
      c[static_cast<std::size_t>(k - deg_m) + j] -= f * m.coeffs_[j];
    }
  }
  if (static_cast<Exponent>(c.size()) > deg_m) c.resize(static_cast<std::size_t>(deg_m));
  return LaurentPoly(0, std::move(c));
}

mpz_class LaurentPoly::evaluate(const mpz_class& x) const {
  if (is_zero()) return 0;
  const bool unit = (x == 1 || x == -1);
  if (valuation_ < 0 && !unit) throw std::domain_error("LaurentPoly::evaluate: negative powers at non-unit");
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  // acc = p(x) / x^valuation
  if (valuation_ >= 0) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(valuation_));
    return acc * p;
  }
  // x is a unit here, so x^v = x^-v.
  return ((-valuation_) % 2 != 0 && x == -1) ? mpz_class(-acc) : acc;
}

std::string LaurentPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    const Exponent e = valuation_ + static_cast<Exponent>(i);
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic: d must be positive");
  static std::mutex mu;
  static std::map<int, LaurentPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  LaurentPoly p = LaurentPoly::t(d) - LaurentPoly(1);
  for (int e = 1; e < d; ++e) {
    if (d % e == 0) p = *p.divide_exact(cyclotomic(e));
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(d, p);
  return p;
}

mpz_class resultant(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
  const auto deg_p = static_cast<std::size_t>(p.span());
  const auto deg_q = static_cast<std::size_t>(q.span());
  const std::size_t size = deg_p + deg_q;
  if (size == 0) return 1;
  // Rows for q first, then p; descending coefficients.
  IntMatrix s(size, size);
  for (std::size_t r = 0; r < deg_p; ++r) {
    for (std::size_t j = 0; j <= deg_q; ++j) s(r, r + j) = q.coeffs()[deg_q - j];
  }
  for (std::size_t r = 0; r < deg_q; ++r) {
    for (std::size_t j = 0; j <= deg_p; ++j) s(deg_p + r, r + j) = p.coeffs()[deg_p - j];
  }
  return determinant(s);
}

}  // namespace knotrep
