#include "knotrep/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace knotrep {

QPoly::QPoly(std::vector<mpq_class> ascending) : c_(std::move(ascending)) { trim(); }

QPoly::QPoly(long constant) {
  if (constant != 0) c_.emplace_back(constant);
}

QPoly QPoly::from_laurent(const LaurentPoly& p) {
  std::vector<mpq_class> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return QPoly(std::move(c));
}

QPoly QPoly::monomial(const mpq_class& c, int e) {
  std::vector<mpq_class> v(static_cast<std::size_t>(e) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(c));
}

QPoly operator*(const mpq_class& s, QPoly p) {
  for (auto& v : p.c_) v *= s;
  p.trim();
  return p;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
  if (d.is_zero()) throw std::domain_error("QPoly: division by zero");
  if (degree() < d.degree()) return {QPoly{}, *this};
  std::vector<mpq_class> r = c_;
  std::vector<mpq_class> q(static_cast<std::size_t>(degree() - d.degree() + 1));
  const std::size_t dn = d.c_.size();
  for (std::size_t k = q.size(); k-- > 0;) {
    mpq_class f = r[k + dn - 1] / d.leading();
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < dn; ++j) r[k + j] -= f * d.c_[j];
  }
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  return mpq_class(1 / leading()) * *this;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return QPoly(std::move(d));
}

QPoly QPoly::without_t_factors() const {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  return QPoly(std::vector<mpq_class>(c_.begin() + static_cast<std::ptrdiff_t>(lead), c_.end()));
}

LaurentPoly QPoly::primitive_integer() const {
  if (is_zero()) return {};
  mpz_class den = 1;
  for (const auto& v : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(c_.size());
  mpz_class g = 0;
  for (const auto& v : c_) {
    mpq_class s = v * den;
    ints.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  for (auto& v : ints) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  LaurentPoly p(0, std::move(ints));
  return p.leading() < 0 ? -p : p;
}

std::string QPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const mpq_class& c = c_[i];
    if (c == 0) continue;
    mpq_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << var;
    if (i != 1) os << "^" << i;
  }
  return os.str();
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
  std::vector<std::pair<QPoly, int>> out;
  if (p.degree() < 1) return out;
  const QPoly f = p.monic();
  const QPoly fp = f.derivative();
  QPoly a = gcd(f, fp);
  QPoly b = f / a;
  QPoly c = fp / a;
  QPoly d = c - b.derivative();
  int k = 1;
  while (b.degree() >= 1) {
    QPoly g = gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, k);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    ++k;
  }
  return out;
}

}  // namespace knotrep
