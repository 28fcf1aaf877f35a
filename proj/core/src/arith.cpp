#include "knotrep/arith.hpp"

#include <numeric>
#include <stdexcept>

namespace knotrep {

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

int euler_phi(int n) {
  int result = n;
  for (int p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

mpz_class mod_floor(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool fits_int64(const mpz_class& v) {
  return mpz_fits_slong_p(v.get_mpz_t()) != 0;
}

std::int64_t to_int64(const mpz_class& v) {
  if (!fits_int64(v)) throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
  return static_cast<std::int64_t>(v.get_si());
}

}  // namespace knotrep
