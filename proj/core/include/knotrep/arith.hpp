#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace knotrep {

/// Positive divisors of n in increasing order.
std::vector<int> divisors(int n);

/// Distinct prime factors of n in increasing order.
std::vector<int> prime_factors(int n);

int mobius(int n);
int euler_phi(int n);

std::int64_t lcm64(std::int64_t a, std::int64_t b);

/// Least non-negative residue of a mod m (m > 0).
std::int64_t mod_floor(std::int64_t a, std::int64_t m);
mpz_class mod_floor(const mpz_class& a, const mpz_class& m);

/// Throws std::overflow_error if v does not fit.
std::int64_t to_int64(const mpz_class& v);
bool fits_int64(const mpz_class& v);

}  // namespace knotrep
