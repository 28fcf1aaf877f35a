#pragma once

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "knotrep/alexander.hpp"
#include "knotrep/cover_homology.hpp"
#include "knotrep/qpoly.hpp"

namespace knotrep {

enum class Verdict {
  /// Finitely many classes, at least one.
  Finite,
  /// No irreducible metabelian representation of this degree.
  Empty,
  /// Infinitely many classes forming positive-dimensional families.
  PositiveDimensional,
  /// Enumeration was not feasible.
  InfiniteUnknown,
};

const char* to_string(Verdict v);

/// Lazily computed H/(t^l - 1) for one module, shared between threads.
class DivisorTower {
 public:
  explicit DivisorTower(AlexanderModulePresentation a) : module_(std::move(a)) {}

  const AlexanderModulePresentation& module() const { return module_; }
  std::shared_ptr<const CoverHomology> get(int n);

 private:
  AlexanderModulePresentation module_;
  std::shared_mutex mutex_;
  std::map<int, std::shared_ptr<const CoverHomology>> cache_;
};

struct DirectCount {
  Verdict verdict = Verdict::InfiniteUnknown;
  /// Number of conjugacy classes; set for finite H/(t^n - 1).
  std::optional<mpz_class> classes;
  /// Number of characters of order n.
  mpz_class order_n_characters;
  /// Sorted orbit identifiers, one per class.
  std::vector<std::vector<std::int64_t>> class_ids;
};

/// Orbit count of order-n characters. Delegates to infinite_case when
/// H/(t^n - 1) is infinite. Throws DivisibilityViolation if the t-action on
/// order-n characters is not free.
DirectCount count_direct(int n, DivisorTower& tower, std::size_t max_characters = 5'000'000);

/// (1/n) sum_{k | n} mu(k) |H/(t^{n/k} - 1)|. Throws InfiniteHomology if a
/// divisor cover is infinite and DivisibilityViolation if the sum is not
/// divisible by n.
mpz_class count_mobius(int n, const std::map<int, std::optional<mpz_class>>& orders);
mpz_class count_mobius(int n, DivisorTower& tower);

/// For infinite H/(t^n - 1): PositiveDimensional iff some character of the
/// torsion subgroup does not factor through the torsion of H/(t^l - 1) for
/// every proper l | n with the same first Betti number.
Verdict infinite_case(int n, DivisorTower& tower, std::size_t max_characters = 5'000'000);

struct CountReport {
  int n = 1;
  Verdict verdict = Verdict::InfiniteUnknown;
  std::optional<mpz_class> direct;
  std::optional<mpz_class> mobius;
  bool agree = false;
};

CountReport count_report(int n, DivisorTower& tower, std::size_t max_characters = 5'000'000);

struct NVerdict {
  int n = 0;
  Verdict verdict = Verdict::InfiniteUnknown;
  std::optional<mpz_class> count;
  int betti = 0;
};

struct ExistenceReport {
  /// Least m with every root-of-unity root of Delta an m-th root of unity.
  std::optional<int> m;
  std::vector<int> cyclotomic_divisors;
  /// Whether the largest invariant factor divides t^m - 1; unset without m.
  std::optional<bool> lambda1_divides_tm_minus_1;
  /// Every root of Delta is a root of unity.
  bool all_roots_cyclotomic = false;
  std::vector<NVerdict> verdicts;
  std::vector<std::string> notes;
};

/// Verdicts for 2 <= n <= n_max. Throws InvariantViolation if a structural
/// consequence of the cyclotomic profile fails.
ExistenceReport existence_report(const LaurentPoly& delta, const std::vector<QPoly>& invariant_factors,
                                 DivisorTower& tower, int n_max, std::size_t max_characters = 5'000'000);

}  // namespace knotrep
