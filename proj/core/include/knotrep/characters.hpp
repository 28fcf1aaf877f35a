#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "knotrep/cover_homology.hpp"

namespace knotrep {

/// A homomorphism H/(t^n - 1) -> C*. On the torsion factor Z/d_i it sends
/// the canonical generator to exp(2 pi i e_i / d_i).
struct Character {
  int n = 1;
  /// One exponent per torsion factor, 0 <= e_i < d_i.
  std::vector<std::int64_t> exponents;
  /// Values exp(2 pi i q) on the free generators. Empty means trivial there.
  std::vector<mpq_class> free_exponents;

  /// Empty and all-zero free_exponents compare equal.
  friend bool operator==(const Character& a, const Character& b) {
    if (a.n != b.n || a.exponents != b.exponents) return false;
    const std::size_t k = std::max(a.free_exponents.size(), b.free_exponents.size());
    for (std::size_t i = 0; i < k; ++i) {
      const mpq_class x = i < a.free_exponents.size() ? a.free_exponents[i] : mpq_class(0);
      const mpq_class y = i < b.free_exponents.size() ? b.free_exponents[i] : mpq_class(0);
      if (x != y) return false;
    }
    return true;
  }
};

/// Exact character arithmetic over one cover. Values are kept as residues
/// k mod N with N the exponent of the torsion subgroup, meaning exp(2 pi i k/N).
///
/// Holds a copy of what it needs, so it stays valid after the CoverHomology
/// it was built from is gone.
class CharacterGroup {
 public:
  explicit CharacterGroup(const CoverHomology& c);

  int n() const { return n_; }
  const std::vector<std::int64_t>& torsion() const { return torsion_; }
  int free_rank() const { return free_rank_; }
  /// lcm of the torsion factors (1 for the trivial group).
  std::int64_t exponent_modulus() const { return modulus_; }
  /// Number of torsion characters, |Tor|.
  mpz_class size() const;

  Character trivial() const;
  bool belongs(const Character& chi) const;

  /// chi(x) as a residue mod exponent_modulus(); free parts are ignored.
  std::int64_t evaluate(const Character& chi, const GroupElement& x) const;
  /// chi(x) as a fraction in [0, 1), including free_exponents.
  mpq_class value(const Character& chi, const GroupElement& x) const;

  /// (t^k chi)(h) = chi(t^k h). When the group has free rank the translate
  /// may be nontrivial on the free generators; those values land in
  /// free_exponents (left empty when all are zero).
  Character t_act(const Character& chi, int times = 1) const;

  /// Whether chi vanishes on (t^l - 1) H/(t^n - 1), i.e. factors through
  /// H/(t^l - 1). l must divide n.
  bool factors_through(const Character& chi, int l) const;
  /// Minimal l | n that chi factors through.
  int order(const Character& chi) const;

  std::vector<Character> orbit(const Character& chi) const;
  /// Lexicographically least exponent tuple in the t-orbit.
  std::vector<std::int64_t> orbit_id(const Character& chi) const;

 private:
  std::int64_t apply_row(const Character& chi, const std::vector<std::int64_t>& row) const;
  bool kills(const Character& chi, std::size_t divisor_index) const;

  int n_ = 1;
  std::vector<std::int64_t> torsion_;
  int free_rank_ = 0;
  std::int64_t modulus_ = 1;
  // t-action restricted to torsion coordinates.
  std::vector<std::vector<std::int64_t>> t_matrix_;
  // For each l | n: rows of (T^l - I) restricted to torsion columns, one per
  // canonical generator (torsion and free).
  std::vector<std::pair<int, std::vector<std::vector<std::int64_t>>>> kernel_rows_;
  // Full-width rows of T and of (T^l - I), needed once free values appear.
  std::vector<GroupElement> t_full_;
  std::vector<std::vector<GroupElement>> kernel_full_;
};

/// Restartable stream of the torsion characters of a cover, in lexicographic
/// order of exponent tuples. When the group has free rank the stream covers
/// only characters trivial on the free generators and partial() is true.
class CharacterStream {
 public:
  explicit CharacterStream(const CoverHomology& c);

  bool partial() const { return partial_; }
  mpz_class size() const;
  std::optional<Character> next();
  void reset();

 private:
  int n_;
  std::vector<std::int64_t> torsion_;
  std::vector<std::int64_t> current_;
  bool partial_;
  bool done_ = false;
};

/// All torsion characters; throws std::length_error above `limit`.
std::vector<Character> enumerate_characters(const CoverHomology& c, std::size_t limit = 5'000'000);

Character t_act(const Character& chi, const CoverHomology& c);
int character_order(const Character& chi, const CoverHomology& c);

}  // namespace knotrep
