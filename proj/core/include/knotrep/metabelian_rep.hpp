#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "knotrep/characters.hpp"
#include "knotrep/cover_homology.hpp"
#include "knotrep/knot_input.hpp"
#include "knotrep/monomial.hpp"

namespace knotrep {

enum class RepKind { SL, GL };

/// x_i -> T * diag(chi(h_i), chi(t h_i), ..., chi(t^{n-1} h_i)), with T the
/// companion matrix whose corner entry is z.
struct MetabelianRep {
  int n = 1;
  /// Common root order of every entry.
  std::int64_t root_order = 2;
  /// One image per Wirtinger generator, in generator order.
  std::vector<MonomialMatrix> images;
  Character chi;
  RepKind kind = RepKind::SL;
  /// z = exp(2 pi i * z_exponent), z_exponent in [0, 1).
  mpq_class z_exponent;
  /// Lexicographically least exponent tuple in the t-orbit of chi.
  std::vector<std::int64_t> class_id;
};

/// Throws OrderMismatch unless chi has order exactly n = c.n, and
/// RelationFailure if a relator does not evaluate to the identity.
MetabelianRep build_sl_rep(const WirtingerPresentation& w, const CoverHomology& c, const Character& chi);
/// z must be a root of unity, given by its exponent q (z = exp(2 pi i q)).
MetabelianRep build_gl_rep(const WirtingerPresentation& w, const CoverHomology& c, const Character& chi,
                           const mpq_class& z_exponent);

MonomialMatrix evaluate_word(const MetabelianRep& r, const Word& word);

struct VerificationReport {
  bool relators_ok = false;
  std::vector<std::size_t> failing_relators;
  /// Only checked for n >= 2.
  bool meridian_trace_zero = false;
  bool longitude_identity = false;
  /// Determinant exponents (mod root_order) of each generator image.
  std::vector<std::int64_t> determinant_exponents;
  /// det(alpha(g)) = (-1)^{(n+1) e(g)} z^{e(g)} on every generator.
  bool determinants_ok = false;
  /// alpha(mu)^n = z I.
  bool companion_power_ok = false;
  /// Multiplicative order of alpha(mu).
  std::int64_t meridian_order = 0;
  /// Every image times its conjugate transpose is the identity.
  bool unitary = false;

  bool all_pass() const {
    return relators_ok && meridian_trace_zero && longitude_identity && determinants_ok && companion_power_ok &&
           unitary;
  }
};

VerificationReport verify_rep(const MetabelianRep& r, const WirtingerPresentation& w);

/// Two reps built from characters of one cover are conjugate iff their
/// identifiers agree.
inline const std::vector<std::int64_t>& conjugacy_class_id(const MetabelianRep& r) { return r.class_id; }

/// Coefficients of an element of Z[zeta_M] in the power basis modulo the
/// M-th cyclotomic polynomial.
using CyclotomicInteger = std::vector<std::int64_t>;

/// Exact traces of alpha(w) for every word of length 1..word_length over
/// x_1^{+-1}, ..., x_m^{+-1}, ordered by length, then lexicographically with
/// letters ordered x_1, x_1^-1, x_2, ... Traces are written in Z[zeta_M]
/// with M = lcm(root_order, r.root_order); pass a common root_order to
/// compare reps with different root orders.
std::vector<CyclotomicInteger> trace_fingerprint(const MetabelianRep& r, int word_length = 3,
                                                 std::int64_t root_order = 1);

}  // namespace knotrep
