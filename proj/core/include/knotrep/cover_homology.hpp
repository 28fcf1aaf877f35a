#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "knotrep/alexander.hpp"
#include "knotrep/int_matrix.hpp"

namespace knotrep {

/// Element of a finitely generated abelian group in canonical (Smith)
/// coordinates: torsion coordinates first, then free ones.
using GroupElement = std::vector<mpz_class>;

/// Z^r + Z/d_1 + ... + Z/d_k with d_1 | ... | d_k, every d_i >= 2.
struct FinAbGroupStruct {
  std::vector<mpz_class> torsion;
  int free_rank = 0;
  /// Row j holds the canonical coordinates of original generator j.
  IntMatrix to_canonical;
  /// Row i holds an original-coordinate representative of canonical
  /// generator i.
  IntMatrix from_canonical;

  std::size_t coordinate_count() const { return torsion.size() + static_cast<std::size_t>(free_rank); }
  bool finite() const { return free_rank == 0; }
  /// nullopt when infinite.
  std::optional<mpz_class> order() const;
  mpz_class torsion_order() const;
  /// Reduces torsion coordinates into [0, d_i).
  GroupElement reduce(GroupElement x) const;
  bool is_zero(const GroupElement& x) const;
};

/// The deck transformation in canonical coordinates, acting on row vectors:
/// t(x) = x * matrix. Entries in torsion columns are reduced mod d_j.
struct TAutomorphism {
  IntMatrix matrix;
};

/// H_1 of the n-fold cyclic branched cover, i.e. H / (t^n - 1).
struct CoverHomology {
  int n = 1;
  FinAbGroupStruct group;
  TAutomorphism t_action;
  /// Canonical coordinates of the class h_i = [mu^-1 x_i] of every
  /// Wirtinger generator (or of each entry of generator_classes for a
  /// synthetic module).
  std::vector<GroupElement> generator_images;

  GroupElement apply_t(const GroupElement& x, int times = 1) const;
};

/// The n(m-1) square integer matrix obtained by replacing t with the n x n
/// cyclic shift. Rows index (relation, k) for t^k * relation, columns index
/// (generator, l) for t^l * generator; its cokernel is H / (t^n - 1).
IntMatrix present_mod_tn(const AlexanderModulePresentation& a, int n);

CoverHomology homology_Ln(const AlexanderModulePresentation& a, int n);

/// nullopt means infinite.
std::optional<mpz_class> order_Ln(const CoverHomology& c);

struct OrderCheck {
  std::optional<mpz_class> snf_order;
  /// |Res(nu_n, Delta)| with nu_n = (t^n - 1)/(t - 1).
  mpz_class resultant_value;
  bool agree = false;
};

OrderCheck verify_order_formula(const AlexanderModulePresentation& a, int n);
OrderCheck verify_order_formula(const CoverHomology& c, const LaurentPoly& delta);

/// deg gcd(delta, t^n - 1) over Q. Equals the free rank of H/(t^n - 1) when
/// H is cyclic over Q[t^{+-1}]; undercounts when several invariant factors
/// share a root of unity.
int betti_Ln(const LaurentPoly& delta, int n);
/// Exact free rank: sum of deg gcd(lambda_k, t^n - 1) over the invariant
/// factors over Q.
int betti_Ln(const std::vector<QPoly>& invariant_factors, int n);

/// Matrix of the natural surjection H/(t^n - 1) -> H/(t^l - 1) for l | n,
/// canonical coordinates to canonical coordinates (row-vector convention).
IntMatrix projection_matrix(const AlexanderModulePresentation& a, const CoverHomology& from,
                            const CoverHomology& to);

/// True when the images of the canonical generators generate the target.
bool is_surjective(const IntMatrix& projection, const FinAbGroupStruct& target);

/// Original coordinates of t^l * f_i in H/(t^n - 1): i * n + (l mod n).
GroupElement original_coordinates(const std::vector<LaurentPoly>& module_element, int n);

}  // namespace knotrep
