#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotrep/knot_input.hpp"
#include "knotrep/laurent.hpp"
#include "knotrep/qpoly.hpp"

namespace knotrep {

/// Dense row-major matrix over Z[t, t^-1].
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  LaurentPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> data_;
};

/// Fraction-free determinant over Z[t, t^-1].
LaurentPoly determinant(const LaurentMatrix& m);

/// A finitely presented Z[t, t^-1]-module: the quotient of the free module on
/// the columns by the row space of `relations`.
///
/// t acts as the deck transformation g -> mu^-1 g mu. With Fox derivatives
/// computed in the variable s for which x_i -> s, this is s^-1, so the
/// entries are Fox derivatives with t substituted by t^-1.
///
/// `generator_classes[i]` expresses the class of mu^-1 x_{i+1} (Wirtinger
/// generators numbered from 1) in the column generators. The meridian's class
/// is zero.
struct AlexanderModulePresentation {
  LaurentMatrix relations;
  /// Wirtinger index of the generator behind each column.
  std::vector<int> generator_labels;
  std::vector<std::vector<LaurentPoly>> generator_classes;
  std::string convention_tag;

  std::size_t size() const { return relations.cols(); }
};

/// Left Fox derivative d(word)/d(x_generator), abelianized so every generator
/// maps to t: d(uv) = du + ab(u) dv and d(x^-1)/dx = -t^-1.
LaurentPoly fox_derivative(const Word& word, int generator);

/// Fox Jacobian with the meridian column and one relator row removed. The
/// default removes the last relator; `deleted_relator` picks another.
AlexanderModulePresentation alexander_module(const WirtingerPresentation& w);
AlexanderModulePresentation alexander_module(const WirtingerPresentation& w, std::size_t deleted_relator);

/// Determinant normalized to valuation 0 with positive leading coefficient.
/// Throws ZeroDeterminant for a singular presentation.
LaurentPoly alexander_polynomial(const AlexanderModulePresentation& a);

/// Nontrivial invariant factors over Q[t, t^-1], monic with nonzero constant
/// term, ordered so the first is divisible by all the others.
std::vector<QPoly> invariant_factors_Q(const AlexanderModulePresentation& a);

struct CyclotomicProfile {
  /// All d with Phi_d dividing the polynomial, ascending.
  std::vector<int> divisors;
  /// lcm of `divisors`, or nullopt when there is no cyclotomic factor.
  std::optional<int> m;
};

CyclotomicProfile cyclotomic_root_profile(const LaurentPoly& delta);

}  // namespace knotrep
