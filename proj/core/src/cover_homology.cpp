#include "knotrep/cover_homology.hpp"

#include <stdexcept>

#include "knotrep/arith.hpp"
#include "knotrep/smith.hpp"

namespace knotrep {

std::optional<mpz_class> FinAbGroupStruct::order() const {
  if (!finite()) return std::nullopt;
  return torsion_order();
}

mpz_class FinAbGroupStruct::torsion_order() const {
  mpz_class o = 1;
  for (const auto& d : torsion) o *= d;
  return o;
}

GroupElement FinAbGroupStruct::reduce(GroupElement x) const {
  for (std::size_t i = 0; i < torsion.size() && i < x.size(); ++i) x[i] = mod_floor(x[i], torsion[i]);
  return x;
}

bool FinAbGroupStruct::is_zero(const GroupElement& x) const {
  const GroupElement r = reduce(x);
  for (const auto& v : r)
    if (v != 0) return false;
  return true;
}

GroupElement CoverHomology::apply_t(const GroupElement& x, int times) const {
  const std::size_t k = group.coordinate_count();
  const int steps = ((times % n) + n) % n;
  GroupElement cur = x;
  for (int s = 0; s < steps; ++s) {
    GroupElement next(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (cur[i] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) next[j] += cur[i] * t_action.matrix(i, j);
    }
    cur = group.reduce(std::move(next));
  }
  return group.reduce(std::move(cur));
}

IntMatrix present_mod_tn(const AlexanderModulePresentation& a, int n) {
  if (n < 1) throw std::invalid_argument("present_mod_tn: n must be positive");
  const auto& rel = a.relations;
  const auto un = static_cast<std::size_t>(n);
  IntMatrix m(rel.rows() * un, rel.cols() * un);
  for (std::size_t r = 0; r < rel.rows(); ++r) {
    for (std::size_t i = 0; i < rel.cols(); ++i) {
      const LaurentPoly& p = rel(r, i);
      for (std::size_t c = 0; c < p.coeffs().size(); ++c) {
        const auto e = p.valuation() + static_cast<LaurentPoly::Exponent>(c);
        for (int k = 0; k < n; ++k) {
          const auto l = static_cast<std::size_t>(mod_floor(k + e, n));
          m(r * un + static_cast<std::size_t>(k), i * un + l) += p.coeffs()[c];
        }
      }
    }
  }
  return m;
}

GroupElement original_coordinates(const std::vector<LaurentPoly>& module_element, int n) {
  const auto un = static_cast<std::size_t>(n);
  GroupElement x(module_element.size() * un);
  for (std::size_t i = 0; i < module_element.size(); ++i) {
    const LaurentPoly& p = module_element[i];
    for (std::size_t c = 0; c < p.coeffs().size(); ++c) {
      const auto e = p.valuation() + static_cast<LaurentPoly::Exponent>(c);
      x[i * un + static_cast<std::size_t>(mod_floor(e, n))] += p.coeffs()[c];
    }
  }
  return x;
}

namespace {

GroupElement row_times(const GroupElement& x, const IntMatrix& m) {
  GroupElement out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += x[i] * m(i, j);
  }
  return out;
}

void reduce_columns(IntMatrix& m, const std::vector<mpz_class>& torsion) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t j = 0; j < torsion.size(); ++j) m(r, j) = mod_floor(m(r, j), torsion[j]);
}

}  // namespace

CoverHomology homology_Ln(const AlexanderModulePresentation& a, int n) {
  CoverHomology out;
  out.n = n;
  const IntMatrix m = present_mod_tn(a, n);
  const SmithDecomposition s = smith_normal_form(m);
  const std::size_t gens = m.cols();
  const std::vector<mpz_class> diag = s.diagonal();

  std::vector<std::size_t> torsion_idx, free_idx;
  for (std::size_t j = 0; j < gens; ++j) {
    const mpz_class d = j < diag.size() ? diag[j] : mpz_class(0);
    if (d == 0) {
      free_idx.push_back(j);
    } else if (d != 1) {
      torsion_idx.push_back(j);
      out.group.torsion.push_back(d);
    }
  }
  out.group.free_rank = static_cast<int>(free_idx.size());
  std::vector<std::size_t> kept = torsion_idx;
  kept.insert(kept.end(), free_idx.begin(), free_idx.end());

  out.group.to_canonical = s.V.select_cols(kept);
  reduce_columns(out.group.to_canonical, out.group.torsion);
  out.group.from_canonical = s.V_inverse.select_rows(kept);

  // t shifts t^l f_i to t^(l+1) f_i.
  const auto un = static_cast<std::size_t>(n);
  IntMatrix shifted(kept.size(), gens);
  for (std::size_t r = 0; r < kept.size(); ++r)
    for (std::size_t col = 0; col < gens; ++col) {
      const std::size_t i = col / un, l = col % un;
      shifted(r, i * un + (l + 1) % un) = out.group.from_canonical(r, col);
    }
  out.t_action.matrix = shifted * out.group.to_canonical;
  reduce_columns(out.t_action.matrix, out.group.torsion);

  for (const auto& cls : a.generator_classes) {
    out.generator_images.push_back(out.group.reduce(row_times(original_coordinates(cls, n), out.group.to_canonical)));
  }
  return out;
}

std::optional<mpz_class> order_Ln(const CoverHomology& c) { return c.group.order(); }

namespace {

LaurentPoly nu(int n) {
  std::vector<mpz_class> ones(static_cast<std::size_t>(n), 1);
  return LaurentPoly(0, std::move(ones));
}

}  // namespace

OrderCheck verify_order_formula(const CoverHomology& c, const LaurentPoly& delta) {
  OrderCheck out;
  out.snf_order = order_Ln(c);
  out.resultant_value = abs(resultant(nu(c.n), delta));
  if (out.resultant_value == 0) {
    out.agree = !out.snf_order.has_value();
  } else {
    out.agree = out.snf_order.has_value() && *out.snf_order == out.resultant_value;
  }
  return out;
}

OrderCheck verify_order_formula(const AlexanderModulePresentation& a, int n) {
  return verify_order_formula(homology_Ln(a, n), alexander_polynomial(a));
}

int betti_Ln(const LaurentPoly& delta, int n) {
  if (delta.is_zero()) throw std::invalid_argument("betti_Ln: zero polynomial");
  return gcd(QPoly::from_laurent(delta), QPoly::monomial(1, n) - QPoly(1)).degree();
}

int betti_Ln(const std::vector<QPoly>& invariant_factors, int n) {
  const QPoly tn = QPoly::monomial(1, n) - QPoly(1);
  int rank = 0;
  for (const auto& f : invariant_factors) rank += f.is_zero() ? n : gcd(f, tn).degree();
  return rank;
}

IntMatrix projection_matrix(const AlexanderModulePresentation& a, const CoverHomology& from, const CoverHomology& to) {
  if (from.n % to.n != 0) throw std::invalid_argument("projection_matrix: target degree must divide source degree");
  const std::size_t gens = a.relations.cols();
  const auto n = static_cast<std::size_t>(from.n);
  const auto l = static_cast<std::size_t>(to.n);
  const IntMatrix& src = from.group.from_canonical;
  IntMatrix folded(src.rows(), gens * l);
  for (std::size_t r = 0; r < src.rows(); ++r)
    for (std::size_t col = 0; col < gens * n; ++col) folded(r, (col / n) * l + (col % n) % l) += src(r, col);
  IntMatrix p = folded * to.group.to_canonical;
  reduce_columns(p, to.group.torsion);
  return p;
}

bool is_surjective(const IntMatrix& projection, const FinAbGroupStruct& target) {
  const std::size_t k = target.coordinate_count();
  if (k == 0) return true;
  IntMatrix stacked(projection.rows() + target.torsion.size(), k);
  for (std::size_t r = 0; r < projection.rows(); ++r)
    for (std::size_t c = 0; c < k; ++c) stacked(r, c) = projection(r, c);
  for (std::size_t i = 0; i < target.torsion.size(); ++i) stacked(projection.rows() + i, i) = target.torsion[i];
  const auto diag = smith_normal_form(stacked).diagonal();
  if (diag.size() < k) return false;
  for (const auto& d : diag)
    if (d != 1) return false;
  return true;
}

}  // namespace knotrep
