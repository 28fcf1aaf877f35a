#include "knotrep/alexander.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "knotrep/arith.hpp"
#include "knotrep/errors.hpp"

namespace knotrep {

LaurentPoly fox_derivative(const Word& word, int generator) {
  LaurentPoly out;
  LaurentPoly::Exponent prefix = 0;
  for (int l : word) {
    if (l > 0) {
      if (l == generator) out += LaurentPoly::t(prefix);
      ++prefix;
    } else {
      if (-l == generator) out -= LaurentPoly::t(prefix - 1);
      --prefix;
    }
  }
  return out;
}

AlexanderModulePresentation alexander_module(const WirtingerPresentation& w) {
  return alexander_module(w, w.relators.empty() ? 0 : w.relators.size() - 1);
}

AlexanderModulePresentation alexander_module(const WirtingerPresentation& w, std::size_t deleted_relator) {
  AlexanderModulePresentation a;
  a.convention_tag = "t = conjugation by mu^-1; entries are Fox derivatives at t^-1; h_i = t * f_i";
  const int m = w.generator_count;
  for (int g = 1; g <= m; ++g)
    if (g != w.meridian) a.generator_labels.push_back(g);
  const std::size_t cols = a.generator_labels.size();

  std::vector<std::size_t> kept;
  for (std::size_t r = 0; r < w.relators.size(); ++r)
    if (r != deleted_relator) kept.push_back(r);
  a.relations = LaurentMatrix(kept.size(), cols);
  for (std::size_t r = 0; r < kept.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      a.relations(r, c) = fox_derivative(w.relators[kept[r]], a.generator_labels[c]).inverted_variable();
    }
  }

  a.generator_classes.assign(static_cast<std::size_t>(m), std::vector<LaurentPoly>(cols));
  for (std::size_t c = 0; c < cols; ++c) {
    a.generator_classes[static_cast<std::size_t>(a.generator_labels[c] - 1)][c] = LaurentPoly::t(1);
  }
  return a;
}

LaurentPoly determinant(const LaurentMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly(1);
  LaurentMatrix a = m;
  LaurentPoly prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return {};
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        auto q = v.divide_exact(prev);
        if (!q) throw InvariantViolation("Bareiss step was not exact");
        a(i, j) = std::move(*q);
      }
      a(i, k) = LaurentPoly{};
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

LaurentPoly alexander_polynomial(const AlexanderModulePresentation& a) {
  if (a.relations.rows() != a.relations.cols()) {
    throw std::invalid_argument("alexander_polynomial: presentation is not square");
  }
  LaurentPoly d = determinant(a.relations);
  if (d.is_zero()) throw ZeroDeterminant("presentation matrix has zero determinant");
  return d.normalized();
}

namespace {

using QMatrix = std::vector<std::vector<QPoly>>;

// Diagonal of the Smith form over Q[t], ascending in divisibility.
std::vector<QPoly> smith_diagonal_q(QMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<QPoly> diag;
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    while (true) {
      // Pivot of smallest degree.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j)
          if (!a[i][j].is_zero() && (pi == rows || a[i][j].degree() < a[pi][pj].degree())) pi = i, pj = j;
      if (pi == rows) {
        for (std::size_t r = k; r < std::min(rows, cols); ++r) diag.emplace_back();
        return diag;
      }
      std::swap(a[k], a[pi]);
      for (auto& row : a) std::swap(row[k], row[pj]);
      const QPoly p = a[k][k];
      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (a[i][k].is_zero()) continue;
        const QPoly q = a[i][k] / p;
        for (std::size_t j = k; j < cols; ++j) a[i][j] -= q * a[k][j];
        if (!a[i][k].is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (a[k][j].is_zero()) continue;
        const QPoly q = a[k][j] / p;
        for (std::size_t i = k; i < rows; ++i) a[i][j] -= q * a[i][k];
        if (!a[k][j].is_zero()) clean = false;
      }
      if (!clean) continue;
      bool repaired = false;
      for (std::size_t i = k + 1; i < rows && !repaired; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (!p.divides(a[i][j])) {
            for (std::size_t c = k; c < cols; ++c) a[k][c] += a[i][c];
            repaired = true;
            break;
          }
      if (!repaired) break;
    }
    diag.push_back(a[k][k].monic());
  }
  return diag;
}

}  // namespace

std::vector<QPoly> invariant_factors_Q(const AlexanderModulePresentation& a) {
  const auto& m = a.relations;
  QMatrix q(m.rows(), std::vector<QPoly>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    // Multiplying a row by a power of t is a unit operation.
    LaurentPoly::Exponent low = 0;
    bool any = false;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).is_zero()) continue;
      low = any ? std::min(low, m(r, c).valuation()) : m(r, c).valuation();
      any = true;
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const LaurentPoly e = m(r, c).shifted(-low);
      std::vector<mpq_class> coeffs(static_cast<std::size_t>(e.is_zero() ? 0 : e.top() + 1));
      for (std::size_t i = 0; i < e.coeffs().size(); ++i) coeffs[static_cast<std::size_t>(e.valuation()) + i] = e.coeffs()[i];
      q[r][c] = QPoly(std::move(coeffs));
    }
  }
  std::vector<QPoly> diag = smith_diagonal_q(std::move(q));
  // Zero diagonal entries (free summands) only arise when there are fewer
  // relations than generators.
  for (std::size_t k = m.rows(); k < m.cols(); ++k) diag.emplace_back();
  std::vector<QPoly> out;
  for (auto it = diag.rbegin(); it != diag.rend(); ++it) {
    if (it->is_zero()) {
      out.push_back(*it);
      continue;
    }
    QPoly f = it->without_t_factors().monic();
    if (f.degree() >= 1) out.push_back(std::move(f));
  }
  // Zeros are divisible by everything, so they lead.
  std::stable_partition(out.begin(), out.end(), [](const QPoly& p) { return p.is_zero(); });
  return out;
}

CyclotomicProfile cyclotomic_root_profile(const LaurentPoly& delta) {
  if (delta.is_zero()) throw std::invalid_argument("cyclotomic_root_profile: zero polynomial");
  CyclotomicProfile out;
  const auto deg = static_cast<int>(delta.span());
  if (deg == 0) return out;
  const LaurentPoly base = delta.shifted(-delta.valuation());
  // phi(d) >= sqrt(d / 2), so phi(d) <= deg forces d <= 2 deg^2.
  const int bound = 2 * deg * deg + 2;
  for (int d = 1; d <= bound; ++d) {
    if (euler_phi(d) > deg) continue;
    if (base.divide_exact(cyclotomic(d))) out.divisors.push_back(d);
  }
  if (!out.divisors.empty()) {
    int m = 1;
    for (int d : out.divisors) m = static_cast<int>(lcm64(m, d));
    out.m = m;
  }
  return out;
}

}  // namespace knotrep
