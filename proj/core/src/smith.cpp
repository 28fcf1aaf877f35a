#include "knotrep/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace knotrep {

std::vector<mpz_class> SmithDecomposition::diagonal() const {
  std::vector<mpz_class> out;
  const std::size_t n = std::min(D.rows(), D.cols());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(D(i, i));
  return out;
}

namespace {

struct Work {
  IntMatrix A, U, V, Vinv;

  void swap_rows(std::size_t a, std::size_t b) {
    A.swap_rows(a, b);
    U.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    A.swap_cols(a, b);
    V.swap_cols(a, b);
    Vinv.swap_rows(a, b);
  }
  void negate_row(std::size_t r) {
    A.negate_row(r);
    U.negate_row(r);
  }
  // row[dst] += f * row[src]
  void add_row(std::size_t dst, std::size_t src, const mpz_class& f) {
    A.add_row_multiple(dst, src, f);
    U.add_row_multiple(dst, src, f);
  }
  // col[dst] += f * col[src]; the inverse transform acts on rows of Vinv.
  void add_col(std::size_t dst, std::size_t src, const mpz_class& f) {
    A.add_col_multiple(dst, src, f);
    V.add_col_multiple(dst, src, f);
    Vinv.add_row_multiple(src, dst, -f);
  }
};

// Quotient of a by p > 0 rounded to the nearest integer.
mpz_class nearest_quotient(const mpz_class& a, const mpz_class& p) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  if (2 * r > p) q += 1;
  return q;
}

std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& A, std::size_t k) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  mpz_class best_abs;
  for (std::size_t i = k; i < A.rows(); ++i) {
    for (std::size_t j = k; j < A.cols(); ++j) {
      const mpz_class& v = A(i, j);
      if (v == 0) continue;
      if (!best || mpz_cmpabs(v.get_mpz_t(), best_abs.get_mpz_t()) < 0) {
        best = {i, j};
        best_abs = abs(v);
      }
    }
  }
  return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& input) {
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  Work w{input, IntMatrix::identity(rows), IntMatrix::identity(cols), IntMatrix::identity(cols)};

  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    auto pivot = smallest_entry(w.A, k);
    if (!pivot) break;
    w.swap_rows(k, pivot->first);
    w.swap_cols(k, pivot->second);

    while (true) {
      if (w.A(k, k) < 0) w.negate_row(k);
      const mpz_class p = w.A(k, k);
      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (w.A(i, k) == 0) continue;
        w.add_row(i, k, -nearest_quotient(w.A(i, k), p));
        if (w.A(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (w.A(k, j) == 0) continue;
        w.add_col(j, k, -nearest_quotient(w.A(k, j), p));
        if (w.A(k, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot is left in row or column k.
        std::size_t bi = k, bj = k;
        for (std::size_t i = k + 1; i < rows; ++i)
          if (w.A(i, k) != 0 && mpz_cmpabs(w.A(i, k).get_mpz_t(), w.A(bi, bj).get_mpz_t()) < 0) bi = i, bj = k;
        for (std::size_t j = k + 1; j < cols; ++j)
          if (w.A(k, j) != 0 && mpz_cmpabs(w.A(k, j).get_mpz_t(), w.A(bi, bj).get_mpz_t()) < 0) bi = k, bj = j;
        w.swap_rows(k, bi);
        w.swap_cols(k, bj);
        continue;
      }
      // Divisibility repair: fold an offending row into row k.
      std::optional<std::size_t> offending;
      for (std::size_t i = k + 1; i < rows && !offending; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (!mpz_divisible_p(w.A(i, j).get_mpz_t(), p.get_mpz_t())) {
            offending = i;
            break;
          }
      if (!offending) break;
      w.add_row(k, *offending, 1);
    }
  }
  return SmithDecomposition{std::move(w.U), std::move(w.V), std::move(w.Vinv), std::move(w.A)};
}

}  // namespace knotrep
