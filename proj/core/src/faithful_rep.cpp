#include "knotrep/faithful_rep.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "knotrep/errors.hpp"
#include "knotrep/qpoly.hpp"

namespace knotrep {

namespace {

using cd = std::complex<double>;
using Eigen::MatrixXcd;

cd eval(const QPoly& f, cd z) {
  cd acc = 0;
  for (int k = f.degree(); k >= 0; --k) acc = acc * z + f.coeff(k).get_d();
  return acc;
}

// Roots of a squarefree polynomial: companion eigenvalues, Newton-polished.
std::vector<cd> roots(const QPoly& f) {
  const QPoly g = f.monic();
  const int d = g.degree();
  MatrixXcd comp = MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -g.coeff(i).get_d();
  Eigen::ComplexEigenSolver<MatrixXcd> solver(comp, false);
  if (solver.info() != Eigen::Success) throw ToleranceExceeded("eigenvalue solver did not converge");
  const QPoly dg = g.derivative();
  std::vector<cd> out;
  for (int i = 0; i < d; ++i) {
    cd z = solver.eigenvalues()(i);
    for (int it = 0; it < 8; ++it) {
      const cd step = eval(g, z) / eval(dg, z);
      z -= step;
      if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(z))) break;
    }
    out.push_back(z);
  }
  return out;
}

MatrixXcd evaluate_at(const LaurentPoly& p, const MatrixXcd& j, const MatrixXcd& j_inv) {
  const auto r = j.rows();
  MatrixXcd acc = MatrixXcd::Zero(r, r);
  if (p.is_zero()) return acc;
  // Horner on the coefficient list, then the t^valuation factor.
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * j + it->get_d() * MatrixXcd::Identity(r, r);
  }
  const MatrixXcd& step = p.valuation() >= 0 ? j : j_inv;
  for (LaurentPoly::Exponent k = 0; k < std::abs(p.valuation()); ++k) acc = acc * step;
  return acc;
}

}  // namespace

NumericRep build_faithful_reducible(const WirtingerPresentation& w, const AlexanderModulePresentation& a,
                                    double tolerance) {
  NumericRep rep;
  rep.tolerance = tolerance;
  const double theta = (std::sqrt(5.0) - 1.0) / 2.0;
  rep.x = std::polar(1.0, 2.0 * std::numbers::pi * theta);

  std::vector<NumericRep::Block> blocks;
  for (const QPoly& lambda : invariant_factors_Q(a)) {
    if (lambda.is_zero()) throw ToleranceExceeded("module has a free summand; no finite-dimensional block");
    for (const auto& [f, mult] : squarefree_decomposition(lambda)) {
      if (f.degree() < 1) continue;
      for (cd z : roots(f)) {
        if (std::abs(eval(f.monic(), z)) > tolerance * 1e3 * std::max(1.0, std::pow(std::abs(z), f.degree()))) {
          throw ToleranceExceeded("root of " + f.to_string() + " not resolved");
        }
        blocks.push_back({z, mult});
      }
    }
  }

  const std::size_t cols = a.relations.cols();
  const std::size_t rows = a.relations.rows();
  std::mt19937_64 rng(0x6b6e6f74);
  std::normal_distribution<double> normal;

  // Per block and generator, the (r+1)x(r+1) image.
  std::vector<std::vector<MatrixXcd>> parts(static_cast<std::size_t>(w.generator_count));
  if (blocks.empty()) {
    for (int g = 0; g < w.generator_count; ++g) parts[static_cast<std::size_t>(g)].push_back(MatrixXcd::Constant(1, 1, rep.x));
  }
  for (const auto& b : blocks) {
    const int r = b.size;
    MatrixXcd j = b.root * MatrixXcd::Identity(r, r);
    for (int i = 0; i + 1 < r; ++i) j(i, i + 1) = 1;
    const MatrixXcd j_inv = j.inverse();

    // Unknowns (column i, coordinate p); equations (relation, coordinate q).
    MatrixXcd e = MatrixXcd::Zero(static_cast<Eigen::Index>(rows) * r, static_cast<Eigen::Index>(cols) * r);
    for (std::size_t rho = 0; rho < rows; ++rho)
      for (std::size_t i = 0; i < cols; ++i) {
        const MatrixXcd pj = evaluate_at(a.relations(rho, i), j, j_inv);
        for (int p = 0; p < r; ++p)
          for (int q = 0; q < r; ++q) e(static_cast<Eigen::Index>(rho) * r + q, static_cast<Eigen::Index>(i) * r + p) = pj(p, q);
      }
    Eigen::JacobiSVD<MatrixXcd> svd(e, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double scale = sv.size() ? std::max(1.0, sv(0)) : 1.0;
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv(rank) > 1e-8 * scale) ++rank;
    const Eigen::Index unknowns = e.cols();
    if (rank >= unknowns) throw ToleranceExceeded("no module map onto the Jordan block at " + std::to_string(b.root.real()));
    Eigen::VectorXcd u = Eigen::VectorXcd::Zero(unknowns);
    for (Eigen::Index k = rank; k < unknowns; ++k) u += cd(normal(rng), normal(rng)) * svd.matrixV().col(k);
    u /= u.norm();

    MatrixXcd big_x = MatrixXcd::Zero(r + 1, r + 1);
    big_x(0, 0) = 1;
    big_x.bottomRightCorner(r, r) = j;
    big_x *= rep.x;
    for (int g = 0; g < w.generator_count; ++g) {
      // phi(h_g) = sum_i v_i * class_i(J), a row vector.
      Eigen::RowVectorXcd phi = Eigen::RowVectorXcd::Zero(r);
      const auto& cls = a.generator_classes[static_cast<std::size_t>(g)];
      for (std::size_t i = 0; i < cols; ++i) {
        if (cls[i].is_zero()) continue;
        phi += u.segment(static_cast<Eigen::Index>(i) * r, r).transpose() * evaluate_at(cls[i], j, j_inv);
      }
      MatrixXcd unip = MatrixXcd::Identity(r + 1, r + 1);
      unip.block(0, 1, 1, r) = phi;
      parts[static_cast<std::size_t>(g)].push_back(big_x * unip);
    }
    rep.blocks.push_back(b);
  }

  for (const auto& gen_parts : parts) {
    Eigen::Index dim = 0;
    for (const auto& p : gen_parts) dim += p.rows();
    MatrixXcd m = MatrixXcd::Zero(dim, dim);
    Eigen::Index off = 0;
    for (const auto& p : gen_parts) {
      m.block(off, off, p.rows(), p.cols()) = p;
      off += p.rows();
    }
    rep.dim = static_cast<int>(dim);
    rep.images.push_back(std::move(m));
  }

  rep.max_relator_residual = relator_residual(rep, w);
  rep.longitude_residual =
      (evaluate_word(rep, w.longitude) - MatrixXcd::Identity(rep.dim, rep.dim)).cwiseAbs().maxCoeff();
  if (!(rep.max_relator_residual < tolerance)) {
    throw ToleranceExceeded("relator residual " + std::to_string(rep.max_relator_residual) + " exceeds tolerance");
  }
  return rep;
}

Eigen::MatrixXcd evaluate_word(const NumericRep& r, const Word& word) {
  MatrixXcd acc = MatrixXcd::Identity(r.dim, r.dim);
  for (int l : word) {
    const auto& m = r.images.at(static_cast<std::size_t>(std::abs(l) - 1));
    acc = l > 0 ? MatrixXcd(acc * m) : MatrixXcd(acc * m.inverse());
  }
  return acc;
}

double relator_residual(const NumericRep& r, const WirtingerPresentation& w) {
  double worst = 0;
  const MatrixXcd id = MatrixXcd::Identity(r.dim, r.dim);
  for (const auto& rel : w.relators) worst = std::max(worst, (evaluate_word(r, rel) - id).cwiseAbs().maxCoeff());
  return worst;
}

}  // namespace knotrep
