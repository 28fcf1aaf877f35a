#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "knotrep/alexander.hpp"
#include "knotrep/knot_input.hpp"

namespace knotrep {

/// Floating-point representation of the knot group.
struct NumericRep {
  struct Block {
    std::complex<double> root;
    /// Size of the Jordan block; the block of the representation has
    /// dimension size + 1.
    int size = 0;
  };

  int dim = 0;
  /// One image per Wirtinger generator.
  std::vector<Eigen::MatrixXcd> images;
  std::vector<Block> blocks;
  /// Rotation x = exp(2 pi i theta) of the meridian.
  std::complex<double> x;
  double tolerance = 1e-9;
  /// Max-norm of alpha(r) - I over all relators r.
  double max_relator_residual = 0;
  /// Max-norm of alpha(longitude) - I.
  double longitude_residual = 0;
};

/// Direct sum over the elementary divisors (t - z)^r of the Alexander module
/// over C of the (r + 1)-dimensional representation
///   (1, 0) -> x * diag(1, J),   (0, p) -> [[1, phi(p)], [0, I]],
/// with J the Jordan block of z and phi a generic module map onto
/// C[t]/(t - z)^r. Throws ToleranceExceeded if root finding, the kernel
/// computation or the relator check misses the tolerance.
NumericRep build_faithful_reducible(const WirtingerPresentation& w, const AlexanderModulePresentation& a,
                                    double tolerance = 1e-9);

Eigen::MatrixXcd evaluate_word(const NumericRep& r, const Word& word);
double relator_residual(const NumericRep& r, const WirtingerPresentation& w);

}  // namespace knotrep
