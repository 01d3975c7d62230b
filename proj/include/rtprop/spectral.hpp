#ifndef RTPROP_SPECTRAL_HPP
#define RTPROP_SPECTRAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rtprop/assembly.hpp"
#include "rtprop/types.hpp"

namespace rtprop {

/// M lowest (or interval-selected) eigenpairs of H p = d S p.
/// Eigenvalues ascending; eigenvectors S-orthonormal: P^H S P = I.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd vectors;
  SparseR overlap;
  bool empty_interval = false;

  int m() const { return static_cast<int>(eigenvalues.size()); }
  int n() const { return static_cast<int>(vectors.rows()); }
};

struct ContourConfig {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  int n_contour_points = 8;   // Gauss-Legendre nodes on the circle, [4, 32]
  int subspace_size = 0;      // M0, should be ~1.5x the expected count
  int max_refinement_loops = 25;
  double trace_tolerance = 1e-11;
  double residual_tolerance = 1e-10;
  std::uint64_t seed = 0x5eed;
};

struct FeastReport {
  int loops = 0;
  std::vector<double> trace_history;
  int m_found = 0;
  int effective_subspace = 0;  // after any rank shrink of the reduced overlap
  double max_residual = 0.0;
  bool empty_interval = false;
};

// Dense reference solver for the M lowest eigenpairs. Guarded to N <= 4096.
SpectralDecomposition dense_solve(const OperatorPencil& pencil, int m);

// Contour-filtered subspace iteration: Gauss-Legendre nodes z_k on a circle
// enclosing [lambda_min, lambda_max], one complex sparse solve
// (z_k S - H) X_k = S Y per node, Rayleigh-Ritz on the filtered block,
// repeated until the eigenvalue trace settles.
SpectralDecomposition feast_solve(const OperatorPencil& pencil, const ContourConfig& config,
                                  const Eigen::MatrixXcd* warm_start = nullptr,
                                  FeastReport* report = nullptr);

// P exp(-i theta D) P^H S block: one spectral exponential factor. theta
// carries any xi*omega_j/hbar scaling.
Eigen::MatrixXcd apply_expm(const SpectralDecomposition& decomp, double theta,
                            const Eigen::MatrixXcd& block);

// Max relative eigenpair residual ||H p - d S p|| / (|d| ||S p|| + eps).
double max_eigen_residual(const OperatorPencil& pencil, const SpectralDecomposition& decomp);

// Largest principal angle (radians) between the S-orthonormal column spans.
double subspace_angle(const SpectralDecomposition& a, const SpectralDecomposition& b);

}  // namespace rtprop

#endif
