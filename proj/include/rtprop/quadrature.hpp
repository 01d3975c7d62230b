#ifndef RTPROP_QUADRATURE_HPP
#define RTPROP_QUADRATURE_HPP

#include <vector>

#include "rtprop/types.hpp"

namespace rtprop {

enum class QuadKind { Rectangular, GaussLegendre };

/// Reference quadrature on (-1, 1). Gauss-Legendre rules integrate
/// polynomials up to degree 2p-1 exactly; the rectangular variant places
/// p equispaced interior nodes with unit weights.
struct QuadratureRule {
  QuadKind kind = QuadKind::GaussLegendre;
  int p = 1;
  Eigen::VectorXd nodes;    // ascending in (-1, 1)
  Eigen::VectorXd weights;  // Gauss: sum = 2; rectangular: all 1
};

QuadratureRule gauss_legendre_rule(int p);
QuadratureRule rectangular_rule(int p);

/// Quadrature times for one step [t0, t0+delta] plus the phase scale xi:
/// Gauss maps t_j = (delta/2) x_j + t0 + delta/2 with xi = delta/2;
/// rectangular places t_j = t0 + j*delta/(p+1) with xi = delta/(p+1).
struct MappedNodes {
  std::vector<double> times;
  double xi = 0.0;
};

MappedNodes map_nodes(const QuadratureRule& rule, double t0, double delta);

}  // namespace rtprop

#endif
