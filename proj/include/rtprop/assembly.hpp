#ifndef RTPROP_ASSEMBLY_HPP
#define RTPROP_ASSEMBLY_HPP

#include <functional>

#include "rtprop/mesh.hpp"
#include "rtprop/potential.hpp"
#include "rtprop/types.hpp"

namespace rtprop {

struct AssemblyOptions {
  double hbar = 1.0;
  double mass = 1.0;
  // Gauss points per element for potential terms; 0 means 2*element_order,
  // which integrates V*phi_i*phi_j exactly for V polynomial up to degree
  // 2*order - 1 alongside the basis product.
  int quadrature_points = 0;
};

/// Discrete pencil (H, S) on the interior DOFs: H Hermitian, S SPD.
struct OperatorPencil {
  SparseC H;
  SparseR S;
  double time_tag = 0.0;

  int n() const { return static_cast<int>(H.rows()); }
};

// Stiffness scaled by hbar^2/(2m), Dirichlet rows/columns eliminated. SPD.
SparseR assemble_kinetic(const Mesh1D& mesh, double hbar = 1.0, double mass = 1.0);

// FEM mass (overlap) matrix on interior DOFs. SPD.
SparseR assemble_mass(const Mesh1D& mesh);

// Mass matrix over all nodes, boundary rows kept. Row sums reproduce the
// nodal quadrature weights of the element family (partition of unity).
SparseR assemble_mass_full(const Mesh1D& mesh);

// Galerkin matrix of a spatial function V at fixed time, interior DOFs.
// Throws NumericalError naming the element if V is non-finite at a
// quadrature point.
SparseR assemble_potential(const Mesh1D& mesh, const std::function<double(double)>& v,
                           int quadrature_points = 0);

// Galerkin position operator, i.e. assemble_potential with V(x) = x.
SparseR assemble_position(const Mesh1D& mesh);

OperatorPencil hamiltonian_at(const Mesh1D& mesh, const PotentialModel& potential, double t,
                              const AssemblyOptions& opts = {});

// Trapezoid weights on the mesh nodes (all nodes, endpoints halved).
Eigen::VectorXd nodal_quadrature_weights(const Mesh1D& mesh);

}  // namespace rtprop

#endif
