#ifndef RTPROP_MESH_HPP
#define RTPROP_MESH_HPP

#include <vector>

#include "rtprop/types.hpp"

namespace rtprop {

/// Uniform 1D mesh on [0, L] with Lagrange P1 or P2 elements and
/// homogeneous Dirichlet conditions at both endpoints.
///
/// Nodes are stored for the whole domain (endpoints included); the
/// interior nodes carry the degrees of freedom. For order p there are
/// n_elements*p + 1 nodes and N = n_elements*p - 1 interior DOFs.
struct Mesh1D {
  double length = 0.0;
  int n_elements = 0;
  int element_order = 1;
  std::vector<double> node_coords;

  int n_nodes() const { return static_cast<int>(node_coords.size()); }
  int n_dofs() const { return n_nodes() - 2; }
  double element_width() const { return length / n_elements; }

  // Global node index of local node `a` (0..order) of element `e`.
  int element_node(int e, int a) const { return e * element_order + a; }

  // Interior DOF index of a global node, or -1 for a boundary node.
  int dof_of_node(int node) const {
    return (node == 0 || node == n_nodes() - 1) ? -1 : node - 1;
  }
};

Mesh1D build_mesh(double length, int n_elements, int order);

}  // namespace rtprop

#endif
