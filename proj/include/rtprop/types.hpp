#ifndef RTPROP_TYPES_HPP
#define RTPROP_TYPES_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <complex>
#include <stdexcept>
#include <string>

namespace rtprop {

using cplx = std::complex<double>;
using SparseC = Eigen::SparseMatrix<cplx>;
using SparseR = Eigen::SparseMatrix<double>;

// Invalid input: bad configuration, violated precondition, malformed file.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A solver or numerical procedure failed beyond recovery.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// y = S * x for real sparse S and complex dense x, without forming a complex S.
inline Eigen::MatrixXcd apply_real_sparse(const SparseR& s, const Eigen::MatrixXcd& x) {
  Eigen::MatrixXcd out(x.rows(), x.cols());
  out.real() = s * x.real();
  out.imag() = s * x.imag();
  return out;
}

}  // namespace rtprop

#endif
