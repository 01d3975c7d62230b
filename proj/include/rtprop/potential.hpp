#ifndef RTPROP_POTENTIAL_HPP
#define RTPROP_POTENTIAL_HPP

#include <optional>
#include <variant>
#include <vector>

#include "rtprop/types.hpp"

namespace rtprop {

class PotentialModel;

struct ZeroPotential {};

struct ConstantPotential {
  double value = 0.0;
};

struct HarmonicWell {
  double spring_k = 1.0;
  double center = 0.0;
};

struct SquareWell {
  double depth = 0.0;  // added inside [left, right], zero outside
  double left = 0.0;
  double right = 0.0;
};

/// v0 * ((2x - L)/L) * sin(omega * t): a spatially linear ramp driven
/// sinusoidally in time, i.e. a uniform oscillating field on [0, L].
struct SinusoidalDrive {
  double v0 = 0.0;
  double omega = 0.0;
  double length = 0.0;
};

/// Static potential sampled on a grid, piecewise-linear interpolation.
struct TabulatedPotential {
  std::vector<double> grid;
  std::vector<double> values;
};

struct CompositePotential {
  std::vector<PotentialModel> parts;
};

/// Central-difference step for numeric time derivatives of potentials.
struct TimeDerivativeProbe {
  double eta = 1e-5;
};

class PotentialModel {
 public:
  using Variant = std::variant<ZeroPotential, ConstantPotential, HarmonicWell, SquareWell,
                               SinusoidalDrive, TabulatedPotential, CompositePotential>;

  PotentialModel() : variant_(ZeroPotential{}) {}
  PotentialModel(Variant v);  // NOLINT(google-explicit-constructor)

  // Restrict the evaluable domain to [0, L]; eval() rejects x outside.
  PotentialModel& with_domain(double length);

  double eval(double x, double t) const;

  // Analytic time derivative where the variant supports one (all static
  // variants and the sinusoidal drive do); otherwise central difference.
  double eval_dt(double x, double t, const TimeDerivativeProbe& probe = {}) const;

  const Variant& variant() const { return variant_; }
  std::optional<double> domain_length() const { return domain_length_; }
  bool is_static() const;

 private:
  Variant variant_;
  std::optional<double> domain_length_;
};

// The pure central-difference route, kept separate so the analytic path
// can be checked against it.
double finite_difference_dt(const PotentialModel& model, double x, double t,
                            const TimeDerivativeProbe& probe = {});

}  // namespace rtprop

#endif
