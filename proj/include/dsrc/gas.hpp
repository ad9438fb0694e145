#ifndef DSRC_GAS_HPP
#define DSRC_GAS_HPP

#include <array>

#include "dsrc/types.hpp"

namespace dsrc {

inline constexpr double kDefaultGamma = 1.4;

/// One ideal-gas state. Primitive variables are stored; the conserved view
/// is computed on demand. Construction rejects vacuum and gamma <= 1.
class GasState {
 public:
  GasState(double rho, double u, double p, double gamma = kDefaultGamma);

  /// Throws InvalidState if the conserved vector has rho <= 0 or p <= 0.
  static GasState from_conserved(const Vector3& q, double gamma = kDefaultGamma);

  double rho() const { return rho_; }
  double u() const { return u_; }
  double p() const { return p_; }
  double gamma() const { return gamma_; }

  double sound_speed() const;
  /// Signed Mach number u/a.
  double mach() const;
  double internal_energy() const;  // e = p / ((gamma - 1) rho)
  double total_energy() const;     // E = p / (gamma - 1) + rho u^2 / 2

 private:
  double rho_;
  double u_;
  double p_;
  double gamma_;
};

/// Source coefficients of diag(k1, k2, k3) and the derived combination
/// k = (1+k1)(1+k3)/(1+k2)^2 - 1 that governs the stationary wave.
class SourceCoefficients {
 public:
  SourceCoefficients(double k1, double k2, double k3);

  double k1() const { return k_[0]; }
  double k2() const { return k_[1]; }
  double k3() const { return k_[2]; }
  double k() const { return combined_; }
  Vector3 diagonal() const { return {k_[0], k_[1], k_[2]}; }

  /// -1, 0 or +1. |k| below 1e-14 counts as zero.
  int sign() const;

  static double combine(double k1, double k2, double k3);

 private:
  std::array<double, 3> k_;
  double combined_;
};

Vector3 to_conserved(const GasState& s);
Vector3 physical_flux(const GasState& s);
/// (u - a, u, u + a).
Vector3 eigenvalues(const GasState& s);
/// The x -> -x, u -> -u reflection.
GasState mirror(const GasState& s);

/// Source at the origin given the traces on either side.
///
/// Positive flow through the origin gives diag(k) F(left). Negative flow is
/// defined as the mirror image of the positive case, -diag(k) F(right), so
/// the problem is reflection-covariant. Any other combination (including a
/// zero velocity on either side) gives no source.
Vector3 evaluate_source(const GasState& left, const GasState& right,
                        const SourceCoefficients& coeffs);

}  // namespace dsrc

#endif  // DSRC_GAS_HPP
