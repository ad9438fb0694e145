#ifndef DSRC_CLASSICAL_HPP
#define DSRC_CLASSICAL_HPP

#include "dsrc/gas.hpp"

namespace dsrc {

enum class WaveKind { Shock, Rarefaction };

/// Extent of a wave in the similarity coordinate x/t. For a shock
/// lo == hi; for a rarefaction [lo, hi] is the fan.
struct WaveSpan {
  double lo;
  double hi;
};

/// Exact self-similar solution of the homogeneous Euler Riemann problem.
struct ClassicalFan {
  GasState left;
  GasState right;
  double p_star;
  double u_star;
  double rho_star_left;
  double rho_star_right;
  WaveKind left_kind;
  WaveKind right_kind;
  WaveSpan left_wave;
  WaveSpan right_wave;

  GasState left_star() const;
  GasState right_star() const;
  /// A nonlinear wave whose pressure jump is below rel_tol * p is trivial.
  bool left_trivial(double rel_tol = 1e-12) const;
  bool right_trivial(double rel_tol = 1e-12) const;
  bool contact_trivial(double rel_tol = 1e-12) const;
};

/// Solves for (p*, u*) with bracketed Newton on the pressure function.
/// Throws VacuumFormation when the initial data generate vacuum.
ClassicalFan solve_classical(const GasState& left, const GasState& right);

/// State at x/t = xi. At a discontinuity the state to its right is returned.
GasState sample_classical(const ClassicalFan& fan, double xi);

/// The x -> -x, u -> -u image of a fan.
ClassicalFan mirror(const ClassicalFan& fan);

/// f_u^{1-W}(left, p) - f_u^{3-W}(right, p).
double pressure_function(const GasState& left, const GasState& right,
                         double p);

}  // namespace dsrc

#endif  // DSRC_CLASSICAL_HPP
