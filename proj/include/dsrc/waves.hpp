#ifndef DSRC_WAVES_HPP
#define DSRC_WAVES_HPP

#include "dsrc/gas.hpp"

namespace dsrc {

/// Characteristic field. Two is linearly degenerate (contact only); One and
/// Three carry shocks or rarefactions.
enum class WaveFamily { One, Two, Three };

struct ShockResult {
  GasState state;
  double mach;  // signed u/a of the resulting state
};

/// State reached across a family-One shock (anchor = left state) or a
/// family-Three shock (anchor = right state) at pressure p >= p_anchor.
ShockResult shock_state(WaveFamily family, const GasState& anchor, double p);

/// Isentropic state on the rarefaction curve at pressure p <= p_anchor.
GasState rarefaction_state_by_pressure(WaveFamily family,
                                       const GasState& anchor, double p);

struct RarefactionRatios {
  double density;
  double velocity;
  double pressure;
};

/// Mach-parametrised rarefaction ratios rho/rho0, u/u0, p/p0 for M >= M0.
RarefactionRatios rarefaction_ratios(double anchor_mach, double mach,
                                     double gamma);

/// Rarefaction state with Mach number `mach`. For family Three the Mach
/// numbers are measured in the mirrored frame (-u/a), which is what makes
/// the family-One ratios apply unchanged.
GasState rarefaction_state_by_mach(WaveFamily family, double anchor_mach,
                                   const GasState& anchor, double mach);

/// Combined wave curve: shock for p >= p_anchor, rarefaction otherwise.
GasState wave_state(WaveFamily family, const GasState& anchor, double p);

/// Mach number along the family-One wave curve. Strictly decreasing in p.
double mach_along_1wave(const GasState& anchor, double p);

/// Inverse of mach_along_1wave. Closed form on the rarefaction side,
/// bisection in log p on the shock side (1e-12 relative, 200 iterations).
double pressure_for_1wave_mach(const GasState& anchor, double target_mach);

/// Rankine-Hugoniot speed of the shock connecting `anchor` to
/// shock_state(family, anchor, p).
double shock_speed(WaveFamily family, const GasState& anchor, double p);

}  // namespace dsrc

#endif  // DSRC_WAVES_HPP
