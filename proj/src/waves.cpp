#include "dsrc/waves.hpp"

#include <cmath>
#include <limits>

#include "dsrc/errors.hpp"
#include "dsrc/roots.hpp"

namespace dsrc {
namespace {

void require_nonlinear(WaveFamily family) {
  if (family == WaveFamily::Two) {
    throw Error("family Two is a contact; no shock or rarefaction curve");
  }
}

double sign_of(WaveFamily family) {
  return family == WaveFamily::One ? -1.0 : 1.0;
}

}  // namespace

ShockResult shock_state(WaveFamily family, const GasState& anchor, double p) {
  require_nonlinear(family);
  const double p0 = anchor.p();
  if (p < p0) {
    throw Error("shock_state: p below anchor pressure (rarefaction branch)");
  }
  const double g = anchor.gamma();
  const double rho0 = anchor.rho();
  const double rho =
      rho0 * ((g - 1.0) * p0 + (g + 1.0) * p) / ((g - 1.0) * p + (g + 1.0) * p0);
  const double du = std::sqrt(2.0) * (p - p0) /
                    std::sqrt(rho0 * ((g + 1.0) * p + (g - 1.0) * p0));
  const double u = anchor.u() + sign_of(family) * du;
  const GasState state(rho, u, p, g);
  return {state, u * std::sqrt(rho) / std::sqrt(g * p)};
}

GasState rarefaction_state_by_pressure(WaveFamily family,
                                       const GasState& anchor, double p) {
  require_nonlinear(family);
  const double p0 = anchor.p();
  if (p > p0) {
    throw Error("rarefaction_state_by_pressure: p above anchor pressure");
  }
  if (!(p > 0.0)) throw InvalidState("rarefaction to non-positive pressure");
  const double g = anchor.gamma();
  const double ratio = p / p0;
  const double rho = anchor.rho() * std::pow(ratio, 1.0 / g);
  const double du = 2.0 * anchor.sound_speed() / (g - 1.0) *
                    (std::pow(ratio, (g - 1.0) / (2.0 * g)) - 1.0);
  return GasState(rho, anchor.u() + sign_of(family) * du, p, g);
}

RarefactionRatios rarefaction_ratios(double anchor_mach, double mach,
                                     double gamma) {
  if (mach < anchor_mach) {
    throw Error("rarefaction_ratios: target Mach below anchor Mach");
  }
  const double a_ratio =
      ((gamma - 1.0) * anchor_mach + 2.0) / ((gamma - 1.0) * mach + 2.0);
  return {std::pow(a_ratio, 2.0 / (gamma - 1.0)),
          mach / anchor_mach * a_ratio,
          std::pow(a_ratio, 2.0 * gamma / (gamma - 1.0))};
}

GasState rarefaction_state_by_mach(WaveFamily family, double anchor_mach,
                                   const GasState& anchor, double mach) {
  require_nonlinear(family);
  const double g = anchor.gamma();
  const double a_ratio =
      ((g - 1.0) * anchor_mach + 2.0) / ((g - 1.0) * mach + 2.0);
  if (mach < anchor_mach) {
    throw Error("rarefaction_state_by_mach: target Mach below anchor Mach");
  }
  // u = M a works even when the anchor velocity is zero.
  const double a = anchor.sound_speed() * a_ratio;
  const double frame = family == WaveFamily::One ? 1.0 : -1.0;
  return GasState(anchor.rho() * std::pow(a_ratio, 2.0 / (g - 1.0)),
                  frame * mach * a,
                  anchor.p() * std::pow(a_ratio, 2.0 * g / (g - 1.0)), g);
}

GasState wave_state(WaveFamily family, const GasState& anchor, double p) {
  if (!(p > 0.0)) throw InvalidState("wave_state: pressure must be positive");
  if (p >= anchor.p()) return shock_state(family, anchor, p).state;
  return rarefaction_state_by_pressure(family, anchor, p);
}

double mach_along_1wave(const GasState& anchor, double p) {
  return wave_state(WaveFamily::One, anchor, p).mach();
}

double pressure_for_1wave_mach(const GasState& anchor, double target_mach) {
  const double m0 = anchor.mach();
  if (target_mach == m0) return anchor.p();
  if (target_mach > m0) {
    // Rarefaction side: closed form.
    return anchor.p() *
           rarefaction_ratios(m0, target_mach, anchor.gamma()).pressure;
  }
  // Shock side: f_M is bounded below as p -> infinity, so grow the bracket
  // until it crosses or give up.
  auto residual = [&](double log_p) {
    return mach_along_1wave(anchor, std::exp(log_p)) - target_mach;
  };
  const double lo = std::log(anchor.p());
  double hi = lo + 1.0;
  int grow = 0;
  while (residual(hi) > 0.0) {
    hi += 2.0;
    if (++grow > 200) {
      throw RootNotBracketed("pressure_for_1wave_mach: Mach unreachable");
    }
  }
  return std::exp(bisect(residual, lo, hi, {1e-15, 200}));
}

double shock_speed(WaveFamily family, const GasState& anchor, double p) {
  require_nonlinear(family);
  const double g = anchor.gamma();
  const double q = std::sqrt((g + 1.0) / (2.0 * g) * p / anchor.p() +
                             (g - 1.0) / (2.0 * g));
  return anchor.u() + sign_of(family) * anchor.sound_speed() * q;
}

}  // namespace dsrc
