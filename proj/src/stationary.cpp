#include "dsrc/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dsrc/errors.hpp"

namespace dsrc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Radicands within this relative distance of zero are rounding noise at the
// critical Mach numbers.
constexpr double kRadicandNoise = 1e-14;

struct BranchSolution {
  double mach_far;
  double mach_ratio_sq;  // (M_far / M_near)^2
};

// Solves the stationary jump for the far-side Mach number. `factor` is
// (1 + k) going downstream and 1 / (1 + k) going upstream.
BranchSolution solve_branch(double mach_near, double factor, double gamma,
                            Branch branch, const CurveOptions& opts) {
  const double m2 = mach_near * mach_near;
  const double scale = gamma * m2 + 1.0;
  const double deficit =
      (gamma + 1.0) * m2 * ((gamma - 1.0) * m2 + 2.0) * factor;
  double radicand = scale * scale - deficit;
  if (radicand < 0.0) {
    if (opts.clamp_discriminant || radicand >= -kRadicandNoise * scale * scale) {
      radicand = 0.0;
    } else {
      throw NotSolvable("stationary wave: negative discriminant");
    }
  } else if (radicand <= kRadicandNoise * scale * scale) {
    radicand = 0.0;
  }
  const double disc = std::sqrt(radicand) / scale;

  if (branch == Branch::Subsonic) {
    // (1 - I) / (1 + g I) divided by M^2 without cancellation at small M.
    const double ratio = (gamma + 1.0) * ((gamma - 1.0) * m2 + 2.0) * factor /
                         (scale * scale * (1.0 + disc) * (1.0 + gamma * disc));
    return {mach_near * std::sqrt(ratio), ratio};
  }
  const double denom = 1.0 - gamma * disc;
  if (!(denom > 0.0) || !(mach_near > 0.0)) {
    throw NotSolvable("stationary wave: supersonic branch unbounded");
  }
  const double far2 = (1.0 + disc) / denom;
  return {std::sqrt(far2), far2 / m2};
}

const char* side_name(Side side) { return side == Side::Left ? "M-" : "M+"; }

void check_membership(double mach, Side side, Branch branch,
                      const SourceCoefficients& coeffs, double gamma) {
  if (!admissible_set(side, branch, coeffs, gamma)
           .contains(mach, kSonicTolerance)) {
    throw NotSolvable(std::string("stationary wave: ") + side_name(side) +
                      " outside the admissible set of the branch");
  }
}

}  // namespace

CriticalMachSet critical_machs(const SourceCoefficients& coeffs,
                               double gamma) {
  CriticalMachSet out{kNaN, kNaN, kNaN, kNaN, kNaN, kNaN};
  const double k = coeffs.k();
  const double g = gamma;
  if (coeffs.sign() > 0) {
    const double a = k * g + k + 1.0;
    const double s = (g + 1.0) * std::sqrt(k * (k + 1.0));
    const double d = k + 1.0 - k * g * g;
    // M1*^2 = (a - s) / d = 1 / (a + s) since a^2 - s^2 = d; the second form
    // stays finite at k = 1 / (g^2 - 1), where it equals (g - 1) / (2 g).
    out.m1_star = 1.0 / std::sqrt(a + s);
    if (k < 1.0 / (g * g - 1.0)) {
      out.m2_star = std::sqrt((a + s) / d);
      const double r = std::sqrt(1.0 - k * (g * g - 1.0));
      out.m3_star = std::sqrt((g + r) / (g - g * r));
    } else {
      out.m2_star = kInf;
      out.m3_star = kInf;
    }
  } else if (coeffs.sign() < 0) {
    const double sk = std::sqrt(-k);
    out.m1_2star = std::sqrt((1.0 - sk) / (1.0 + g * sk));
    if (k > -1.0 / (g * g)) {
      out.m2_2star = std::sqrt((1.0 + sk) / (1.0 - g * sk));
      const double a = g * std::sqrt(1.0 + k);
      const double b = std::sqrt(1.0 + k * g * g);
      out.m3_2star = std::sqrt((a + b) / (a - g * b));
    } else {
      out.m2_2star = kInf;
      out.m3_2star = 1.0;
    }
  }
  return out;
}

bool MachInterval::contains(double mach, double slack) const {
  const bool above = lo_closed ? mach >= lo - slack : mach > lo;
  const bool below = hi_closed ? mach <= hi + slack : mach < hi;
  return above && below;
}

MachInterval admissible_set(Side side, Branch branch,
                            const SourceCoefficients& coeffs, double gamma) {
  const CriticalMachSet c = critical_machs(coeffs, gamma);
  const bool left = side == Side::Left;
  const bool sub = branch == Branch::Subsonic;
  switch (coeffs.sign()) {
    case 1:
      if (sub) return left ? MachInterval{0, false, c.m1_star, true}
                           : MachInterval{0, false, 1, true};
      return left ? MachInterval{c.m2_star, true, kInf, false}
                  : MachInterval{1, true, c.m3_star, false};
    case 0:
      return sub ? MachInterval{0, false, 1, true}
                 : MachInterval{1, true, kInf, false};
    default:
      if (sub) return left ? MachInterval{0, false, 1, true}
                           : MachInterval{0, false, c.m1_2star, true};
      return left ? MachInterval{1, true, c.m3_2star, false}
                  : MachInterval{c.m2_2star, true, kInf, false};
  }
}

bool admissible(double mach, Side side, Branch branch,
                const SourceCoefficients& coeffs, double gamma) {
  return admissible_set(side, branch, coeffs, gamma).contains(mach);
}

StationaryRatios forward_ratios(double mach_minus,
                                const SourceCoefficients& coeffs, double gamma,
                                Branch branch, CurveOptions opts) {
  if (opts.check_admissible) {
    check_membership(mach_minus, Side::Left, branch, coeffs, gamma);
  }
  const double factor = 1.0 + coeffs.k();
  const BranchSolution sol =
      solve_branch(mach_minus, factor, gamma, branch, opts);
  const double m_minus2 = mach_minus * mach_minus;
  const double m_plus2 = sol.mach_far * sol.mach_far;
  const double q = sol.mach_ratio_sq;
  const double k1 = coeffs.k1();
  const double k2 = coeffs.k2();
  const double conv = (gamma * m_minus2 + 1.0) / (gamma * m_plus2 + 1.0);
  return {sol.mach_far,
          (1.0 + k1) * (1.0 + k1) / ((1.0 + k2) * q * conv),
          q * conv * (1.0 + k2) / (1.0 + k1),
          conv * (1.0 + k2)};
}

StationaryRatios backward_ratios(double mach_plus,
                                 const SourceCoefficients& coeffs,
                                 double gamma, Branch branch,
                                 CurveOptions opts) {
  if (opts.check_admissible) {
    check_membership(mach_plus, Side::Right, branch, coeffs, gamma);
  }
  const double factor = 1.0 / (1.0 + coeffs.k());
  const BranchSolution sol =
      solve_branch(mach_plus, factor, gamma, branch, opts);
  const double m_plus2 = mach_plus * mach_plus;
  const double m_minus2 = sol.mach_far * sol.mach_far;
  const double q = sol.mach_ratio_sq;  // (M- / M+)^2
  const double k1 = coeffs.k1();
  const double k2 = coeffs.k2();
  const double conv = (gamma * m_plus2 + 1.0) / (gamma * m_minus2 + 1.0);
  return {sol.mach_far,
          (1.0 + k2) / ((1.0 + k1) * (1.0 + k1) * q * conv),
          q * conv * (1.0 + k1) / (1.0 + k2),
          conv / (1.0 + k2)};
}

GasState forward_curve(const GasState& left, const SourceCoefficients& coeffs,
                       Branch branch, CurveOptions opts) {
  if (left.u() < 0.0) {
    return mirror(backward_curve(mirror(left), coeffs, branch, opts));
  }
  if (!(left.u() > 0.0)) {
    throw NotSolvable("stationary wave: zero velocity carries no source");
  }
  const StationaryRatios r =
      forward_ratios(left.mach(), coeffs, left.gamma(), branch, opts);
  return GasState(left.rho() * r.density, left.u() * r.velocity,
                  left.p() * r.pressure, left.gamma());
}

GasState backward_curve(const GasState& right,
                        const SourceCoefficients& coeffs, Branch branch,
                        CurveOptions opts) {
  if (right.u() < 0.0) {
    return mirror(forward_curve(mirror(right), coeffs, branch, opts));
  }
  if (!(right.u() > 0.0)) {
    throw NotSolvable("stationary wave: zero velocity carries no source");
  }
  const StationaryRatios r =
      backward_ratios(right.mach(), coeffs, right.gamma(), branch, opts);
  return GasState(right.rho() * r.density, right.u() * r.velocity,
                  right.p() * r.pressure, right.gamma());
}

bool is_sonic(double mach) {
  return std::abs(std::abs(mach) - 1.0) <= kSonicTolerance;
}

bool is_choked(const StationaryPair& pair) {
  return is_sonic(pair.left.mach()) || is_sonic(pair.right.mach());
}

double jump_residual(const GasState& left, const GasState& right,
                     const SourceCoefficients& coeffs) {
  const bool positive = left.u() > 0.0;
  const Vector3 upstream = physical_flux(positive ? left : right);
  const Vector3 downstream = physical_flux(positive ? right : left);
  const Vector3 scaled =
      (Vector3::Ones() + coeffs.diagonal()).cwiseProduct(upstream);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    worst = std::max(worst, std::abs(scaled[i] - downstream[i]) /
                                std::max(1.0, std::abs(downstream[i])));
  }
  return worst;
}

}  // namespace dsrc
