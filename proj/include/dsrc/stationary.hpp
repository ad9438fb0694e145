#ifndef DSRC_STATIONARY_HPP
#define DSRC_STATIONARY_HPP

#include "dsrc/gas.hpp"

namespace dsrc {

enum class Branch { Subsonic, Supersonic };
enum class Side { Left, Right };

/// Mach numbers below this distance from 1 are treated as sonic.
inline constexpr double kSonicTolerance = 1e-9;

/// Critical Mach numbers bounding the admissible sets. Members that do not
/// apply to the sign of k are NaN; unbounded members are +infinity.
struct CriticalMachSet {
  double m1_star;   // k > 0
  double m2_star;   // k > 0
  double m3_star;   // k > 0
  double m1_2star;  // k < 0
  double m2_2star;  // k < 0
  double m3_2star;  // k < 0
};

CriticalMachSet critical_machs(const SourceCoefficients& coeffs, double gamma);

/// Interval of admissible Mach numbers (positive-flow convention).
struct MachInterval {
  double lo;
  bool lo_closed;
  double hi;
  bool hi_closed;

  bool contains(double mach, double slack = 0.0) const;
};

/// Gamma_- (Side::Left) or Gamma_+ (Side::Right) for a branch.
MachInterval admissible_set(Side side, Branch branch,
                            const SourceCoefficients& coeffs, double gamma);

bool admissible(double mach, Side side, Branch branch,
                const SourceCoefficients& coeffs, double gamma);

struct CurveOptions {
  /// Enforce Mach membership in the admissible set of the branch.
  bool check_admissible = true;
  /// Set the discriminant to zero when its radicand is negative instead of
  /// failing. Used by the corrected K-T flux.
  bool clamp_discriminant = false;
};

/// Mach number and ratios across a stationary wave with positive flow.
struct StationaryRatios {
  double mach;      // Mach on the far side
  double density;   // rho_far / rho_near
  double velocity;  // u_far / u_near
  double pressure;  // p_far / p_near
};

/// Ratios of U+ to U- as functions of M- >= 0 (M- = 0 is the u -> 0 limit).
/// Throws NotSolvable if the branch has no real solution.
StationaryRatios forward_ratios(double mach_minus,
                                const SourceCoefficients& coeffs, double gamma,
                                Branch branch, CurveOptions opts = {});

/// Ratios of U- to U+ as functions of M+.
StationaryRatios backward_ratios(double mach_plus,
                                 const SourceCoefficients& coeffs, double gamma,
                                 Branch branch, CurveOptions opts = {});

/// U+ connected to U- by the stationary wave on the given branch. Negative
/// flow is handled by reflection.
GasState forward_curve(const GasState& left, const SourceCoefficients& coeffs,
                       Branch branch, CurveOptions opts = {});

/// U- connected to U+ by the stationary wave on the given branch.
GasState backward_curve(const GasState& right,
                        const SourceCoefficients& coeffs, Branch branch,
                        CurveOptions opts = {});

struct StationaryPair {
  GasState left;
  GasState right;
  SourceCoefficients coeffs;
  Branch branch;
};

/// True when some lambda_k(left) * lambda_k(right) vanishes, i.e. one side
/// is sonic.
bool is_choked(const StationaryPair& pair);

bool is_sonic(double mach);

/// max_i |(1 + k_i) F_i(left) - F_i(right)| / max(1, |F_i(right)|).
double jump_residual(const GasState& left, const GasState& right,
                     const SourceCoefficients& coeffs);

}  // namespace dsrc

#endif  // DSRC_STATIONARY_HPP
