#ifndef DSRC_SOURCE_RIEMANN_HPP
#define DSRC_SOURCE_RIEMANN_HPP

#include <string_view>
#include <vector>

#include "dsrc/classical.hpp"
#include "dsrc/gas.hpp"
#include "dsrc/stationary.hpp"

namespace dsrc {

/// Structure of the Riemann solution with a stationary source wave.
/// Classical marks the sourceless case u_L * u_R <= 0.
enum class Structure {
  Type1,
  Type2,
  Type3,
  Type4,
  Type5,
  Type6,
  Type7,
  Classical
};

std::string_view to_string(Structure s);

/// Whether `s` can occur for the given sign of k (Classical always can).
bool permitted(Structure s, int sign_k);

/// Approximations of U(0-) and U(0+).
struct SolverOutput {
  GasState minus;
  GasState plus;
  Structure predicted;
};

/// Velocity mismatch across the Type1 structure as a function of the
/// pressure of U-. Requires u_L, u_R > 0.
double t_function(double p, const GasState& left, const GasState& right,
                  const SourceCoefficients& coeffs);

/// Pressures on the 1-wave curve of U_L where the Mach number is 0 (p1)
/// and M1* for k > 0 or 1 for k <= 0 (p2). Requires u_L > 0.
struct Type1Bracket {
  double p1;
  double p2;
};

Type1Bracket type1_bracket(const GasState& left,
                           const SourceCoefficients& coeffs);

/// Predicts the structure of the solution. Type4 and Type6 are never
/// returned; their data land on Type2/Type3 or Type1/Type5.
Structure predict_structure(const GasState& left, const GasState& right,
                            const SourceCoefficients& coeffs);

/// The default tolerance of 0 runs the dichotomy down to adjacent doubles.
struct SolveOptions {
  double root_tol = 0.0;
  int max_iter = 200;
};

/// Structure-based approximate Riemann solver. Exact on single stationary
/// waves.
SolverOutput approximate_solve(const GasState& left, const GasState& right,
                               const SourceCoefficients& coeffs,
                               SolveOptions opts = {});

/// Exact solution assembled from the predicted structure: a classical fan
/// left of the origin (U_L to U-), the stationary wave, and a classical fan
/// right of the origin (U+ to U_R).
struct SourceFan {
  Structure structure;
  GasState left;
  GasState minus;
  GasState plus;
  GasState right;
  ClassicalFan left_fan;
  ClassicalFan right_fan;
  SourceCoefficients coeffs;
};

SourceFan compose_reference_fan(const GasState& left, const GasState& right,
                                const SourceCoefficients& coeffs);

enum class OriginSide { Minus, Plus };

/// State at x/t = xi. At xi == 0 the side selects U- or U+.
GasState sample_source_fan(const SourceFan& fan, double xi,
                           OriginSide at_origin = OriginSide::Plus);

struct FanWave {
  WaveSpan span;
  int family;  // 1, 2, 3, or 0 for the stationary wave
};

/// Waves of nonzero strength, ordered by position.
std::vector<FanWave> fan_waves(const SourceFan& fan, double rel_tol = 1e-9);

}  // namespace dsrc

#endif  // DSRC_SOURCE_RIEMANN_HPP
