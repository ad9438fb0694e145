#include "dsrc/source_riemann.hpp"

#include <algorithm>
#include <cmath>

#include "dsrc/errors.hpp"
#include "dsrc/roots.hpp"
#include "dsrc/waves.hpp"

namespace dsrc {
namespace {

constexpr CurveOptions kUnchecked{false, false};

double target_mach(const SourceCoefficients& coeffs, double gamma) {
  return coeffs.sign() > 0 ? critical_machs(coeffs, gamma).m1_star : 1.0;
}

// Closed-form root of f_u^{1-S}(U0, p) = 0 for u0 > 0.
double stagnation_pressure(const GasState& s) {
  const double g = s.gamma();
  const double c = s.u() * s.u() * s.rho();
  const double x = 0.25 * (c * (g + 1.0) +
                           std::sqrt(c * c * (g + 1.0) * (g + 1.0) +
                                     16.0 * c * g * s.p()));
  return s.p() + x;
}

// Point on the 1-wave curve of `left` with the given Mach number.
GasState state_at_mach(const GasState& left, double mach) {
  if (mach >= left.mach()) {
    return rarefaction_state_by_mach(WaveFamily::One, left.mach(), left, mach);
  }
  return wave_state(WaveFamily::One, left,
                    pressure_for_1wave_mach(left, mach));
}

bool type2_admissible(double mach, const SourceCoefficients& coeffs,
                      double gamma) {
  switch (coeffs.sign()) {
    case 1:
      return mach >= critical_machs(coeffs, gamma).m2_star;
    case 0:
      return mach >= 1.0;
    default:
      return mach >= 1.0 && mach < critical_machs(coeffs, gamma).m3_2star;
  }
}

bool is_type2(const GasState& left, const GasState& right,
              const SourceCoefficients& coeffs) {
  const double g = left.gamma();
  if (!type2_admissible(left.mach(), coeffs, g)) return false;
  GasState plus = left;
  try {
    plus = forward_curve(left, coeffs, Branch::Supersonic);
  } catch (const NotSolvable&) {
    return false;
  }
  double p = 0.0;
  try {
    p = solve_classical(plus, right).p_star;
  } catch (const VacuumFormation&) {
    p = 0.0;
  }
  const double pp = plus.p();
  if (p < pp) return true;
  const double mp = plus.mach();
  return (g + 1.0) * p <= (2.0 * g * mp * mp - g + 1.0) * pp;
}

double solve_type1_pressure(const GasState& left, const GasState& right,
                            const SourceCoefficients& coeffs,
                            const SolveOptions& opts) {
  const Type1Bracket br = type1_bracket(left, coeffs);
  auto t = [&](double p) { return t_function(p, left, right, coeffs); };
  const double pl = left.p();
  double lo = br.p1;
  double hi = br.p2;
  if (br.p2 < pl && pl < br.p1) {
    const double t_l = t(pl);
    if (t_l * t(br.p1) <= 0.0) {
      lo = pl;
      hi = br.p1;
    } else if (t_l * t(br.p2) <= 0.0) {
      lo = br.p2;
      hi = pl;
    }
  }
  return bisect(t, lo, hi, {opts.root_tol, opts.max_iter});
}

SolverOutput solve_positive(const GasState& left, const GasState& right,
                            const SourceCoefficients& coeffs,
                            const SolveOptions& opts) {
  const Structure s = predict_structure(left, right, coeffs);
  switch (s) {
    case Structure::Type1: {
      const double p = solve_type1_pressure(left, right, coeffs, opts);
      const GasState minus = wave_state(WaveFamily::One, left, p);
      return {minus, forward_curve(minus, coeffs, Branch::Subsonic), s};
    }
    case Structure::Type2:
      return {left, forward_curve(left, coeffs, Branch::Supersonic), s};
    case Structure::Type3: {
      const GasState minus =
          state_at_mach(left, critical_machs(coeffs, left.gamma()).m1_star);
      return {minus, forward_curve(minus, coeffs, Branch::Subsonic), s};
    }
    case Structure::Type5: {
      const GasState minus = state_at_mach(left, 1.0);
      try {
        return {minus, forward_curve(minus, coeffs, Branch::Supersonic), s};
      } catch (const NotSolvable&) {
        // k <= -1/gamma^2: the supersonic branch does not exist at M- = 1.
        return {minus, forward_curve(minus, coeffs, Branch::Subsonic), s};
      }
    }
    case Structure::Type7: {
      const GasState minus = state_at_mach(left, 1.0);
      return {minus, forward_curve(minus, coeffs, Branch::Subsonic), s};
    }
    default:
      throw Error("approximate_solve: unexpected predicted structure");
  }
}

}  // namespace

std::string_view to_string(Structure s) {
  switch (s) {
    case Structure::Type1: return "Type1";
    case Structure::Type2: return "Type2";
    case Structure::Type3: return "Type3";
    case Structure::Type4: return "Type4";
    case Structure::Type5: return "Type5";
    case Structure::Type6: return "Type6";
    case Structure::Type7: return "Type7";
    case Structure::Classical: return "Classical";
  }
  return "?";
}

bool permitted(Structure s, int sign_k) {
  switch (s) {
    case Structure::Type1:
    case Structure::Type2:
    case Structure::Classical:
      return true;
    case Structure::Type3:
    case Structure::Type4:
      return sign_k > 0;
    case Structure::Type5:
    case Structure::Type6:
      return sign_k < 0;
    case Structure::Type7:
      return sign_k == 0;
  }
  return false;
}

double t_function(double p, const GasState& left, const GasState& right,
                  const SourceCoefficients& coeffs) {
  const GasState minus = wave_state(WaveFamily::One, left, p);
  const StationaryRatios r = forward_ratios(minus.mach(), coeffs,
                                            left.gamma(), Branch::Subsonic,
                                            kUnchecked);
  const double u_plus = minus.u() * r.velocity;
  return wave_state(WaveFamily::Three, right, p * r.pressure).u() - u_plus;
}

Type1Bracket type1_bracket(const GasState& left,
                           const SourceCoefficients& coeffs) {
  if (!(left.u() > 0.0)) {
    throw Error("type1_bracket: requires positive left velocity");
  }
  return {stagnation_pressure(left),
          pressure_for_1wave_mach(left, target_mach(coeffs, left.gamma()))};
}

Structure predict_structure(const GasState& left, const GasState& right,
                            const SourceCoefficients& coeffs) {
  if (left.u() * right.u() <= 0.0) return Structure::Classical;
  if (left.u() < 0.0) {
    return predict_structure(mirror(right), mirror(left), coeffs);
  }
  if (is_type2(left, right, coeffs)) return Structure::Type2;

  const Type1Bracket br = type1_bracket(left, coeffs);
  const double t1 = t_function(br.p1, left, right, coeffs);
  const double t2 = t_function(br.p2, left, right, coeffs);
  if (t1 * t2 < 0.0) return Structure::Type1;

  switch (coeffs.sign()) {
    case 1: return Structure::Type3;
    case 0: return Structure::Type7;
    default: return Structure::Type5;
  }
}

SolverOutput approximate_solve(const GasState& left, const GasState& right,
                               const SourceCoefficients& coeffs,
                               SolveOptions opts) {
  if (left.u() * right.u() <= 0.0) {
    const GasState s0 = sample_classical(solve_classical(left, right), 0.0);
    return {s0, s0, Structure::Classical};
  }
  if (left.u() < 0.0) {
    const SolverOutput m =
        solve_positive(mirror(right), mirror(left), coeffs, opts);
    return {mirror(m.plus), mirror(m.minus), m.predicted};
  }
  return solve_positive(left, right, coeffs, opts);
}

SourceFan compose_reference_fan(const GasState& left, const GasState& right,
                                const SourceCoefficients& coeffs) {
  if (left.u() * right.u() <= 0.0) {
    const ClassicalFan fan = solve_classical(left, right);
    const GasState s0 = sample_classical(fan, 0.0);
    return {Structure::Classical, left, s0, s0, right, fan, fan, coeffs};
  }
  if (left.u() < 0.0) {
    const SourceFan m =
        compose_reference_fan(mirror(right), mirror(left), coeffs);
    return {m.structure,          left,
            mirror(m.plus),       mirror(m.minus),
            right,                mirror(m.right_fan),
            mirror(m.left_fan),   coeffs};
  }
  const SolverOutput out =
      solve_positive(left, right, coeffs, {1e-13, 200});
  return {out.predicted,
          left,
          out.minus,
          out.plus,
          right,
          solve_classical(left, out.minus),
          solve_classical(out.plus, right),
          coeffs};
}

GasState sample_source_fan(const SourceFan& fan, double xi,
                           OriginSide at_origin) {
  if (xi == 0.0) {
    return at_origin == OriginSide::Minus ? fan.minus : fan.plus;
  }
  if (xi < 0.0) return sample_classical(fan.left_fan, xi);
  return sample_classical(fan.right_fan, xi);
}

std::vector<FanWave> fan_waves(const SourceFan& fan, double rel_tol) {
  std::vector<FanWave> waves;
  auto collect = [&](const ClassicalFan& f, bool keep_left_of_origin) {
    auto keep = [&](const WaveSpan& s) {
      if (fan.structure == Structure::Classical) return true;
      return keep_left_of_origin ? s.lo <= 0.0 || s.hi <= 0.0
                                 : s.lo >= 0.0 || s.hi >= 0.0;
    };
    if (!f.left_trivial(rel_tol) && keep(f.left_wave)) {
      waves.push_back({f.left_wave, 1});
    }
    if (!f.contact_trivial(rel_tol) && keep({f.u_star, f.u_star})) {
      waves.push_back({{f.u_star, f.u_star}, 2});
    }
    if (!f.right_trivial(rel_tol) && keep(f.right_wave)) {
      waves.push_back({f.right_wave, 3});
    }
  };
  if (fan.structure == Structure::Classical) {
    collect(fan.left_fan, true);
  } else {
    collect(fan.left_fan, true);
    const Vector3 jump = to_conserved(fan.minus) - to_conserved(fan.plus);
    if (jump.norm() > rel_tol * to_conserved(fan.plus).norm()) {
      waves.push_back({{0.0, 0.0}, 0});
    }
    collect(fan.right_fan, false);
  }
  std::stable_sort(waves.begin(), waves.end(),
                   [](const FanWave& a, const FanWave& b) {
                     return a.span.lo < b.span.lo;
                   });
  return waves;
}

}  // namespace dsrc
