#include <algorithm>
#include <cmath>

#include "dsrc/errors.hpp"
#include "dsrc/numerics.hpp"
#include "dsrc/source_riemann.hpp"
#include "dsrc/stationary.hpp"

namespace dsrc {
namespace {

// F(mirror(U)) = kFlip * F(U).
const Vector3 kFlip(-1.0, 1.0, -1.0);

double max_speed(const GasState& s) {
  return std::abs(s.u()) + s.sound_speed();
}

Branch regime(const GasState& s) {
  return std::abs(s.mach()) < 1.0 ? Branch::Subsonic : Branch::Supersonic;
}

Branch other(Branch b) {
  return b == Branch::Subsonic ? Branch::Supersonic : Branch::Subsonic;
}

template <typename Curve>
GasState through_curve(Curve&& curve, const GasState& s, bool corrections) {
  const Branch b = regime(s);
  if (!corrections) {
    try {
      return curve(s, b, CurveOptions{});
    } catch (const NotSolvable& e) {
      throw Unavailable(std::string("K-T flux unavailable: ") + e.what());
    }
  }
  const CurveOptions relaxed{false, true};
  try {
    return curve(s, b, relaxed);
  } catch (const NotSolvable&) {
    return curve(s, other(b), relaxed);
  }
}

FluxPair kt_positive(const GasState& l, const GasState& r,
                     const SourceCoefficients& coeffs, bool corrections) {
  auto fwd = [&](const GasState& s, Branch b, CurveOptions o) {
    return forward_curve(s, coeffs, b, o);
  };
  auto bwd = [&](const GasState& s, Branch b, CurveOptions o) {
    return backward_curve(s, coeffs, b, o);
  };
  const GasState l_star = through_curve(bwd, r, corrections);
  const GasState r_star = through_curve(fwd, l, corrections);
  return {llf_flux(l, l_star), llf_flux(r_star, r)};
}

}  // namespace

Vector3 llf_flux(const GasState& left, const GasState& right) {
  const double alpha = std::max(max_speed(left), max_speed(right));
  return 0.5 * (physical_flux(left) + physical_flux(right) -
                alpha * (to_conserved(right) - to_conserved(left)));
}

FluxPair kt_flux(const GasState& left_trace, const GasState& right_trace,
                 const SourceCoefficients& coeffs, bool corrections) {
  if (left_trace.u() * right_trace.u() <= 0.0) {
    const Vector3 f = llf_flux(left_trace, right_trace);
    return {f, f};
  }
  if (left_trace.u() < 0.0) {
    const FluxPair m = kt_positive(mirror(right_trace), mirror(left_trace),
                                   coeffs, corrections);
    return {kFlip.cwiseProduct(m.plus), kFlip.cwiseProduct(m.minus)};
  }
  return kt_positive(left_trace, right_trace, coeffs, corrections);
}

FluxPair solver_flux(const GasState& left_trace, const GasState& right_trace,
                     const SourceCoefficients& coeffs) {
  const SolverOutput out = approximate_solve(left_trace, right_trace, coeffs);
  return {physical_flux(out.minus), physical_flux(out.plus)};
}

FluxPair origin_flux(const GasState& left_trace, const GasState& right_trace,
                     const SourceCoefficients& coeffs, const Scheme& scheme) {
  switch (scheme.kind) {
    case SchemeKind::KT:
      return kt_flux(left_trace, right_trace, coeffs, scheme.kt_corrections);
    case SchemeKind::SolverBased:
      return solver_flux(left_trace, right_trace, coeffs);
    case SchemeKind::Splitting:
      break;
  }
  const Vector3 f = llf_flux(left_trace, right_trace);
  return {f, f};
}

}  // namespace dsrc
