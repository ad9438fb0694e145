#include "dsrc/classical.hpp"

#include <algorithm>
#include <cmath>

#include "dsrc/errors.hpp"
#include "dsrc/waves.hpp"

namespace dsrc {
namespace {

struct Branch1 {
  double value;       // velocity change magnitude g(p) with u = u0 -/+ g
  double derivative;  // dg/dp
};

// Toro's f_K(p) for one side: u*_left = u_L - g_L(p), u*_right = u_R + g_R(p).
Branch1 velocity_jump(const GasState& s, double p) {
  const double g = s.gamma();
  const double p0 = s.p();
  if (p >= p0) {
    const double a = 2.0 / ((g + 1.0) * s.rho());
    const double b = (g - 1.0) / (g + 1.0) * p0;
    const double root = std::sqrt(a / (p + b));
    return {(p - p0) * root, root * (1.0 - 0.5 * (p - p0) / (p + b))};
  }
  const double c = s.sound_speed();
  const double ratio = p / p0;
  const double expo = (g - 1.0) / (2.0 * g);
  return {2.0 * c / (g - 1.0) * (std::pow(ratio, expo) - 1.0),
          std::pow(ratio, -(g + 1.0) / (2.0 * g)) / (s.rho() * c)};
}

}  // namespace

double pressure_function(const GasState& left, const GasState& right,
                         double p) {
  return (left.u() - velocity_jump(left, p).value) -
         (right.u() + velocity_jump(right, p).value);
}

GasState ClassicalFan::left_star() const {
  return GasState(rho_star_left, u_star, p_star, left.gamma());
}

GasState ClassicalFan::right_star() const {
  return GasState(rho_star_right, u_star, p_star, right.gamma());
}

bool ClassicalFan::left_trivial(double rel_tol) const {
  return std::abs(p_star - left.p()) <= rel_tol * left.p();
}

bool ClassicalFan::right_trivial(double rel_tol) const {
  return std::abs(p_star - right.p()) <= rel_tol * right.p();
}

bool ClassicalFan::contact_trivial(double rel_tol) const {
  return std::abs(rho_star_left - rho_star_right) <=
         rel_tol * std::max(rho_star_left, rho_star_right);
}

ClassicalFan solve_classical(const GasState& left, const GasState& right) {
  if (left.gamma() != right.gamma()) {
    throw Error("solve_classical: mixed gamma is not supported");
  }
  const double g = left.gamma();
  const double ul = left.u();
  const double ur = right.u();
  const double cl = left.sound_speed();
  const double cr = right.sound_speed();
  if (ur - ul >= 2.0 * (cl + cr) / (g - 1.0)) {
    throw VacuumFormation("solve_classical: initial data generate vacuum");
  }

  auto f = [&](double p) { return pressure_function(left, right, p); };
  double p = 0.0;
  if (f(left.p()) == 0.0) {
    p = left.p();
  } else if (f(right.p()) == 0.0) {
    p = right.p();
  } else {
    // f is strictly decreasing; bracket [lo, hi] with f(lo) > 0 > f(hi).
    double lo = 1e-12 * std::min(left.p(), right.p());
    double hi = std::max(left.p(), right.p());
    while (f(hi) > 0.0) {
      lo = hi;
      hi *= 2.0;
      if (!std::isfinite(hi)) throw VacuumFormation("solve_classical: no root");
    }
    if (f(lo) <= 0.0) {
      throw VacuumFormation("solve_classical: no positive pressure root");
    }
    p = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
      const Branch1 bl = velocity_jump(left, p);
      const Branch1 br = velocity_jump(right, p);
      const double value = (ul - bl.value) - (ur + br.value);
      if (value == 0.0) break;
      if (value > 0.0) lo = p; else hi = p;
      double next = p + value / (bl.derivative + br.derivative);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      const bool done = std::abs(next - p) <= 1e-15 * p ||
                        hi - lo <= 1e-15 * hi;
      p = next;
      if (done) break;
    }
  }

  const double u_star =
      0.5 * ((ul - velocity_jump(left, p).value) +
             (ur + velocity_jump(right, p).value));
  const GasState sl = wave_state(WaveFamily::One, left, p);
  const GasState sr = wave_state(WaveFamily::Three, right, p);

  ClassicalFan fan{left,   right,  p, u_star,
                   sl.rho(), sr.rho(),
                   p >= left.p() ? WaveKind::Shock : WaveKind::Rarefaction,
                   p >= right.p() ? WaveKind::Shock : WaveKind::Rarefaction,
                   {}, {}};
  if (fan.left_kind == WaveKind::Shock) {
    const double s = shock_speed(WaveFamily::One, left, p);
    fan.left_wave = {s, s};
  } else {
    fan.left_wave = {ul - cl, u_star - std::sqrt(g * p / sl.rho())};
  }
  if (fan.right_kind == WaveKind::Shock) {
    const double s = shock_speed(WaveFamily::Three, right, p);
    fan.right_wave = {s, s};
  } else {
    fan.right_wave = {u_star + std::sqrt(g * p / sr.rho()), ur + cr};
  }
  return fan;
}

GasState sample_classical(const ClassicalFan& fan, double xi) {
  const double g = fan.left.gamma();
  if (xi < fan.u_star) {
    const GasState& l = fan.left;
    if (xi < fan.left_wave.lo) return l;
    if (xi >= fan.left_wave.hi) return fan.left_star();
    // Inside the left rarefaction: lambda_1 = xi.
    const double cl = l.sound_speed();
    const double c = 2.0 / (g + 1.0) * (cl + 0.5 * (g - 1.0) * (l.u() - xi));
    const double u = 2.0 / (g + 1.0) * (cl + 0.5 * (g - 1.0) * l.u() + xi);
    const double ratio = c / cl;
    return GasState(l.rho() * std::pow(ratio, 2.0 / (g - 1.0)), u,
                    l.p() * std::pow(ratio, 2.0 * g / (g - 1.0)), g);
  }
  const GasState& r = fan.right;
  if (xi >= fan.right_wave.hi) return r;
  if (xi < fan.right_wave.lo) return fan.right_star();
  const double cr = r.sound_speed();
  const double c = 2.0 / (g + 1.0) * (cr - 0.5 * (g - 1.0) * (r.u() - xi));
  const double u = 2.0 / (g + 1.0) * (-cr + 0.5 * (g - 1.0) * r.u() + xi);
  const double ratio = c / cr;
  return GasState(r.rho() * std::pow(ratio, 2.0 / (g - 1.0)), u,
                  r.p() * std::pow(ratio, 2.0 * g / (g - 1.0)), g);
}

ClassicalFan mirror(const ClassicalFan& fan) {
  return ClassicalFan{mirror(fan.right),
                      mirror(fan.left),
                      fan.p_star,
                      -fan.u_star,
                      fan.rho_star_right,
                      fan.rho_star_left,
                      fan.right_kind,
                      fan.left_kind,
                      {-fan.right_wave.hi, -fan.right_wave.lo},
                      {-fan.left_wave.hi, -fan.left_wave.lo}};
}

}  // namespace dsrc
