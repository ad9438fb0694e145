#include "dsrc/gas.hpp"

#include <cmath>
#include <string>

#include "dsrc/errors.hpp"

namespace dsrc {

GasState::GasState(double rho, double u, double p, double gamma)
    : rho_(rho), u_(u), p_(p), gamma_(gamma) {
  if (!(rho > 0.0) || !(p > 0.0) || !(gamma > 1.0) || !std::isfinite(u) ||
      !std::isfinite(rho) || !std::isfinite(p)) {
    throw InvalidState("invalid gas state: rho=" + std::to_string(rho) +
                       " u=" + std::to_string(u) + " p=" + std::to_string(p) +
                       " gamma=" + std::to_string(gamma));
  }
}

GasState GasState::from_conserved(const Vector3& q, double gamma) {
  const double rho = q[0];
  if (!(rho > 0.0)) {
    throw InvalidState("non-positive density in conserved vector");
  }
  const double u = q[1] / rho;
  const double p = (gamma - 1.0) * (q[2] - 0.5 * q[1] * u);
  return GasState(rho, u, p, gamma);
}

double GasState::sound_speed() const { return std::sqrt(gamma_ * p_ / rho_); }

double GasState::mach() const { return u_ / sound_speed(); }

double GasState::internal_energy() const {
  return p_ / ((gamma_ - 1.0) * rho_);
}

double GasState::total_energy() const {
  return p_ / (gamma_ - 1.0) + 0.5 * rho_ * u_ * u_;
}

SourceCoefficients::SourceCoefficients(double k1, double k2, double k3)
    : k_{k1, k2, k3}, combined_(combine(k1, k2, k3)) {
  if (!(k1 > -1.0) || !(k2 > -1.0) || !(k3 > -1.0)) {
    throw InvalidState("source coefficients must exceed -1");
  }
}

double SourceCoefficients::combine(double k1, double k2, double k3) {
  return (1.0 + k1) * (1.0 + k3) / ((1.0 + k2) * (1.0 + k2)) - 1.0;
}

int SourceCoefficients::sign() const {
  constexpr double kZero = 1e-14;
  if (combined_ > kZero) return 1;
  if (combined_ < -kZero) return -1;
  return 0;
}

Vector3 to_conserved(const GasState& s) {
  return {s.rho(), s.rho() * s.u(), s.total_energy()};
}

Vector3 physical_flux(const GasState& s) {
  const double m = s.rho() * s.u();
  return {m, m * s.u() + s.p(), (s.total_energy() + s.p()) * s.u()};
}

Vector3 eigenvalues(const GasState& s) {
  const double a = s.sound_speed();
  return {s.u() - a, s.u(), s.u() + a};
}

GasState mirror(const GasState& s) {
  return GasState(s.rho(), -s.u(), s.p(), s.gamma());
}

Vector3 evaluate_source(const GasState& left, const GasState& right,
                        const SourceCoefficients& coeffs) {
  if (left.u() > 0.0 && right.u() > 0.0) {
    return coeffs.diagonal().cwiseProduct(physical_flux(left));
  }
  if (left.u() < 0.0 && right.u() < 0.0) {
    return -coeffs.diagonal().cwiseProduct(physical_flux(right));
  }
  return Vector3::Zero();
}

}  // namespace dsrc
