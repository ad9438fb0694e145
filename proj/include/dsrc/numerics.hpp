#ifndef DSRC_NUMERICS_HPP
#define DSRC_NUMERICS_HPP

#include <vector>

#include "dsrc/gas.hpp"
#include "dsrc/types.hpp"

namespace dsrc {

/// Uniform grid on [a, b] whose interface n_left sits exactly at x = 0.
struct Grid {
  double a = 0.0;
  double b = 0.0;
  double h = 0.0;
  int n_cells = 0;
  int n_left = 0;  // cells left of the origin; j0 = n_left - 1

  /// Throws ConfigError unless a < 0 < b and h tiles both halves.
  static Grid uniform(double a, double b, double h);

  int j0() const { return n_left - 1; }
  double interface(int i) const { return (i - n_left) * h; }
  double center(int j) const { return (j - n_left + 0.5) * h; }
};

enum class SchemeKind { Splitting, KT, SolverBased };

struct Scheme {
  SchemeKind kind = SchemeKind::SolverBased;
  bool kt_corrections = true;
};

/// Legendre modes per cell: column m holds the coefficient of P_m on the
/// reference cell [-1, 1]. Column 0 is the cell mean.
struct DgField {
  Grid grid;
  double time = 0.0;
  double gamma = kDefaultGamma;
  std::vector<Modes> cells;

  DgField() = default;
  DgField(const Grid& g, double gamma);

  Vector3 mean(int j) const { return cells[j].col(0); }
  Vector3 value(int j, double xi) const;
  Vector3 left_trace(int j) const { return value(j, -1.0); }
  Vector3 right_trace(int j) const { return value(j, 1.0); }
  GasState mean_state(int j) const;
};

/// Piecewise-constant field with `left` on x < 0 and `right` on x > 0.
DgField riemann_field(const Grid& g, const GasState& left,
                      const GasState& right);

struct FluxPair {
  Vector3 minus;
  Vector3 plus;
};

Vector3 llf_flux(const GasState& left, const GasState& right);

/// Throws Unavailable when corrections are off and a stationary curve has
/// no solution for a trace.
FluxPair kt_flux(const GasState& left_trace, const GasState& right_trace,
                 const SourceCoefficients& coeffs, bool corrections);

FluxPair solver_flux(const GasState& left_trace, const GasState& right_trace,
                     const SourceCoefficients& coeffs);

FluxPair origin_flux(const GasState& left_trace, const GasState& right_trace,
                     const SourceCoefficients& coeffs, const Scheme& scheme);

/// Time derivative of the modal coefficients.
std::vector<Modes> dg_rhs(const DgField& field,
                          const SourceCoefficients& coeffs,
                          const Scheme& scheme);

struct LimiterOptions {
  double tvb_m = 0.0;
};

DgField tvd_limit(const DgField& field, LimiterOptions opts = {});

void apply_splitting_source(DgField& field, double dt,
                            const SourceCoefficients& coeffs);

/// Three-stage SSP Runge-Kutta step for any vector-space type T.
/// `rhs(u)` returns du/dt and `post(u)` is applied after every stage.
template <typename T, typename Rhs, typename Post>
T ssp_rk3(const T& u, double dt, Rhs&& rhs, Post&& post) {
  const T u1 = post(u + dt * rhs(u));
  const T u2 = post(0.75 * u + 0.25 * (u1 + dt * rhs(u1)));
  return post((1.0 / 3.0) * u + (2.0 / 3.0) * (u2 + dt * rhs(u2)));
}

DgField ssp_rk3_step(const DgField& field, double dt,
                     const SourceCoefficients& coeffs, const Scheme& scheme,
                     LimiterOptions limiter = {});

double cfl_dt(const DgField& field, double cfl);

/// Steps until t_end, shortening the last step to land on it exactly.
DgField advance(DgField field, double t_end, double cfl,
                const SourceCoefficients& coeffs, const Scheme& scheme,
                LimiterOptions limiter = {});

}  // namespace dsrc

#endif  // DSRC_NUMERICS_HPP
