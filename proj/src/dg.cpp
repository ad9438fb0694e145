#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "dsrc/errors.hpp"
#include "dsrc/numerics.hpp"

namespace dsrc {
namespace {

const double kGaussNode = std::sqrt(0.6);
const std::array<double, 3> kNodes{-kGaussNode, 0.0, kGaussNode};
constexpr std::array<double, 3> kWeights{5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

double legendre2(double xi) { return 0.5 * (3.0 * xi * xi - 1.0); }

GasState state_at(const Vector3& q, double gamma, int cell, double time) {
  try {
    return GasState::from_conserved(q, gamma);
  } catch (const InvalidState& e) {
    throw InvalidState(std::string(e.what()) + " (cell " +
                       std::to_string(cell) + ", t = " +
                       std::to_string(time) + ")");
  }
}

bool admissible_conserved(const Vector3& q, double gamma) {
  if (!(q[0] > 0.0)) return false;
  const double p = (gamma - 1.0) * (q[2] - 0.5 * q[1] * q[1] / q[0]);
  return p > 0.0 && std::isfinite(p);
}

double minmod(double a, double b, double c) {
  if (a > 0.0 && b > 0.0 && c > 0.0) return std::min({a, b, c});
  if (a < 0.0 && b < 0.0 && c < 0.0) return std::max({a, b, c});
  return 0.0;
}

double minmod_tvb(double a, double b, double c, double bound) {
  return std::abs(a) <= bound ? a : minmod(a, b, c);
}

// Right eigenvectors of the flux Jacobian in conserved variables.
Eigen::Matrix3d right_eigenvectors(const Vector3& q, double gamma) {
  const GasState s = GasState::from_conserved(q, gamma);
  const double u = s.u();
  const double a = s.sound_speed();
  const double hh = (s.total_energy() + s.p()) / s.rho();
  Eigen::Matrix3d r;
  r << 1.0, 1.0, 1.0,
       u - a, u, u + a,
       hh - u * a, 0.5 * u * u, hh + u * a;
  return r;
}

// Modal coefficients as a vector space, so the generic SSP-RK3 applies.
struct Coefficients {
  std::vector<Modes> c;
};

Coefficients operator+(const Coefficients& a, const Coefficients& b) {
  Coefficients out = a;
  for (std::size_t j = 0; j < out.c.size(); ++j) out.c[j] += b.c[j];
  return out;
}

Coefficients operator*(double s, const Coefficients& a) {
  Coefficients out = a;
  for (Modes& m : out.c) m *= s;
  return out;
}

}  // namespace

Grid Grid::uniform(double a, double b, double h) {
  if (!(a < 0.0 && b > 0.0)) {
    throw ConfigError("domain must satisfy a < 0 < b");
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw ConfigError("cell width must be positive");
  }
  const double left = -a / h;
  const double right = b / h;
  const double n_left = std::round(left);
  const double n_right = std::round(right);
  if (n_left < 1.0 || n_right < 1.0 ||
      std::abs(left - n_left) > 1e-9 * std::max(1.0, left) ||
      std::abs(right - n_right) > 1e-9 * std::max(1.0, right)) {
    throw ConfigError("cell width " + std::to_string(h) +
                      " does not place the origin on an interface of [" +
                      std::to_string(a) + ", " + std::to_string(b) + "]");
  }
  Grid g;
  g.h = h;
  g.n_left = static_cast<int>(n_left);
  g.n_cells = g.n_left + static_cast<int>(n_right);
  g.a = -g.n_left * h;
  g.b = (g.n_cells - g.n_left) * h;
  return g;
}

DgField::DgField(const Grid& g, double gamma_)
    : grid(g), gamma(gamma_), cells(g.n_cells, Modes::Zero()) {}

Vector3 DgField::value(int j, double xi) const {
  const Modes& c = cells[j];
  return c.col(0) + xi * c.col(1) + legendre2(xi) * c.col(2);
}

GasState DgField::mean_state(int j) const {
  return GasState::from_conserved(mean(j), gamma);
}

DgField riemann_field(const Grid& g, const GasState& left,
                      const GasState& right) {
  if (left.gamma() != right.gamma()) {
    throw ConfigError("left and right states use different gamma");
  }
  DgField f(g, left.gamma());
  const Vector3 ql = to_conserved(left);
  const Vector3 qr = to_conserved(right);
  for (int j = 0; j < g.n_cells; ++j) {
    f.cells[j].col(0) = j < g.n_left ? ql : qr;
  }
  return f;
}

std::vector<Modes> dg_rhs(const DgField& field,
                          const SourceCoefficients& coeffs,
                          const Scheme& scheme) {
  const int n = field.grid.n_cells;
  const double h = field.grid.h;
  std::vector<GasState> lt;
  std::vector<GasState> rt;
  lt.reserve(n);
  rt.reserve(n);
  for (int j = 0; j < n; ++j) {
    lt.push_back(state_at(field.left_trace(j), field.gamma, j, field.time));
    rt.push_back(state_at(field.right_trace(j), field.gamma, j, field.time));
  }

  std::vector<Vector3> flux_in(n);
  std::vector<Vector3> flux_out(n);
  for (int i = 0; i <= n; ++i) {
    const GasState& l = i == 0 ? lt[0] : rt[i - 1];
    const GasState& r = i == n ? rt[n - 1] : lt[i];
    FluxPair pair;
    if (i == field.grid.n_left) {
      try {
        pair = origin_flux(l, r, coeffs, scheme);
      } catch (const Unavailable& e) {
        throw Unavailable(std::string(e.what()) + " (origin, t = " +
                          std::to_string(field.time) + ")");
      } catch (const RootNotBracketed& e) {
        throw RootNotBracketed(std::string(e.what()) + " (origin, t = " +
                               std::to_string(field.time) + ")");
      }
    } else {
      pair.minus = llf_flux(l, r);
      pair.plus = pair.minus;
    }
    if (i > 0) flux_out[i - 1] = pair.minus;
    if (i < n) flux_in[i] = pair.plus;
  }

  std::vector<Modes> d(n);
  for (int j = 0; j < n; ++j) {
    Vector3 vol1 = Vector3::Zero();
    Vector3 vol2 = Vector3::Zero();
    for (int q = 0; q < 3; ++q) {
      const Vector3 f = physical_flux(
          state_at(field.value(j, kNodes[q]), field.gamma, j, field.time));
      vol1 += kWeights[q] * f;
      vol2 += kWeights[q] * 3.0 * kNodes[q] * f;
    }
    d[j].col(0) = (flux_in[j] - flux_out[j]) / h;
    d[j].col(1) = 3.0 / h * (vol1 - flux_out[j] - flux_in[j]);
    d[j].col(2) = 5.0 / h * (vol2 - flux_out[j] + flux_in[j]);
  }
  return d;
}

DgField tvd_limit(const DgField& field, LimiterOptions opts) {
  DgField out = field;
  const int n = field.grid.n_cells;
  const double bound = opts.tvb_m * field.grid.h * field.grid.h;
  for (int j = 0; j < n; ++j) {
    const Modes& c = field.cells[j];
    if (c.col(1).isZero(0.0) && c.col(2).isZero(0.0)) continue;
    const Vector3 um = field.mean(j);
    const Vector3 up = j > 0 ? field.mean(j - 1) : um;
    const Vector3 un = j < n - 1 ? field.mean(j + 1) : um;

    const Eigen::Matrix3d r = right_eigenvectors((up + um + un) / 3.0,
                                                 field.gamma);
    const Eigen::Matrix3d l = r.inverse();
    const Vector3 w_right = l * (c.col(1) + c.col(2));
    const Vector3 w_left = l * (c.col(1) - c.col(2));
    const Vector3 dp = l * (un - um);
    const Vector3 dm = l * (um - up);

    bool troubled = false;
    for (int k = 0; k < 3 && !troubled; ++k) {
      troubled = minmod_tvb(w_right[k], dp[k], dm[k], bound) != w_right[k] ||
                 minmod_tvb(w_left[k], dp[k], dm[k], bound) != w_left[k];
    }
    Modes& o = out.cells[j];
    if (troubled) {
      const Vector3 w_slope = l * c.col(1);
      Vector3 limited;
      for (int k = 0; k < 3; ++k) {
        limited[k] = minmod(w_slope[k], dp[k], dm[k]);
      }
      o.col(1) = r * limited;
      o.col(2).setZero();
    }

    bool positive = true;
    for (double xi : {-1.0, -kGaussNode, 0.0, kGaussNode, 1.0}) {
      if (!admissible_conserved(out.value(j, xi), field.gamma)) {
        positive = false;
        break;
      }
    }
    if (!positive) {
      o.col(1).setZero();
      o.col(2).setZero();
    }
  }
  return out;
}

void apply_splitting_source(DgField& field, double dt,
                            const SourceCoefficients& coeffs) {
  const int j0 = field.grid.j0();
  const GasState l = field.mean_state(j0);
  const GasState r = field.mean_state(j0 + 1);
  const Vector3 s = evaluate_source(l, r, coeffs) * (dt / field.grid.h);
  if (l.u() > 0.0 && r.u() > 0.0) {
    field.cells[j0 + 1].col(0) += s;
  } else if (l.u() < 0.0 && r.u() < 0.0) {
    field.cells[j0].col(0) += s;
  }
}

DgField ssp_rk3_step(const DgField& field, double dt,
                     const SourceCoefficients& coeffs, const Scheme& scheme,
                     LimiterOptions limiter) {
  if (!(dt > 0.0)) throw ConfigError("time step must be positive");
  DgField work = field;
  auto as_field = [&](const Coefficients& u) {
    work.cells = u.c;
    return work;
  };
  auto rhs = [&](const Coefficients& u) {
    return Coefficients{dg_rhs(as_field(u), coeffs, scheme)};
  };
  auto post = [&](const Coefficients& u) {
    return Coefficients{tvd_limit(as_field(u), limiter).cells};
  };
  DgField out = as_field(ssp_rk3(Coefficients{field.cells}, dt, rhs, post));
  if (scheme.kind == SchemeKind::Splitting) {
    apply_splitting_source(out, dt, coeffs);
  }
  out.time = field.time + dt;
  return out;
}

double cfl_dt(const DgField& field, double cfl) {
  if (!(cfl > 0.0 && cfl <= 0.5)) {
    throw ConfigError("cfl must lie in (0, 0.5]");
  }
  double smax = 0.0;
  for (int j = 0; j < field.grid.n_cells; ++j) {
    const GasState s = field.mean_state(j);
    smax = std::max(smax, std::abs(s.u()) + s.sound_speed());
  }
  return cfl * field.grid.h / smax;
}

DgField advance(DgField field, double t_end, double cfl,
                const SourceCoefficients& coeffs, const Scheme& scheme,
                LimiterOptions limiter) {
  field = tvd_limit(field, limiter);
  while (field.time < t_end) {
    double dt = cfl_dt(field, cfl);
    const bool last = field.time + dt >= t_end;
    if (last) dt = t_end - field.time;
    field = ssp_rk3_step(field, dt, coeffs, scheme, limiter);
    if (last) field.time = t_end;
  }
  return field;
}

}  // namespace dsrc
