#include <doctest.h>

#include <cmath>
#include <random>

#include "../oracles/oracles.hpp"
#include "dsrc/classical.hpp"
#include "dsrc/errors.hpp"

using namespace dsrc;
using doctest::Approx;

namespace {

// Frozen from the bisection oracle.
constexpr double kSodPStar = 0.303130178051;
constexpr double kSodUStar = 0.927452620049;

const GasState kSodL(1.0, 0.0, 1.0);
const GasState kSodR(0.125, 0.0, 0.1);

}  // namespace

TEST_CASE("Sod star values") {
  const auto o = oracle::star_by_bisection({1, 0, 1}, {0.125, 0, 0.1}, 1.4);
  CHECK(o.p == Approx(kSodPStar).epsilon(1e-11));
  CHECK(o.u == Approx(kSodUStar).epsilon(1e-11));

  const ClassicalFan f = solve_classical(kSodL, kSodR);
  CHECK(std::abs(f.p_star - kSodPStar) <= 1e-10);
  CHECK(std::abs(f.u_star - kSodUStar) <= 1e-10);
  CHECK(f.left_kind == WaveKind::Rarefaction);
  CHECK(f.right_kind == WaveKind::Shock);
  CHECK(f.left_wave.lo <= f.left_wave.hi);
  CHECK(f.left_wave.hi <= f.u_star);
  CHECK(f.u_star <= f.right_wave.lo);
  CHECK(std::abs(pressure_function(kSodL, kSodR, f.p_star)) <=
        1e-11 * std::max(1.0, std::abs(f.u_star)));
}

TEST_CASE("sampling") {
  const ClassicalFan f = solve_classical(kSodL, kSodR);
  const GasState far_l = sample_classical(f, -1e6);
  const GasState far_r = sample_classical(f, 1e6);
  CHECK(far_l.rho() == kSodL.rho());
  CHECK(far_r.rho() == kSodR.rho());

  // The Sod rarefaction lies entirely left of the origin.
  CHECK(f.left_wave.hi < 0.0);
  const GasState s0 = sample_classical(f, 0.0);
  CHECK(s0.rho() == Approx(f.rho_star_left));
  CHECK(s0.u() == Approx(kSodUStar).epsilon(1e-10));

  const double g = 1.4;
  const double inside = 0.5 * (f.left_wave.lo + f.left_wave.hi);
  const GasState sf = sample_classical(f, inside);
  const double u_fan =
      2.0 / (g + 1) * (std::sqrt(g) + 0.5 * (g - 1) * 0.0 + inside);
  CHECK(sf.u() == Approx(u_fan).epsilon(1e-12));
  CHECK(eigenvalues(sf)[0] == Approx(inside).epsilon(1e-12));

  // A transonic rarefaction puts the sonic point at the origin.
  const ClassicalFan t =
      solve_classical(GasState(1, 0, 1), GasState(0.01, 0, 0.001));
  REQUIRE(t.left_wave.lo < 0.0);
  REQUIRE(t.left_wave.hi > 0.0);
  const GasState st = sample_classical(t, 0.0);
  const double a0 = (g - 1) / (g + 1) * (2 * std::sqrt(g) / (g - 1));
  CHECK(st.u() == Approx(a0).epsilon(1e-12));
  CHECK(std::abs(eigenvalues(st)[0]) <= 1e-12);

  const GasState at_contact = sample_classical(f, f.u_star);
  CHECK(at_contact.rho() == Approx(f.rho_star_right));
  const GasState before_contact = sample_classical(f, f.u_star - 1e-9);
  CHECK(before_contact.rho() == Approx(f.rho_star_left));
}

TEST_CASE("identical states give a trivial fan") {
  const GasState s(1, 1, 1);
  const ClassicalFan f = solve_classical(s, s);
  CHECK(f.p_star == Approx(1.0).epsilon(1e-14));
  CHECK(f.u_star == Approx(1.0).epsilon(1e-14));
  CHECK(f.left_trivial());
  CHECK(f.right_trivial());
  CHECK(f.contact_trivial());
  for (double xi : {-3.0, -0.5, 0.0, 0.7, 1.0, 2.5}) {
    const GasState v = sample_classical(f, xi);
    CHECK(v.rho() == Approx(1.0).epsilon(1e-12));
    CHECK(v.u() == Approx(1.0).epsilon(1e-12));
    CHECK(v.p() == Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("vacuum generation is reported") {
  CHECK_THROWS_AS(solve_classical(GasState(1, -6, 1), GasState(1, 6, 1)),
                  VacuumFormation);
  CHECK_NOTHROW(solve_classical(GasState(1, -5, 1), GasState(1, 5, 1)));
}

TEST_CASE("random problems") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> pos(0.1, 10.0);
  std::uniform_real_distribution<double> vel(-2.0, 2.0);
  std::uniform_real_distribution<double> xi(-6.0, 6.0);
  for (int i = 0; i < 500; ++i) {
    const GasState l(pos(rng), vel(rng), pos(rng));
    const GasState r(pos(rng), vel(rng), pos(rng));
    ClassicalFan f = [&] {
      try {
        return solve_classical(l, r);
      } catch (const VacuumFormation&) {
        return solve_classical(l, l);
      }
    }();
    const GasState fl = f.left;
    const GasState fr = f.right;
    const auto o = oracle::star_by_bisection({fl.rho(), fl.u(), fl.p()},
                                             {fr.rho(), fr.u(), fr.p()}, 1.4);
    CHECK(f.p_star == Approx(o.p).epsilon(1e-9));
    CHECK(std::abs(pressure_function(fl, fr, f.p_star)) <=
          1e-11 * std::max(1.0, std::abs(f.u_star)));
    CHECK((f.left_kind == WaveKind::Shock) == (f.p_star >= fl.p()));
    CHECK((f.right_kind == WaveKind::Shock) == (f.p_star >= fr.p()));

    // Rankine-Hugoniot across sampled shocks.
    if (f.left_kind == WaveKind::Shock && !f.left_trivial()) {
      const double s = f.left_wave.lo;
      const Vector3 res = physical_flux(f.left_star()) - physical_flux(fl) -
                          s * (to_conserved(f.left_star()) - to_conserved(fl));
      CHECK(res.cwiseAbs().maxCoeff() <= 1e-9 * std::max(1.0, fl.p()));
    }
    if (f.right_kind == WaveKind::Shock && !f.right_trivial()) {
      const double s = f.right_wave.lo;
      const Vector3 res = physical_flux(fr) - physical_flux(f.right_star()) -
                          s * (to_conserved(fr) - to_conserved(f.right_star()));
      CHECK(res.cwiseAbs().maxCoeff() <= 1e-9 * std::max(1.0, fr.p()));
    }

    const ClassicalFan m = solve_classical(mirror(fr), mirror(fl));
    const double x = xi(rng);
    const GasState a = mirror(sample_classical(f, x));
    const GasState b = sample_classical(m, -x);
    CHECK(a.rho() == Approx(b.rho()).epsilon(1e-9));
    CHECK(a.u() == Approx(b.u()).epsilon(1e-9));
    CHECK(a.p() == Approx(b.p()).epsilon(1e-9));

    const ClassicalFan mm = mirror(f);
    CHECK(mm.p_star == Approx(m.p_star).epsilon(1e-12));
  }
}
