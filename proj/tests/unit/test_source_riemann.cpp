#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "dsrc/errors.hpp"
#include "dsrc/source_riemann.hpp"
#include "dsrc/waves.hpp"

using namespace dsrc;
using doctest::Approx;

namespace {

struct Row {
  SourceCoefficients c;
  GasState l;
  GasState r;
};

const std::vector<Row> kTable{
    {{0.4, 0.2, 0.4}, {0.6, 0.5, 0.6}, {0.641338, 0.654881, 0.62495}},
    {{0.2, 0.0, 0.2}, {1.0, 1.0, 1.0}, {0.933943, 0.411564, 1.27555}},
    {{0.1, 0.1, 0.2}, {1.0, 2.0, 1.0}, {1.888, 2.53245, 2.17219}},
    {{0.1, -0.2, 0.2}, {1.0, 1.0, 1.0}, {0.378535, 2.07562, 0.46455}},
    {{0.1, 0.1, 0.2}, {1.0, 1.74007, 1.0}, {1.65217, 1.71963, 1.77224}},
    {{0.1, 0.2, -0.2}, {1.0, 0.8, 1.0}, {1.27959, 1.38758, 0.671459}},
    {{0.1, 0.1, -0.1}, {1.0, 0.8, 1.0}, {0.468365, 1.92334, 0.450956}},
    {{0.3, 0.3, 0.3}, {0.6, 0.8, 0.6}, {0.459223, 1.45488, 0.507773}}};

const Row& row(int id) { return kTable[id - 1]; }

double state_rel(const GasState& a, const GasState& b) {
  return std::max({std::abs(a.rho() - b.rho()) / b.rho(),
                   std::abs(a.u() - b.u()) / std::max(1.0, std::abs(b.u())),
                   std::abs(a.p() - b.p()) / b.p()});
}

GasState with_mach(double rho, double p, double mach) {
  return GasState(rho, mach * std::sqrt(1.4 * p / rho), p);
}

Structure predict(int id) {
  return predict_structure(row(id).l, row(id).r, row(id).c);
}

}  // namespace

TEST_CASE("structure legality by sign of k") {
  CHECK(permitted(Structure::Type3, 1));
  CHECK(permitted(Structure::Type4, 1));
  CHECK_FALSE(permitted(Structure::Type5, 1));
  CHECK(permitted(Structure::Type6, -1));
  CHECK_FALSE(permitted(Structure::Type7, -1));
  CHECK(permitted(Structure::Type7, 0));
  CHECK_FALSE(permitted(Structure::Type3, 0));
  for (int s = -1; s <= 1; ++s) {
    CHECK(permitted(Structure::Type1, s));
    CHECK(permitted(Structure::Type2, s));
  }
}

TEST_CASE("structure prediction on the benchmark table") {
  CHECK(predict(2) == Structure::Type1);
  CHECK(predict(3) == Structure::Type2);
  CHECK(predict(4) == Structure::Type3);
  CHECK((predict(5) == Structure::Type2 || predict(5) == Structure::Type3));
  CHECK(predict(6) == Structure::Type5);
  CHECK((predict(7) == Structure::Type1 || predict(7) == Structure::Type5));
  CHECK(predict(8) == Structure::Type7);
  for (int id = 1; id <= 8; ++id) {
    CHECK(permitted(predict(id), row(id).c.sign()));
  }
  CHECK(predict_structure(GasState(1, 1, 1), GasState(1, -1, 1),
                          row(2).c) == Structure::Classical);
  CHECK(predict_structure(mirror(row(3).r), mirror(row(3).l), row(3).c) ==
        Structure::Type2);
}

TEST_CASE("velocity mismatch function") {
  const Row& t1 = row(1);
  const GasState r_exact = forward_curve(t1.l, t1.c, Branch::Subsonic);
  CHECK(std::abs(t_function(t1.l.p(), t1.l, r_exact, t1.c)) <= 1e-13);

  const SourceCoefficients zero(0, 0, 0);
  const GasState l(1, 1, 1);
  const GasState r(0.8, 0.7, 1.3);
  const Type1Bracket zb = type1_bracket(l, zero);
  for (double f : {0.0, 0.2, 0.5, 0.9}) {
    const double p = zb.p2 + f * (zb.p1 - zb.p2);
    CHECK(t_function(p, l, r, zero) ==
          Approx(-pressure_function(l, r, p)).epsilon(1e-13));
  }

  const Row& t2 = row(2);
  const Type1Bracket br = type1_bracket(t2.l, t2.c);
  CHECK(t_function(br.p1, t2.l, t2.r, t2.c) *
            t_function(br.p2, t2.l, t2.r, t2.c) <
        0.0);
}

TEST_CASE("Type1 bracket") {
  const GasState a(1, 1, 1);
  const Type1Bracket br = type1_bracket(a, SourceCoefficients(0.3, 0.3, 0.3));
  CHECK(br.p2 < a.p());
  CHECK(br.p2 < br.p1);
  CHECK(std::abs(mach_along_1wave(a, br.p2) - 1.0) <= 1e-10);
  CHECK(std::abs(mach_along_1wave(a, br.p1)) <= 1e-10);
  CHECK(std::abs(wave_state(WaveFamily::One, a, br.p1).u()) <= 1e-12);

  const SourceCoefficients c(0.4, 0.2, 0.4);
  const double m1 = critical_machs(c, 1.4).m1_star;
  const GasState at = with_mach(0.9, 1.2, m1);
  CHECK(type1_bracket(at, c).p2 == Approx(at.p()).epsilon(1e-12));
  CHECK_THROWS_AS(type1_bracket(GasState(1, -1, 1), c), Error);
}

TEST_CASE("approximate solver on single stationary waves") {
  const Row& t1 = row(1);
  const GasState r = forward_curve(t1.l, t1.c, Branch::Subsonic);
  const SolverOutput out = approximate_solve(t1.l, r, t1.c);
  CHECK(out.predicted == Structure::Type1);
  CHECK(state_rel(out.minus, t1.l) <= 1e-10);
  CHECK(state_rel(out.plus, r) <= 1e-10);

  const SolverOutput t3 = approximate_solve(row(3).l, row(3).r, row(3).c);
  CHECK(t3.predicted == Structure::Type2);
  CHECK(t3.minus.rho() == row(3).l.rho());
  CHECK(t3.minus.u() == row(3).l.u());
  CHECK(t3.minus.p() == row(3).l.p());

  const GasState l(1, 1, 1);
  const GasState rr(1, -1, 1);
  const SolverOutput opp = approximate_solve(l, rr, t1.c);
  CHECK(opp.predicted == Structure::Classical);
  const GasState s0 = sample_classical(solve_classical(l, rr), 0.0);
  CHECK(state_rel(opp.minus, s0) == 0.0);
  CHECK(state_rel(opp.plus, s0) == 0.0);
}

TEST_CASE("approximate solver is exact on random equilibrium pairs") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> thermo(0.3, 3.0);
  const std::vector<double> ks{-0.3, -0.05, 0.0, 0.1, 0.36};
  double worst = 0.0;
  int count = 0;
  while (count < 200) {
    const SourceCoefficients c(ks[count % ks.size()], 0.0, 0.0);
    const Branch b = unit(rng) < 0.5 ? Branch::Subsonic : Branch::Supersonic;
    const MachInterval set = admissible_set(Side::Left, b, c, 1.4);
    const double lo = std::max(set.lo, 0.05);
    const double hi = std::min(set.hi, lo + 2.5);
    if (!(hi > lo)) continue;
    const double m = lo + (hi - lo) * (0.01 + 0.98 * unit(rng));
    const GasState l = with_mach(thermo(rng), thermo(rng), m);
    const GasState r = forward_curve(l, c, b);
    const SolverOutput out = approximate_solve(l, r, c);
    worst = std::max({worst, state_rel(out.minus, l), state_rel(out.plus, r)});
    const SolverOutput mir = approximate_solve(mirror(r), mirror(l), c);
    worst = std::max({worst, state_rel(mir.minus, mirror(r)),
                      state_rel(mir.plus, mirror(l))});
    ++count;
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("mirror covariance of the solver") {
  for (int id = 2; id <= 8; ++id) {
    const Row& t = row(id);
    const SolverOutput a = approximate_solve(t.l, t.r, t.c);
    const SolverOutput b = approximate_solve(mirror(t.r), mirror(t.l), t.c);
    CHECK(a.predicted == b.predicted);
    CHECK(state_rel(mirror(b.plus), a.minus) <= 1e-14);
    CHECK(state_rel(mirror(b.minus), a.plus) <= 1e-14);
  }
}

TEST_CASE("composed reference fans") {
  for (int id = 1; id <= 8; ++id) {
    CAPTURE(id);
    const Row& t = row(id);
    const GasState r =
        id == 1 ? forward_curve(t.l, t.c, Branch::Subsonic) : t.r;
    const SourceFan fan = compose_reference_fan(t.l, r, t.c);
    CHECK(jump_residual(fan.minus, fan.plus, t.c) <= 1e-9);

    const std::vector<FanWave> waves = fan_waves(fan);
    bool seen_origin = false;
    double last = -INFINITY;
    for (const FanWave& w : waves) {
      CHECK(w.span.lo <= w.span.hi);
      CHECK(w.span.lo >= last - 1e-12);
      last = w.span.hi;
      if (w.family == 0) {
        seen_origin = true;
      } else if (!seen_origin) {
        CHECK(w.span.hi <= 1e-8);
      } else {
        CHECK(w.span.lo >= -1e-8);
      }
    }
    CHECK(seen_origin);

    const GasState far_l = sample_source_fan(fan, -1e9);
    const GasState far_r = sample_source_fan(fan, 1e9);
    CHECK(state_rel(far_l, t.l) == 0.0);
    CHECK(state_rel(far_r, r) == 0.0);
    CHECK(state_rel(sample_source_fan(fan, 0.0, OriginSide::Minus),
                    fan.minus) == 0.0);
    CHECK(state_rel(sample_source_fan(fan, 0.0, OriginSide::Plus),
                    fan.plus) == 0.0);

    switch (fan.structure) {
      case Structure::Type3:
        CHECK(std::abs(fan.plus.mach() - 1.0) <= 1e-8);
        break;
      case Structure::Type5:
        CHECK(std::abs(fan.minus.mach() - 1.0) <= 1e-8);
        break;
      case Structure::Type7:
        CHECK(std::abs(fan.minus.mach() - 1.0) <= 1e-8);
        CHECK(std::abs(fan.plus.mach() - 1.0) <= 1e-8);
        break;
      default:
        break;
    }

    const SourceFan m = compose_reference_fan(mirror(r), mirror(t.l), t.c);
    for (double xi : {-2.3, -0.7, -0.05, 0.05, 0.4, 1.3, 2.9}) {
      const GasState a = mirror(sample_source_fan(fan, xi));
      const GasState b = sample_source_fan(m, -xi);
      CHECK(state_rel(a, b) <= 1e-12);
    }
  }
}

TEST_CASE("Test1 fan is a single stationary wave") {
  const Row& t = row(1);
  const GasState r = forward_curve(t.l, t.c, Branch::Subsonic);
  const SourceFan fan = compose_reference_fan(t.l, r, t.c);
  const std::vector<FanWave> waves = fan_waves(fan);
  REQUIRE(waves.size() == 1);
  CHECK(waves[0].family == 0);
  CHECK(state_rel(sample_source_fan(fan, -0.1), t.l) <= 1e-12);
  CHECK(state_rel(sample_source_fan(fan, 0.1), r) <= 1e-12);
}

TEST_CASE("Test2 fan is Type1") {
  const SourceFan fan = compose_reference_fan(row(2).l, row(2).r, row(2).c);
  CHECK(fan.structure == Structure::Type1);
  CHECK(fan.left_fan.left_wave.hi <= 0.0);
  CHECK(fan.right_fan.u_star == Approx(fan.plus.u()).epsilon(1e-10));
  CHECK(fan.right_fan.u_star > 0.0);
  CHECK(fan.right_fan.left_trivial(1e-9));
}

TEST_CASE("Test4 fan is sonic at the origin") {
  const SourceFan fan = compose_reference_fan(row(4).l, row(4).r, row(4).c);
  CHECK(fan.structure == Structure::Type3);
  CHECK(std::abs(sample_source_fan(fan, 0.0).mach() - 1.0) <= 1e-6);
}
