#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dsrc/errors.hpp"
#include "dsrc/harness.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitConfig = 2;
constexpr int kExitUnavailable = 3;

struct Common {
  int test = 0;
  std::string scheme = "solver";
  double cfl = 0.5;
  std::optional<double> t_end;
  std::string domain;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--test", c.test, "benchmark id (1..8)")->required();
  cmd->add_option("--scheme", c.scheme,
                  "splitting | kt | kt-nocorr | solver");
  cmd->add_option("--cfl", c.cfl, "CFL number in (0, 0.5]");
  cmd->add_option("--t-end", c.t_end, "end time (default: per test)");
  cmd->add_option("--domain", c.domain, "a,b (default: -10,10)");
}

dsrc::RunOptions to_options(const Common& c) {
  dsrc::RunOptions o;
  o.scheme = dsrc::parse_scheme(c.scheme);
  o.cfl = c.cfl;
  o.t_end = c.t_end;
  if (!c.domain.empty()) {
    const auto comma = c.domain.find(',');
    if (comma == std::string::npos) {
      throw dsrc::ConfigError("--domain expects a,b");
    }
    try {
      std::size_t used = 0;
      const std::string lo = c.domain.substr(0, comma);
      const std::string hi = c.domain.substr(comma + 1);
      o.a = std::stod(lo, &used);
      if (used != lo.size()) throw std::invalid_argument(lo);
      o.b = std::stod(hi, &used);
      if (used != hi.size()) throw std::invalid_argument(hi);
    } catch (const std::logic_error&) {
      throw dsrc::ConfigError("--domain expects a,b, got '" + c.domain + "'");
    }
  }
  return o;
}

void print_norms(const char* name, const dsrc::Norms& n) {
  std::printf("%s_error: L1=%.6e L2=%.6e Linf=%.6e\n", name, n.l1, n.l2,
              n.linf);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riemann problems for the Euler equations with a point source"};
  app.require_subcommand(1);

  Common run_args;
  double h = 0.0;
  std::string out;
  auto* run = app.add_subcommand("run", "run one benchmark and compare");
  run->set_help_flag("--help", "print this help and exit");
  add_common(run, run_args);
  run->add_option("--h", h, "cell width")->required();
  run->add_option("--out", out, "profile CSV path");

  Common conv_args;
  std::vector<double> h_list;
  auto* conv = app.add_subcommand("converge", "refinement study");
  conv->set_help_flag("--help", "print this help and exit");
  add_common(conv, conv_args);
  conv->add_option("--h-list", h_list, "decreasing cell widths, e.g. 0.05,0.025")
      ->required()
      ->delimiter(',');

  int ref_test = 0;
  int samples = 0;
  std::optional<double> ref_t;
  std::string ref_out;
  auto* ref = app.add_subcommand("reference", "sample the exact solution");
  ref->add_option("--test", ref_test, "benchmark id (1..8)")->required();
  ref->add_option("--samples", samples, "number of sample points")->required();
  ref->add_option("--t", ref_t, "time (default: per test)");
  ref->add_option("--out", ref_out, "CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run) {
      dsrc::RunOptions o = to_options(run_args);
      o.h = h;
      o.out_path = out;
      const dsrc::RunReport r = dsrc::run_test(run_args.test, o);
      std::printf("test: %d\nscheme: %s\nh: %g\nt_end: %g\ncells: %d\n", r.id,
                  std::string(dsrc::scheme_name(r.scheme)).c_str(), r.h,
                  r.t_end, r.field.grid.n_cells);
      print_norms("rho", r.rho);
      print_norms("u", r.u);
      print_norms("p", r.p);
      std::printf("wb_deviation: %.6e\noscillation: %.6e\nseconds: %.3f\n",
                  r.wb_deviation, r.oscillation, r.seconds);
      if (!r.out_path.empty()) std::printf("out: %s\n", r.out_path.c_str());
    } else if (*conv) {
      const auto rows = dsrc::convergence_study(conv_args.test,
                                                to_options(conv_args), h_list);
      std::printf("h,l1_rho,wb_deviation,ratio\n");
      for (const auto& row : rows) {
        std::printf("%g,%.6e,%.6e,%s\n", row.h, row.l1_rho, row.wb_deviation,
                    std::isnan(row.ratio)
                        ? ""
                        : dsrc::format_short(row.ratio).c_str());
      }
    } else if (*ref) {
      const dsrc::TestCase& tc = dsrc::test_case(ref_test);
      dsrc::emit_reference(dsrc::reference_fan(tc), tc.a, tc.b,
                           ref_t.value_or(tc.end_time), samples, ref_out);
      std::printf("out: %s\n", ref_out.c_str());
    }
  } catch (const dsrc::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const dsrc::Unavailable& e) {
    std::fprintf(stderr, "unavailable: %s\n", e.what());
    return kExitUnavailable;
  } catch (const dsrc::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  }
  return 0;
}
