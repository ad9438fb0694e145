#ifndef DSRC_HARNESS_HPP
#define DSRC_HARNESS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsrc/numerics.hpp"
#include "dsrc/source_riemann.hpp"

namespace dsrc {

struct TestCase {
  int id = 0;
  SourceCoefficients coeffs{0.0, 0.0, 0.0};
  GasState left{1.0, 0.0, 1.0};
  GasState right{1.0, 0.0, 1.0};
  double end_time = 1.0;
  std::string structure;
  double a = -10.0;
  double b = 10.0;
};

/// The eight benchmark problems as printed, one per line.
std::string_view table_text();
std::vector<TestCase> parse_table(std::string_view text);
std::string serialize_table(const std::vector<TestCase>& cases);

const std::vector<TestCase>& test_registry();
/// Throws ConfigError for ids outside 1..8.
const TestCase& test_case(int id);

/// Right state used to initialise a run. For Test1 this is the exact
/// stationary partner of U_L; the printed values are rounded to 6 digits.
GasState initial_right(const TestCase& tc);

SourceFan reference_fan(const TestCase& tc);

std::string_view scheme_name(const Scheme& s);
/// Parses splitting, kt, kt-nocorr or solver. Throws ConfigError.
Scheme parse_scheme(std::string_view name);

/// Shortest round-trip decimal with at least one digit after the point.
std::string format_short(double v);
/// Fixed 17-significant-digit formatting used in every CSV.
std::string format_csv(double v);

struct Norms {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

/// Conserved cell averages of the fan at time t by 5-point Gauss quadrature.
std::vector<Vector3> reference_averages(const SourceFan& fan, const Grid& g,
                                        double t);

struct ErrorNorms {
  Norms rho;
  Norms u;
  Norms p;
};

/// Primitive-variable error norms of conserved cell means against
/// reference cell averages.
ErrorNorms error_norms(const Grid& g, const std::vector<Vector3>& numerical,
                       const std::vector<Vector3>& reference, double gamma);

struct RunOptions {
  Scheme scheme;
  double h = 0.05;
  double cfl = 0.5;
  std::optional<double> t_end;
  std::optional<double> a;
  std::optional<double> b;
  std::string out_path;
  LimiterOptions limiter;
};

struct RunReport {
  int id = 0;
  Scheme scheme;
  double h = 0.0;
  double t_end = 0.0;
  Norms rho;
  Norms u;
  Norms p;
  double wb_deviation = 0.0;  // max |mean - initial mean| over cells
  double oscillation = 0.0;   // TV(rho) numerical minus reference
  double seconds = 0.0;
  std::string out_path;
  DgField field;
};

RunReport run_test(int id, const RunOptions& opts);

struct ConvergenceRow {
  double h;
  double l1_rho;
  double wb_deviation;
  double ratio;  // previous l1_rho / this l1_rho; NaN on the first row
};

/// h_list must be strictly decreasing.
std::vector<ConvergenceRow> convergence_study(int id, RunOptions opts,
                                              const std::vector<double>& h_list);

void emit_profile(const DgField& field, const std::string& path);
void emit_reference(const SourceFan& fan, double a, double b, double t,
                    int samples, const std::string& path);

}  // namespace dsrc

#endif  // DSRC_HARNESS_HPP
