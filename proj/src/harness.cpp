#include "dsrc/harness.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "dsrc/errors.hpp"
#include "dsrc/stationary.hpp"

namespace dsrc {
namespace {

constexpr std::string_view kTable =
    "1 (0.4,0.2,0.4) (0.6,0.5,0.6) (0.641338,0.654881,0.62495) single source stationary wave\n"
    "2 (0.2,0.0,0.2) (1.0,1.0,1.0) (0.933943,0.411564,1.27555) Type1\n"
    "3 (0.1,0.1,0.2) (1.0,2.0,1.0) (1.888,2.53245,2.17219) Type2\n"
    "4 (0.1,-0.2,0.2) (1.0,1.0,1.0) (0.378535,2.07562,0.46455) Type3\n"
    "5 (0.1,0.1,0.2) (1.0,1.74007,1.0) (1.65217,1.71963,1.77224) Type4\n"
    "6 (0.1,0.2,-0.2) (1.0,0.8,1.0) (1.27959,1.38758,0.671459) Type5\n"
    "7 (0.1,0.1,-0.1) (1.0,0.8,1.0) (0.468365,1.92334,0.450956) Type6\n"
    "8 (0.3,0.3,0.3) (0.6,0.8,0.6) (0.459223,1.45488,0.507773) Type7\n";

constexpr std::array<double, 8> kEndTimes{1.0, 3.0, 2.0, 3.0,
                                          4.0, 4.0, 4.0, 3.0};

constexpr std::array<double, 5> kGauss5Nodes{
    -0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
    0.9061798459386640};
constexpr std::array<double, 5> kGauss5Weights{
    0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
    0.4786286704993665, 0.2369268850561891};

std::array<double, 3> parse_triple(std::istringstream& in, int line) {
  std::string tok;
  in >> tok;
  std::array<double, 3> v{};
  if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')') {
    throw ConfigError("table line " + std::to_string(line) +
                      ": expected (x,y,z), got '" + tok + "'");
  }
  const std::string body = tok.substr(1, tok.size() - 2);
  const char* p = body.c_str();
  for (int i = 0; i < 3; ++i) {
    char* end = nullptr;
    v[i] = std::strtod(p, &end);
    if (end == p || (i < 2 && *end != ',') || (i == 2 && *end != '\0')) {
      throw ConfigError("table line " + std::to_string(line) +
                        ": malformed triple '" + tok + "'");
    }
    p = end + 1;
  }
  return v;
}

std::string triple(double x, double y, double z) {
  return "(" + format_short(x) + "," + format_short(y) + "," +
         format_short(z) + ")";
}

Vector3 primitive(const Vector3& q, double gamma) {
  const GasState s = GasState::from_conserved(q, gamma);
  return {s.rho(), s.u(), s.p()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error("failed writing '" + path + "'");
}

void append_row(std::string& text, double x, const GasState& s) {
  text += format_csv(x) + "," + format_csv(s.rho()) + "," +
          format_csv(s.u()) + "," + format_csv(s.p()) + "," +
          format_csv(s.total_energy()) + "\n";
}

double total_variation(const std::vector<double>& v) {
  double tv = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) tv += std::abs(v[i] - v[i - 1]);
  return tv;
}

}  // namespace

std::string_view table_text() { return kTable; }

std::vector<TestCase> parse_table(std::string_view text) {
  std::vector<TestCase> cases;
  std::istringstream lines{std::string(text)};
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    ++n;
    if (line.empty()) continue;
    std::istringstream in(line);
    TestCase tc;
    if (!(in >> tc.id)) {
      throw ConfigError("table line " + std::to_string(n) + ": missing id");
    }
    const auto k = parse_triple(in, n);
    const auto l = parse_triple(in, n);
    const auto r = parse_triple(in, n);
    std::getline(in >> std::ws, tc.structure);
    tc.coeffs = SourceCoefficients(k[0], k[1], k[2]);
    tc.left = GasState(l[0], l[1], l[2]);
    tc.right = GasState(r[0], r[1], r[2]);
    if (tc.id >= 1 && tc.id <= static_cast<int>(kEndTimes.size())) {
      tc.end_time = kEndTimes[tc.id - 1];
    }
    cases.push_back(tc);
  }
  return cases;
}

std::string serialize_table(const std::vector<TestCase>& cases) {
  std::string out;
  for (const TestCase& tc : cases) {
    out += std::to_string(tc.id) + " " +
           triple(tc.coeffs.k1(), tc.coeffs.k2(), tc.coeffs.k3()) + " " +
           triple(tc.left.rho(), tc.left.u(), tc.left.p()) + " " +
           triple(tc.right.rho(), tc.right.u(), tc.right.p()) + " " +
           tc.structure + "\n";
  }
  return out;
}

const std::vector<TestCase>& test_registry() {
  static const std::vector<TestCase> cases = parse_table(kTable);
  return cases;
}

const TestCase& test_case(int id) {
  const auto& cases = test_registry();
  if (id < 1 || id > static_cast<int>(cases.size())) {
    throw ConfigError("unknown test id " + std::to_string(id) +
                      " (expected 1..8)");
  }
  return cases[id - 1];
}

GasState initial_right(const TestCase& tc) {
  if (tc.id == 1) return forward_curve(tc.left, tc.coeffs, Branch::Subsonic);
  return tc.right;
}

SourceFan reference_fan(const TestCase& tc) {
  return compose_reference_fan(tc.left, initial_right(tc), tc.coeffs);
}

std::string_view scheme_name(const Scheme& s) {
  switch (s.kind) {
    case SchemeKind::Splitting: return "splitting";
    case SchemeKind::KT: return s.kt_corrections ? "kt" : "kt-nocorr";
    case SchemeKind::SolverBased: return "solver";
  }
  return "?";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "splitting") return {SchemeKind::Splitting, true};
  if (name == "kt") return {SchemeKind::KT, true};
  if (name == "kt-nocorr") return {SchemeKind::KT, false};
  if (name == "solver") return {SchemeKind::SolverBased, true};
  throw ConfigError("unknown scheme '" + std::string(name) +
                    "' (expected splitting, kt, kt-nocorr or solver)");
}

std::string format_short(double v) {
  char buf[32];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  std::string s(buf);
  if (s.find_first_of(".en") == std::string::npos) s += ".0";
  return s;
}

std::string format_csv(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<Vector3> reference_averages(const SourceFan& fan, const Grid& g,
                                        double t) {
  std::vector<Vector3> avg(g.n_cells);
  for (int j = 0; j < g.n_cells; ++j) {
    Vector3 sum = Vector3::Zero();
    for (std::size_t q = 0; q < kGauss5Nodes.size(); ++q) {
      const double x = g.center(j) + 0.5 * g.h * kGauss5Nodes[q];
      GasState s = x < 0.0 ? fan.left : fan.right;
      if (t > 0.0) s = sample_source_fan(fan, x / t);
      sum += 0.5 * kGauss5Weights[q] * to_conserved(s);
    }
    avg[j] = sum;
  }
  return avg;
}

ErrorNorms error_norms(const Grid& g, const std::vector<Vector3>& numerical,
                       const std::vector<Vector3>& reference, double gamma) {
  if (numerical.size() != reference.size() ||
      numerical.size() != static_cast<std::size_t>(g.n_cells)) {
    throw Error("error_norms: size mismatch");
  }
  ErrorNorms out;
  std::array<Norms*, 3> norms{&out.rho, &out.u, &out.p};
  for (std::size_t j = 0; j < numerical.size(); ++j) {
    const Vector3 num = primitive(numerical[j], gamma);
    const Vector3 exact = primitive(reference[j], gamma);
    for (int v = 0; v < 3; ++v) {
      const double e = std::abs(num[v] - exact[v]);
      norms[v]->l1 += g.h * e;
      norms[v]->l2 += g.h * e * e;
      norms[v]->linf = std::max(norms[v]->linf, e);
    }
  }
  for (Norms* n : norms) n->l2 = std::sqrt(n->l2);
  return out;
}

RunReport run_test(int id, const RunOptions& opts) {
  const TestCase& tc = test_case(id);
  const Grid grid = Grid::uniform(opts.a.value_or(tc.a),
                                  opts.b.value_or(tc.b), opts.h);
  const double t_end = opts.t_end.value_or(tc.end_time);
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
    throw ConfigError("end time must be finite and non-negative");
  }
  const GasState right = initial_right(tc);
  const DgField initial = riemann_field(grid, tc.left, right);

  const auto start = std::chrono::steady_clock::now();
  DgField field = advance(initial, t_end, opts.cfl, tc.coeffs, opts.scheme,
                          opts.limiter);
  const auto stop = std::chrono::steady_clock::now();

  RunReport rep;
  rep.id = id;
  rep.scheme = opts.scheme;
  rep.h = grid.h;
  rep.t_end = t_end;
  rep.seconds = std::chrono::duration<double>(stop - start).count();

  const SourceFan fan = compose_reference_fan(tc.left, right, tc.coeffs);
  const std::vector<Vector3> ref = reference_averages(fan, grid, t_end);
  std::vector<Vector3> means(grid.n_cells);
  std::vector<double> rho_num(grid.n_cells);
  std::vector<double> rho_ref(grid.n_cells);
  for (int j = 0; j < grid.n_cells; ++j) {
    means[j] = field.mean(j);
    rho_num[j] = means[j][0];
    rho_ref[j] = ref[j][0];
    rep.wb_deviation =
        std::max(rep.wb_deviation,
                 (field.mean(j) - initial.mean(j)).cwiseAbs().maxCoeff());
  }
  const ErrorNorms e = error_norms(grid, means, ref, field.gamma);
  rep.rho = e.rho;
  rep.u = e.u;
  rep.p = e.p;
  rep.oscillation = total_variation(rho_num) - total_variation(rho_ref);

  if (!opts.out_path.empty()) {
    emit_profile(field, opts.out_path);
    rep.out_path = opts.out_path;
  }
  rep.field = std::move(field);
  return rep;
}

std::vector<ConvergenceRow> convergence_study(
    int id, RunOptions opts, const std::vector<double>& h_list) {
  if (h_list.empty()) throw ConfigError("empty h list");
  for (std::size_t i = 1; i < h_list.size(); ++i) {
    if (!(h_list[i] < h_list[i - 1])) {
      throw ConfigError("h list must be strictly decreasing");
    }
  }
  opts.out_path.clear();
  std::vector<ConvergenceRow> rows;
  for (double h : h_list) {
    opts.h = h;
    const RunReport rep = run_test(id, opts);
    const double ratio = rows.empty()
                             ? std::numeric_limits<double>::quiet_NaN()
                             : rows.back().l1_rho / rep.rho.l1;
    rows.push_back({h, rep.rho.l1, rep.wb_deviation, ratio});
  }
  return rows;
}

void emit_profile(const DgField& field, const std::string& path) {
  std::string text = "x,rho,u,p,E\n";
  for (int j = 0; j < field.grid.n_cells; ++j) {
    append_row(text, field.grid.center(j), field.mean_state(j));
  }
  write_file(path, text);
}

void emit_reference(const SourceFan& fan, double a, double b, double t,
                    int samples, const std::string& path) {
  if (samples < 1) throw ConfigError("sample count must be positive");
  if (!(a < b)) throw ConfigError("domain must satisfy a < b");
  std::string text = "x,rho,u,p,E\n";
  const double dx = (b - a) / samples;
  for (int i = 0; i < samples; ++i) {
    const double x = a + (i + 0.5) * dx;
    GasState s = x < 0.0 ? fan.left : fan.right;
    if (t > 0.0) {
      s = sample_source_fan(fan, x / t);
    } else if (x == 0.0) {
      s = fan.plus;
    }
    append_row(text, x, s);
  }
  write_file(path, text);
}

}  // namespace dsrc
