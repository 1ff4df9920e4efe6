// uvball: evaluate ball kernels and polynomials, run convergence sweeps and
// verification suites.
//
// Exit status: 0 success, 1 tolerance failure, 2 usage or parameter error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uvball/uvball.hpp"
#include "uvball/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_tolerance = 1;
constexpr int exit_usage = 2;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct BallFlags {
  int d = 2;
  double mu = 0.0;
  double lambda = 0.0;

  void attach(CLI::App& app, bool lambda_required = false) {
    app.add_option("--d", d, "dimension (>= 2)")->required();
    app.add_option("--mu", mu, "ball weight exponent (> -1)")->required();
    auto* opt = app.add_option("--lambda", lambda, "sphere mass (>= 0)");
    if (lambda_required) opt->required();
  }
  uvball::BallParams params() const { return {d, mu, lambda}; }
};

uvball::BallPoint point_from(const std::vector<double>& coords, int d, const char* flag) {
  if (static_cast<int>(coords.size()) != d)
    throw uvball::parameter_error(std::string(flag) + " needs " + std::to_string(d) + " comma-separated coordinates");
  return uvball::BallPoint::from_cartesian(coords);
}

uvball::UnitDirection direction_from(const std::vector<double>& coords, int d) {
  if (static_cast<int>(coords.size()) != d)
    throw uvball::parameter_error("--xi needs " + std::to_string(d) + " comma-separated coordinates");
  return uvball::UnitDirection(coords);
}

void print_records(std::ostream& out, const std::vector<uvball::ConvergenceRecord>& rows) {
  out << "n,d,mu,lambda,r,ratio,target,abs_err,rel_err\n";
  for (const auto& r : rows)
    out << r.n << ',' << r.d << ',' << fmt(r.mu) << ',' << fmt(r.lambda) << ',' << fmt(r.r) << ',' << fmt(r.ratio)
        << ',' << fmt(r.target) << ',' << fmt(r.abs_err) << ',' << fmt(r.rel_err) << '\n';
}

void print_table(std::ostream& out, const std::vector<uvball::ConvergenceRecord>& rows) {
  char line[256];
  std::snprintf(line, sizeof line, "%8s  %24s  %24s  %24s\n", "n", "ratio", "target", "rel_err");
  out << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%8ld  %24.17g  %24.17g  %24.17g\n", r.n, r.ratio, r.target, r.rel_err);
    out << line;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal polynomials and Christoffel functions on the unit ball with a sphere mass"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand all subcommand help");

  int exit_code = exit_ok;

  // eval ------------------------------------------------------------------
  auto* eval = app.add_subcommand("eval", "evaluate a single polynomial value");
  eval->require_subcommand(1);

  double alpha = 0.0, beta = 0.0, t = 0.0, mass = 0.0, delta = 0.0, s = 0.0;
  long n = 0, k = 0, j = 0, nu = 1;

  auto* ev_jacobi = eval->add_subcommand("jacobi", "P_n^(alpha,beta)(t)");
  ev_jacobi->add_option("--alpha", alpha)->required();
  ev_jacobi->add_option("--beta", beta)->required();
  ev_jacobi->add_option("--n", n)->required();
  ev_jacobi->add_option("--t", t)->required();
  ev_jacobi->callback([&] {
    if (!(t >= -1.0 && t <= 1.0)) throw uvball::domain_error("--t must lie in [-1, 1]");
    std::cout << fmt(uvball::jacobi_eval(uvball::JacobiParams(alpha, beta), n, t)) << '\n';
  });

  std::string uv_what = "value";
  auto* ev_uvarov = eval->add_subcommand("uvarov", "point-mass modified Jacobi polynomial q_k(t), its norm or kernel");
  ev_uvarov->add_option("--alpha", alpha)->required();
  ev_uvarov->add_option("--beta", beta)->required();
  ev_uvarov->add_option("--mass", mass)->required();
  ev_uvarov->add_option("--k", k)->required();
  ev_uvarov->add_option("--t", t, "evaluation point (value, kernel)");
  ev_uvarov->add_option("--s", s, "second point (kernel)");
  ev_uvarov->add_option("--what", uv_what)->check(CLI::IsMember({"value", "norm", "kernel"}));
  ev_uvarov->callback([&] {
    if (!(t >= -1.0 && t <= 1.0) || !(s >= -1.0 && s <= 1.0)) throw uvball::domain_error("--t, --s must lie in [-1, 1]");
    const uvball::UvarovParams u(uvball::JacobiParams(alpha, beta), mass);
    double v;
    if (uv_what == "norm")
      v = uvball::uvarov_norm(u, k);
    else if (uv_what == "kernel")
      v = uvball::uvarov_kernel(u, k, t, s);
    else
      v = uvball::uvarov_eval(u, k, t);
    std::cout << fmt(v) << '\n';
  });

  auto* ev_gegenbauer = eval->add_subcommand("gegenbauer", "C_k^delta(s)");
  ev_gegenbauer->add_option("--delta", delta)->required();
  ev_gegenbauer->add_option("--k", k)->required();
  ev_gegenbauer->add_option("--s", s)->required();
  ev_gegenbauer->callback([&] { std::cout << fmt(uvball::gegenbauer_eval(delta, k, s)) << '\n'; });

  auto* ev_chebyshev = eval->add_subcommand("chebyshev", "T_k(s)");
  ev_chebyshev->add_option("--k", k)->required();
  ev_chebyshev->add_option("--s", s)->required();
  ev_chebyshev->callback([&] { std::cout << fmt(uvball::chebyshev_eval(k, s)) << '\n'; });

  int hd = 2;
  std::vector<double> xi_coords;
  auto* ev_harmonic = eval->add_subcommand("harmonic", "real spherical harmonic Y_nu^k(xi), d in {2, 3}");
  ev_harmonic->add_option("--d", hd)->required();
  ev_harmonic->add_option("--k", k)->required();
  ev_harmonic->add_option("--nu", nu)->required();
  ev_harmonic->add_option("--xi", xi_coords, "unit vector, comma separated")->required()->delimiter(',');
  ev_harmonic->callback(
      [&] { std::cout << fmt(uvball::harmonic_basis_eval(hd, k, nu, direction_from(xi_coords, hd))) << '\n'; });

  BallFlags basis_flags;
  std::vector<double> x_coords, y_coords;
  bool basis_modified = false;
  auto* ev_basis = eval->add_subcommand("basis", "ball basis polynomial P^n_{j,nu}(x) or Q^n_{j,nu}(x), d in {2, 3}");
  basis_flags.attach(*ev_basis);
  ev_basis->add_option("--n", n)->required();
  ev_basis->add_option("--j", j)->required();
  ev_basis->add_option("--nu", nu)->required();
  ev_basis->add_option("--x", x_coords, "cartesian point, comma separated")->required()->delimiter(',');
  ev_basis->add_flag("--modified", basis_modified, "mass-modified basis Q");
  ev_basis->callback([&] {
    const auto bp = basis_flags.params();
    const auto x = point_from(x_coords, bp.d(), "--x");
    const uvball::RadialIndex idx(n, j);
    const double v = basis_modified ? uvball::modified_basis_eval(bp, idx, nu, x)
                                    : uvball::classical_basis_eval(bp, idx, nu, x);
    std::cout << fmt(v) << '\n';
  });

  // kernel ----------------------------------------------------------------
  BallFlags kernel_flags;
  std::string which = "modified";
  auto* kernel = app.add_subcommand("kernel", "reproducing kernel K_n(x,y), modified kernel, or their difference");
  kernel_flags.attach(*kernel);
  kernel->add_option("--n", n)->required();
  kernel->add_option("--x", x_coords, "cartesian point, comma separated")->required()->delimiter(',');
  kernel->add_option("--y", y_coords, "cartesian point, comma separated")->required()->delimiter(',');
  kernel->add_option("--which", which)->check(CLI::IsMember({"classical", "modified", "difference"}));
  kernel->callback([&] {
    const auto bp = kernel_flags.params();
    const auto x = point_from(x_coords, bp.d(), "--x");
    const auto y = point_from(y_coords, bp.d(), "--y");
    double v;
    if (which == "classical")
      v = uvball::ball_kernel(bp, n, x, y);
    else if (which == "difference")
      v = uvball::ball_kernel_difference(bp, n, x, y);
    else
      v = uvball::ball_kernel_modified(bp, n, x, y);
    std::cout << fmt(v) << '\n';
  });

  // christoffel -----------------------------------------------------------
  BallFlags chr_flags;
  bool chr_classical = false;
  auto* chr = app.add_subcommand("christoffel", "Christoffel function 1 / K_n(x,x)");
  chr_flags.attach(*chr);
  chr->add_option("--n", n)->required();
  chr->add_option("--x", x_coords, "cartesian point, comma separated")->required()->delimiter(',');
  chr->add_flag("--classical", chr_classical, "use the kernel without the sphere mass");
  chr->callback([&] {
    const auto bp = chr_flags.params();
    std::cout << fmt(uvball::christoffel(bp, n, point_from(x_coords, bp.d(), "--x"), !chr_classical)) << '\n';
  });

  // converge --------------------------------------------------------------
  auto* converge = app.add_subcommand("converge", "Christoffel-function convergence sweep");
  converge->require_subcommand(1);
  BallFlags conv_flags;
  long n_max = 10000;
  std::vector<long> schedule;
  double conv_r = 0.5;
  double conv_tol = 0.05;
  std::string out_path;
  auto conv_options = [&](CLI::App* sub, bool interior) {
    conv_flags.attach(*sub, !interior);
    sub->add_option("--nmax", n_max, "largest n; rows at n_max, n_max/2, ... down to 125");
    sub->add_option("--schedule", schedule, "explicit ascending list of n (overrides --nmax)")->delimiter(',');
    if (interior) sub->add_option("--r", conv_r, "radius of the evaluation point r e_1");
    sub->add_option("--tol", conv_tol, "relative tolerance for the last row");
    sub->add_option("--out", out_path, "CSV output file (table on stdout when absent)");
  };
  auto run_conv = [&](uvball::SweepKind kind) {
    uvball::SweepConfig config;
    config.kind = kind;
    config.params = conv_flags.params();
    config.r = kind == uvball::SweepKind::boundary ? 1.0 : conv_r;
    config.schedule = schedule.empty() ? uvball::geometric_schedule(n_max) : schedule;
    const auto rows = uvball::run_sweep(config);
    if (out_path.empty()) {
      print_table(std::cout, rows);
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw uvball::parameter_error("cannot open output file " + out_path);
      print_records(file, rows);
    }
    const auto verdict = uvball::evaluate_sweep(rows, conv_tol);
    std::cout << (verdict.passed ? "PASS" : "FAIL") << " final rel_err " << fmt(verdict.final_rel_err)
              << " (reference " << fmt(verdict.reference_rel_err) << ", tol " << fmt(conv_tol) << ")\n";
    if (!verdict.passed) {
      std::cerr << "uvball: " << verdict.reason << '\n';
      exit_code = exit_tolerance;
    }
  };
  auto* boundary = converge->add_subcommand("boundary", "K~_n(x,x) / C(n+d-1, n) at |x| = 1 against 2/lambda");
  conv_options(boundary, false);
  boundary->callback([&] { run_conv(uvball::SweepKind::boundary); });
  auto* interior = converge->add_subcommand("interior", "K~_n(x,x) / C(n+d, d) at |x| = r < 1 against its limit");
  conv_options(interior, true);
  interior->callback([&] { run_conv(uvball::SweepKind::interior); });

  // verify ----------------------------------------------------------------
  std::string suite = "all";
  std::optional<double> verify_tol;
  double verify_conv_tol = 0.05;
  auto* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"all", "jacobi", "uvarov", "ball", "asymptotics"}));
  verify->add_option("--tol", verify_tol, "override every identity tolerance");
  verify->add_option("--conv-tol", verify_conv_tol, "relative tolerance of the convergence checks");
  verify->callback([&] {
    uvball::verify::Options opt;
    opt.tolerance = verify_tol;
    opt.convergence_tolerance = verify_conv_tol;
    bool all_passed = true;
    for (const auto& report : uvball::verify::run_suites(suite, opt)) {
      for (const auto& c : report.checks) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << report.suite << ": " << c.name << "  error=" << fmt(c.error)
                  << " tol=" << fmt(c.tolerance) << '\n';
      }
      all_passed = all_passed && report.passed();
    }
    if (!all_passed) {
      std::cerr << "uvball: verification failed\n";
      exit_code = exit_tolerance;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    return app.exit(CLI::CallForHelp());
  } catch (const CLI::CallForAllHelp&) {
    return app.exit(CLI::CallForAllHelp());
  } catch (const CLI::ParseError& e) {
    std::cerr << "uvball: " << e.what() << '\n';
    return exit_usage;
  } catch (const uvball::numeric_error& e) {
    std::cerr << "uvball: numeric failure: " << e.what() << '\n';
    return exit_tolerance;
  } catch (const std::invalid_argument& e) {
    std::cerr << "uvball: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::domain_error& e) {
    std::cerr << "uvball: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::out_of_range& e) {
    std::cerr << "uvball: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_code;
}
