#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "waring/asymptotic.hpp"
#include "waring/ball.hpp"
#include "waring/oscillatory.hpp"
#include "waring/serialize.hpp"

namespace waring::cli {

namespace {

enum class Format { pretty, json, csv };

struct Common {
  Format format = Format::pretty;
  std::string output;  // empty = stdout
  double tol = 1e-9;
  std::int64_t Q = 1000;
  std::int64_t P = 50;
  double alpha = 0.25;
  std::uint64_t seed = 0;
};

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{
              {"pretty", Format::pretty}, {"json", Format::json}, {"csv", Format::csv}},
          CLI::ignore_case))
      ->default_str("pretty");
  cmd->add_option("-o,--output", c.output, "write the report to this file");
}

std::optional<std::vector<std::int64_t>> parse_coeffs(const std::vector<std::int64_t>& raw) {
  if (raw.empty()) return std::nullopt;
  return raw;
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw std::invalid_argument("cannot open output file: " + c.output);
  out << text << '\n';
}

std::string complex_pretty(const Complex& v) {
  return format_float(v.real()) + (v.imag() < 0 ? " - " : " + ") +
         format_float(std::abs(v.imag())) + "i  (|.| = " + format_float(std::abs(v)) +
         ")";
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"circle-method toolkit for representation counts by sums of k-th powers"};
  app.require_subcommand(1);

  Common c;
  std::function<void()> action;

  int k = 2, d = 2;
  std::int64_t N = 1, X = 0, a = 1, q = 1, M = 0;
  double xi = 0.0, theta = 0.0;
  std::vector<std::int64_t> coeffs_raw;
  bool brute = false, all_rows = false, dft_check = false, integral_check = false;
  std::string bound_name;
  std::vector<std::int64_t> x_list;
  std::vector<double> theta_list;
  std::int64_t q_max = 50, samples = 200;
  std::int64_t n_from = 0, n_to = 0, n_step = 1;
  double classify_xi = -1.0, dirichlet_xi = -1.0;

  // count: exact representation count (DP ladder), optional brute-force path
  {
    auto* cmd = app.add_subcommand("count", "exact count of representations of N");
    cmd->add_option("-k", k, "power")->required();
    cmd->add_option("-d", d, "number of summands")->required();
    cmd->add_option("-N", N, "target")->required();
    cmd->add_option("--coeffs", coeffs_raw, "coefficients c_1,...,c_d")->delimiter(',');
    cmd->add_flag("--brute", brute, "exhaustive enumeration instead of the DP");
    cmd->add_flag("--all-rows", all_rows, "serialize the whole ladder, not just row d");
    add_format(cmd, c);
    cmd->callback([&] {
      action = [&] {
        WaringInstance inst(k, d, N, parse_coeffs(coeffs_raw));
        if (brute) {
          emit(c, count_bruteforce(inst).get_str());
          return;
        }
        const auto table = count_exact(inst);
        if (c.format == Format::json)
          emit(c, to_json(table, all_rows));
        else if (c.format == Format::csv)
          emit(c, "k,d,N,count\n" + std::to_string(k) + "," + std::to_string(d) + "," +
                      std::to_string(N) + "," + table.total().get_str());
        else
          emit(c, table.total().get_str());
      };
    });
  }

  // ball: lattice points in the k-norm ball vs its volume
  {
    auto* cmd = app.add_subcommand("ball", "lattice count and volume of the k-ball");
    cmd->add_option("-k", k, "power")->required();
    cmd->add_option("-d", d, "dimension")->required();
    cmd->add_option("-N", N, "k-th power of the radius")->required();
    add_format(cmd, c);
    cmd->callback([&] {
      action = [&] {
        const auto b = ball_count(k, d, N);
        if (c.format == Format::json)
          emit(c, to_json(b));
        else
          emit(c, "latticeCount = " + b.latticeCount.get_str() +
                      "\nvolume = " + format_float(b.volume) +
                      "\nratio = " + format_float(b.ratio));
      };
    });
  }

  // weyl: f_X(xi)
  {
    auto* cmd = app.add_subcommand("weyl", "Weyl sum f_X(xi)");
    cmd->add_option("-k", k, "power")->required();
    cmd->add_option("-X", X, "summation length")->required();
    cmd->add_option("--xi", xi, "frequency")->required();
    add_format(cmd, c);
    cmd->callback([&] {
      action = [&] {
        const auto v = weyl_sum(k, X, xi);
        emit(c, c.format == Format::json ? to_json(v) : complex_pretty(v));
      };
    });
  }

  // gauss: G(a/q)
  {
    auto* cmd = app.add_subcommand("gauss", "Gauss sum G(a/q)");
    cmd->add_option("-k", k, "power")->required();
    cmd->add_option("-a", a, "numerator")->required();
    cmd->add_option("-q", q, "denominator")->required();
    add_format(cmd, c);
    cmd->callback([&] {
      action = [&] {
        const auto v = gauss_sum(k, a, q);
        emit(c, c.format == Format::json ? to_json(v) : complex_pretty(v));
      };
    });
  }

  // vint: v(theta)
  {
    auto* cmd = app.add_subcommand("vint", "oscillatory integral v(theta) over [0, X]");
    cmd->add_option("-k", k, "power")->required();
    cmd->add_option("-X", X, "upper limit")->required();
    cmd->add_option("--theta", theta, "frequency")->required();
    cmd->add_option("--tol", c.tol, "absolute tolerance")->capture_default_str();
    add_format(cmd, c);
    cmd->callback([&] {
      action = [&] {
        const auto v = v_integral(k, X, theta, c.tol);
        emit(c, c.format == Format::json ? to_json(v) : complex_pretty(v));
      };
    });
  }

  // hua: exact high moment of |f_X|
  {
    auto* cmd = app.add_subcommand("hua", "exact k(k+1)-th moment of |f_X|");
    cmd->add_option("-k", k, "power")->required();
    cmd->add_option("-X", X, "summation length")->required();
    cmd->add_option("-M", M, "sample count (default: threshold + 1)");
    add_format(cmd, c);
    cmd->callback([&] {
      action = [&] {
        const auto m = hua_moment(k, X, M > 0 ? std::optional<std::int64_t>(M) : std::nullopt);
        emit(c, c.format == Format::json
                    ? to_json(m)
                    : format_float(m.value) + "  (samples = " + std::to_string(m.samples) +
                          ", threshold = " + std::to_string(m.threshold) + ")");
      };
    });
  }

  // bounds: measured suprema against the paper-shaped bounds
  {
    auto* cmd = app.add_subcommand("bounds", "measure exponential-sum bound shapes on a grid");
    cmd->add_option("--bound", bound_name, "weyl_minor | gauss_decay | hua_moment | v_decay")
        ->required();
    cmd->add_option("-k", k, "power")->capture_default_str();
    cmd->add_option("-X", X, "summation length (weyl_minor, v_decay)");
    cmd->add_option("--q-max", q_max, "denominator cap (gauss_decay)")->capture_default_str();
    cmd->add_option("--alpha", c.alpha, "arc exponent (weyl_minor)")->capture_default_str();
    cmd->add_option("--samples", samples, "minor-arc sample count (weyl_minor)")
        ->capture_default_str();
    cmd->add_option("--seed", c.seed, "RNG seed (weyl_minor)")->capture_default_str();
    cmd->add_option("--X-list", x_list, "summation lengths (hua_moment)")->delimiter(',');
    cmd->add_option("--thetas", theta_list, "frequencies (v_decay)")->delimiter(',');
    add_format(cmd, c);
    cmd->callback([&] {
      action = [&] {
        BoundCheckReport report;
        if (bound_name == "weyl_minor") {
          report = measure_bound(WeylMinorGrid{k, X > 0 ? X : 64, c.alpha,
                                               static_cast<std::size_t>(samples), c.seed});
        } else if (bound_name == "gauss_decay") {
          report = measure_bound(GaussDecayGrid{k, q_max});
        } else if (bound_name == "hua_moment") {
          HuaMomentGrid grid;
          grid.k = k;
          if (!x_list.empty()) grid.Xs = x_list;
          report = measure_bound(grid);
        } else if (bound_name == "v_decay") {
          VDecayGrid grid;
          grid.k = k;
          grid.X = X > 0 ? X : 100;
          if (theta_list.empty()) {
            grid.thetas.push_back(0.0);
            for (double t = 1e-6; t <= 1.0; t *= 2.0) grid.thetas.push_back(t);
          } else {
            grid.thetas = theta_list;
          }
          report = measure_bound(grid);
        } else {
          throw std::invalid_argument("unknown --bound: " + bound_name);
        }
        if (c.format == Format::csv)
          emit(c, bound_report_csv_header() + "\n" + bound_report_csv_row(report));
        else
          emit(c, to_json(report));
      };
    });
  }

  // arcs: decomposition, membership classification, Dirichlet approximation
  {
    auto* cmd = app.add_subcommand("arcs", "major-arc decomposition for (X, alpha)");
    cmd->add_option("-k", k, "power")->capture_default_str();
    cmd->add_option("-X", X, "scale")->required();
    cmd->add_option("--alpha", c.alpha, "arc exponent")->capture_default_str();
    cmd->add_option("--classify", classify_xi, "report major/minor membership of this xi");
    cmd->add_option("--dirichlet", dirichlet_xi, "rational approximation of this xi");
    cmd->add_option("--Q", c.Q, "denominator cap for --dirichlet")->capture_default_str();
    add_format(cmd, c);
    cmd->callback([&] {
      action = [&] {
        if (dirichlet_xi >= 0.0) {
          const auto r = dirichlet_approx(dirichlet_xi, c.Q);
          emit(c, std::to_string(r.approx.a) + "/" + std::to_string(r.approx.q) +
                      (r.guaranteed ? "" : "  (fallback: inequality not certified)"));
          return;
        }
        if (classify_xi >= 0.0) {
          emit(c, is_major(classify_xi, k, X, c.alpha) ? "major" : "minor");
          return;
        }
        emit(c, to_json(build_arcs(k, X, c.alpha)));
      };
    });
  }

  // circle: exact circle integral via the Fourier ladder
  {
    auto* cmd = app.add_subcommand("circle", "circle integral = ladder coefficient at N");
    cmd->add_option("-k", k, "power")->required();
    cmd->add_option("-d", d, "number of summands")->required();
    cmd->add_option("-N", N, "target")->required();
    cmd->add_option("-X", X, "restrict summands to n <= X (default floor(N^(1/k)))");
    cmd->add_option("--coeffs", coeffs_raw, "coefficients")->delimiter(',');
    cmd->add_flag("--dft-check", dft_check, "also report the sampled-mean cross check");
    add_format(cmd, c);
    cmd->callback([&] {
      action = [&] {
        const auto cf = parse_coeffs(coeffs_raw);
        const auto ladder = X > 0 ? FourierLadder::build(k, d, X, cf)
                                  : FourierLadder::build_for_target(k, d, N, cf);
        std::string text = circle_integral(ladder, N).get_str();
        if (dft_check)
          text += "\ndft_sampled_mean = " +
                  format_float(circle_integral_dft_check(ladder, N));
        emit(c, text);
      };
    });
  }

  // singular: truncated series + Euler product
  {
    auto* cmd = app.add_subcommand("singular", "singular series, both forms");
    cmd->add_option("-k", k, "power")->required();
    cmd->add_option("-d", d, "number of summands")->required();
    cmd->add_option("-N", N, "target")->required();
    cmd->add_option("--Q", c.Q, "series truncation")->capture_default_str();
    cmd->add_option("--P", c.P, "Euler product prime cap")->capture_default_str();
    cmd->add_option("--tol", c.tol, "local-density stabilization tolerance")
        ->capture_default_str();
    cmd->add_option("--coeffs", coeffs_raw, "coefficients")->delimiter(',');
    add_format(cmd, c);
    cmd->callback([&] {
      action = [&] {
        const auto s = euler_product(k, d, N, c.P, c.tol, c.Q, parse_coeffs(coeffs_raw));
        if (c.format == Format::csv)
          emit(c, singular_csv_header() + "\n" + singular_csv_row(s));
        else if (c.format == Format::json)
          emit(c, to_json(s));
        else
          emit(c, "truncatedSum(Q=" + std::to_string(s.Q) +
                      ") = " + format_float(s.truncatedSum) + "\neulerProduct(P=" +
                      std::to_string(s.P) + ") = " + format_float(s.eulerProduct) +
                      "\ntailEstimate = " + format_float(s.tailEstimate));
      };
    });
  }

  // mainterm: Gamma main term, optional singular-integral identity check
  {
    auto* cmd = app.add_subcommand("mainterm", "Gamma-factor main term");
    cmd->add_option("-k", k, "power")->required();
    cmd->add_option("-d", d, "number of summands")->required();
    cmd->add_option("-N", N, "target")->required();
    cmd->add_option("--coeffs", coeffs_raw, "coefficients")->delimiter(',');
    cmd->add_flag("--integral-check", integral_check,
                  "verify the v^d singular-integral identity numerically");
    cmd->add_option("--tol", c.tol, "identity check tolerance")->capture_default_str();
    add_format(cmd, c);
    cmd->callback([&] {
      action = [&] {
        const auto mt = main_term(k, d, N, parse_coeffs(coeffs_raw));
        std::string text = c.format == Format::json
                               ? to_json(mt)
                               : "value = " + format_float(mt.value) +
                                     "\nlogValue = " + format_float(mt.logValue);
        if (integral_check) {
          const auto chk = singular_integral_check(k, d, N, std::max(c.tol, 1e-6));
          text += "\nintegral = " + format_float(chk.integral) +
                  "\ndeviation = " + format_float(chk.deviation);
        }
        emit(c, text);
      };
    });
  }

  // cascade: the three approximations of the major-arc term
  {
    auto* cmd = app.add_subcommand("cascade", "approximation cascade A1, A2, A3");
    cmd->add_option("-k", k, "power")->required();
    cmd->add_option("-d", d, "number of summands")->required();
    cmd->add_option("-N", N, "target")->required();
    cmd->add_option("--alpha", c.alpha, "arc exponent")->capture_default_str();
    cmd->add_option("--Q", c.Q, "series truncation for the full series")->capture_default_str();
    cmd->add_option("--P", c.P, "Euler product prime cap")->capture_default_str();
    cmd->add_option("--tol", c.tol, "quadrature tolerance")->capture_default_str();
    cmd->add_option("--coeffs", coeffs_raw, "coefficients")->delimiter(',');
    add_format(cmd, c);
    cmd->callback([&] {
      action = [&] {
        const auto cf = parse_coeffs(coeffs_raw);
        const double a1 = approx_A1(k, d, N, c.alpha, c.tol, cf);
        const double a2 = approx_A2(k, d, N, c.alpha, cf);
        const double a3 = approx_A3(k, d, N, c.P, c.tol, cf);
        const double mt = main_term(k, d, N, cf).value;
        std::ostringstream text;
        text << "A1 = " << format_float(a1) << "\nA2 = " << format_float(a2)
             << "\nA3 = " << format_float(a3)
             << "\n|A1-A2|/mainTerm = " << format_float(std::abs(a1 - a2) / mt)
             << "\n|A2-A3|/mainTerm = " << format_float(std::abs(a2 - a3) / mt);
        emit(c, text.str());
      };
    });
  }

  // verify: full record for one instance
  {
    auto* cmd = app.add_subcommand("verify", "end-to-end verification record");
    cmd->add_option("-k", k, "power")->required();
    cmd->add_option("-d", d, "number of summands")->required();
    cmd->add_option("-N", N, "target")->required();
    cmd->add_option("--alpha", c.alpha, "arc exponent")->capture_default_str();
    cmd->add_option("--Q", c.Q, "series truncation")->capture_default_str();
    cmd->add_option("--P", c.P, "Euler product prime cap")->capture_default_str();
    cmd->add_option("--tol", c.tol, "tolerances")->capture_default_str();
    cmd->add_option("--coeffs", coeffs_raw, "coefficients")->delimiter(',');
    add_format(cmd, c);
    cmd->callback([&] {
      action = [&] {
        VerifyTolerances tols;
        tols.quadTol = c.tol;
        tols.chiTol = c.tol;
        tols.Q = c.Q;
        tols.P = c.P;
        const auto rec = verify(WaringInstance(k, d, N, parse_coeffs(coeffs_raw)),
                                c.alpha, tols);
        if (c.format == Format::csv)
          emit(c, verification_csv_header() + "\n" + verification_csv_row(rec));
        else
          emit(c, to_json(rec));
      };
    });
  }

  // scan: one record per grid point
  {
    auto* cmd = app.add_subcommand("scan", "verification scan over an N grid");
    cmd->add_option("-k", k, "power")->required();
    cmd->add_option("-d", d, "number of summands")->required();
    cmd->add_option("--N-from", n_from, "grid start")->required();
    cmd->add_option("--N-to", n_to, "grid end (inclusive)")->required();
    cmd->add_option("--step", n_step, "grid step")->capture_default_str();
    cmd->add_option("--alpha", c.alpha, "arc exponent")->capture_default_str();
    cmd->add_option("--Q", c.Q, "series truncation")->capture_default_str();
    cmd->add_option("--P", c.P, "Euler product prime cap")->capture_default_str();
    cmd->add_option("--tol", c.tol, "tolerances")->capture_default_str();
    add_format(cmd, c);
    cmd->callback([&] {
      action = [&] {
        if (n_step < 1) throw std::invalid_argument("scan: --step must be >= 1");
        std::vector<std::int64_t> grid;
        for (std::int64_t n = n_from; n <= n_to; n += n_step) grid.push_back(n);
        VerifyTolerances tols;
        tols.quadTol = c.tol;
        tols.chiTol = c.tol;
        tols.Q = c.Q;
        tols.P = c.P;
        const auto summary = scan(k, d, grid, c.alpha, tols);
        if (c.format == Format::json) {
          emit(c, to_json(summary.records));
        } else {
          std::ostringstream text;
          text << verification_csv_header();
          for (const auto& r : summary.records) text << '\n' << verification_csv_row(r);
          if (c.format == Format::pretty) {
            text << "\n# median |ratio-1| lower/upper: "
                 << format_float(summary.ratioDevMedianLower) << " / "
                 << format_float(summary.ratioDevMedianUpper);
            for (int i = 0; i < 3; ++i)
              text << "\n# median delta" << (i + 1) << " lower/upper: "
                   << format_float(summary.deltaMedianLower[i]) << " / "
                   << format_float(summary.deltaMedianUpper[i]);
          }
          emit(c, text.str());
        }
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    action();
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace waring::cli
