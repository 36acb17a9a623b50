#include "CLI11.hpp"
#include "json.hpp"
#include "ptc/greens.hpp"
#include "ptc/kernel.hpp"
#include "ptc/perturbation.hpp"
#include "ptc/quartic_nonpert.hpp"
#include "ptc/special_functions.hpp"
#include "ptc/spectral.hpp"
#include "ptc/suites.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

namespace fs = std::filesystem;
using namespace ptc;

namespace {

// Invalid user input: exit status 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Grid1 {
  double a = 0, b = 0;
  int n = 0;
  double at(int i) const { return n == 1 ? a : a + (b - a) * i / (n - 1); }
};

Grid1 parse_grid(const std::string& s) {
  Grid1 g;
  char c1 = 0, c2 = 0;
  std::string rest;
  std::istringstream is(s);
  if (!(is >> g.a >> c1 >> g.b >> c2 >> g.n) || c1 != ':' || c2 != ':' || (is >> rest) || g.n < 1 || g.n > 2001)
    throw ConfigError("grid must be a:b:n with 1 <= n <= 2001, got '" + s + "'");
  return g;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot open '" + path + "' for writing");
  f.precision(17);
  return f;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  open_out(path) << text;
}

int emit_report(const VerificationReport& rep, const std::string& out) {
  write_text(out, rep.to_json().dump(2) + "\n");
  std::cerr << rep.summary();
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construction and verification of the C operator of PT-symmetric oscillators"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  // verify
  auto* verify = app.add_subcommand("verify", "run the verification suites and write a JSON report");
  std::string profile = "quick", verify_out = "-";
  std::uint64_t seed = 42;
  bool mutate = false;
  verify->add_option("--profile", profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--seed", seed, "seed of the random trial coefficients");
  verify->add_option("--out", verify_out, "report path, - for stdout");
  verify->add_flag("--mutate", mutate, "corrupt one coefficient of the cubic table (mutation test)");

  // perturb
  auto* perturb = app.add_subcommand("perturb", "dump a perturbative eigenfunction expansion");
  std::string model_name = "cubic";
  int level = 0, order = -1;
  perturb->add_option("--model", model_name, "cubic or quartic")->check(CLI::IsMember({"cubic", "quartic"}));
  perturb->add_option("--n", level, "level index")->check(CLI::Range(0, 60));
  perturb->add_option("--order", order, "eps order (default: the model's full order)");

  // c-op
  auto* cop = app.add_subcommand("c-op", "build the C kernel or verify its identities");
  int c_order = 3;
  std::string emit, cop_out = "-";
  bool cop_verify = false;
  cop->add_option("--order", c_order, "eps order")->check(CLI::Range(0, 4));
  cop->add_option("--emit", emit, "write the kernel term list to this path");
  cop->add_flag("--verify", cop_verify, "run composition, eigenfunction and CP checks");
  cop->add_option("--out", cop_out, "report path for --verify");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "solve for eigenpairs on the model contour");
  std::string spec_model = "cubic", spec_out = "spectrum.json";
  double spec_eps = 0.05;
  int spec_levels = 4;
  spectrum->add_option("--model", spec_model, "cubic or quartic")->check(CLI::IsMember({"cubic", "quartic"}));
  spectrum->add_option("--eps", spec_eps, "coupling");
  spectrum->add_option("--levels", spec_levels, "number of levels")->check(CLI::Range(1, 11));
  spectrum->add_option("--out", spec_out, "JSON path; eigenfunction grids go next to it");

  // greens
  auto* greens = app.add_subcommand("greens", "tabulate G_k on a square grid");
  int g_order = 0;
  std::string g_grid = "-2:2:41", g_out = "-";
  bool g_derived = false;
  greens->add_option("--order", g_order, "eps order")->check(CLI::Range(0, 3));
  greens->add_option("--grid", g_grid, "a:b:n in each variable");
  greens->add_option("--out", g_out, "CSV path, - for stdout");
  greens->add_flag("--rederived", g_derived, "use the re-derived third order");

  // quartic-nonpert
  auto* qnp = app.add_subcommand("quartic-nonpert", "nonperturbative part of the quartic C operator");
  double q_eps = 0.1;
  int q_n = 0, q_terms = 0;
  std::string q_grid = "-1:1:21", q_out = "-";
  bool q_validate = false;
  qnp->add_option("--eps", q_eps, "coupling");
  qnp->add_option("--xy-grid", q_grid, "a:b:n in each variable");
  qnp->add_option("--terms", q_terms, "terms in the sum (default max(40, ceil(12/eps)))");
  qnp->add_option("--out", q_out, "CSV or report path, - for stdout");
  qnp->add_flag("--validate", q_validate, "compare with the solver eigenfunction");
  qnp->add_option("--n", q_n, "level for --validate");

  // special (hidden)
  auto* special = app.add_subcommand("special", "");
  bool probe = false;
  special->add_flag("--probe", probe, "dump sample tables");
  special->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      SuiteOptions opt;
      opt.profile = parse_profile(profile);
      opt.seed = seed;
      SymbolicTable bad;
      if (mutate) {
        bad = mutated_cubic_table();
        opt.cubic_table = &bad;
      }
      VerificationReport rep = run_all(opt);
      return emit_report(rep, verify_out);
    }

    if (*perturb) {
      Model m = parse_model(model_name);
      int ord = order < 0 ? max_order(m) : order;
      if (ord > max_order(m)) throw ConfigError("order exceeds " + std::to_string(max_order(m)) + " for this model");
      auto wf = instantiate(symbolic_table(m), level);
      auto e = energy_series(symbolic_table(m), level);
      std::ostringstream os;
      os << "# model " << model_name << " n " << level << " order " << ord << "\n";
      os << "# phi_n = i^n a_n pi^{-1/4} (2^n n!)^{-1/2} e^{-x^2/2} [bracket]\n";
      for (int k = 0; k <= ord; ++k) {
        os << "# energy eps^" << k << " " << to_text(e[k]) << "\n";
        os << "# a eps^" << k << " " << to_text(wf.a[k]) << "\n";
      }
      for (int k = 0; k <= ord; ++k) os << "# bracket eps^" << k << "\n" << to_text(wf.bracket[k]);
      std::cout << os.str();
      return 0;
    }

    if (*cop) {
      DeltaKernel c = c_order <= 3 ? c_from_eigenfunctions(c_order) : exponentiated_c(c_order);
      if (!emit.empty()) write_text(emit, to_text(c));
      if (cop_verify) {
        VerificationReport rep;
        rep.merge(kernel_compose_check(c, 12), "squared");
        if (c_order <= 3)
          for (int n = 0; n <= 8; ++n) rep.merge(kernel_eigencheck(c, n), "eigen_n" + std::to_string(n));
        rep.merge(cp_pc_check(c), "cp_pc");
        return emit_report(rep, cop_out);
      }
      if (emit.empty()) std::cout << pretty(c) << "\n";
      return 0;
    }

    if (*spectrum) {
      Model m = parse_model(spec_model);
      ContourSpec contour = m == Model::Cubic ? ContourSpec::cubic() : ContourSpec::quartic(spec_eps);
      auto pairs = solve_shooting_levels(m, spec_eps, spec_levels, contour);
      fs::path out(spec_out);
      std::string stem = out.stem().string();
      nlohmann::json j;
      j["model"] = spec_model;
      j["eps"] = spec_eps;
      j["levels"] = nlohmann::json::array();
      for (const auto& p : pairs) {
        fs::path csv = out.parent_path() / (stem + "_n" + std::to_string(p.n) + ".csv");
        auto f = open_out(csv.string());
        f << "re_x,im_x,re_phi,im_phi\n";
        for (std::size_t k = 0; k < p.grid.size(); ++k)
          f << p.grid.x[k].real() << ',' << p.grid.x[k].imag() << ',' << p.values[k].real() << ','
            << p.values[k].imag() << '\n';
        j["levels"].push_back({{"n", p.n},
                               {"energy", p.energy},
                               {"im_energy_residual", p.im_energy},
                               {"grid", csv.filename().string()}});
      }
      open_out(spec_out) << j.dump(2) << "\n";
      return 0;
    }

    if (*greens) {
      Grid1 g = parse_grid(g_grid);
      std::ostringstream os;
      os.precision(17);
      os << "x,y,value\n";
      for (int i = 0; i < g.n; ++i)
        for (int k = 0; k < g.n; ++k) {
          double x = g.at(i), y = g.at(k);
          double v = g_derived && g_order == 3 ? g3_derived(x, y) : greens_value(g_order, x, y);
          os << x << ',' << y << ',' << v << '\n';
        }
      write_text(g_out, os.str());
      return 0;
    }

    if (*qnp) {
      if (q_validate) return emit_report(validate_against_solver(q_n, q_eps), q_out);
      Grid1 g = parse_grid(q_grid);
      std::ostringstream os;
      os.precision(17);
      os << "x,y,re,im,est_error\n";
      for (int i = 0; i < g.n; ++i)
        for (int k = 0; k < g.n; ++k) {
          double x = g.at(i), y = g.at(k);
          auto s = nonpert_c_sum(x, y, q_eps, q_terms);
          os << x << ',' << y << ',' << s.value.real() << ',' << s.value.imag() << ',' << s.remainder_estimate << '\n';
        }
      write_text(q_out, os.str());
      return 0;
    }

    if (*special) {
      if (!probe) throw ConfigError("special: pass --probe");
      std::printf("# z, D_{-1/2}(z), branch, D_3(z), C_3(z)\n");
      for (int i = -12; i <= 12; ++i) {
        double z = 0.5 * i;
        std::printf("%g, %.15g, %s, %.15g, %.15g\n", z, parabolic_d_half(z).value,
                    to_string(parabolic_d_half_default_branch(z)).c_str(), parabolic_d_int(3, z).value,
                    c_second_solution(3, z).value);
      }
      std::printf("# r, Ai, Bi\n");
      for (int i = -10; i <= 10; ++i) {
        auto a = airy_pair(i);
        std::printf("%d, %.15g, %.15g\n", i, a.ai, a.bi);
      }
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
