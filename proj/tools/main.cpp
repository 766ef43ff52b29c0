#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cliffwave/checks.hpp"
#include "cliffwave/evalspec.hpp"
#include "cliffwave/report.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// empty path means stdout; returns process exit code on I/O failure
int write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return 2;
  }
  out << text;
  return out.good() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cliffwave: verification suites and kernel evaluation"};
  app.require_subcommand(1);

  cliffwave::SuiteConfig cfg;
  std::string verify_out;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", cfg.suite,
                     "clifford|cpoly|hermite|bargmann|m2|gn|framework|all");
  verify->add_option("--n", cfg.n, "ambient dimension")
      ->check(CLI::Range(1, 6));
  verify->add_option("--degree", cfg.degree, "polynomial degree budget")
      ->check(CLI::Range(1, 12));
  verify->add_option("--quad", cfg.quad_order, "quadrature order cap")
      ->check(CLI::Range(2, 200));
  verify->add_option("--h", cfg.h, "finite-difference step")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol-scale", cfg.tol_scale, "tolerance multiplier")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "rng seed");
  verify->add_option("--format", cfg.format, "json|csv|text");
  verify->add_option("--out", verify_out, "write the report to a file");

  std::string spec_path, points_path, eval_out;
  CLI::App* eval = app.add_subcommand("eval", "evaluate kernels at points");
  eval->add_option("--spec", spec_path, "function-spec file")->required();
  eval->add_option("--points", points_path, "points file")->required();
  eval->add_option("--out", eval_out, "write the table to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (verify->parsed()) {
    if (!cliffwave::valid_suite_name(cfg.suite)) {
      std::cerr << "unknown suite: " << cfg.suite << "\n";
      return 2;
    }
    if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text") {
      std::cerr << "unknown format: " << cfg.format << "\n";
      return 2;
    }
    std::vector<cliffwave::CheckRecord> records;
    try {
      records = cliffwave::run_suite(cfg);
    } catch (const std::exception& e) {
      std::cerr << "verification aborted: " << e.what() << "\n";
      return 2;
    }
    const int io = write_out(verify_out, cliffwave::emit_report(cfg, records));
    if (io != 0) return io;
    return cliffwave::exit_status(records);
  }

  try {
    const std::string report = cliffwave::eval_report(read_file(spec_path),
                                                      read_file(points_path));
    return write_out(eval_out, report);
  } catch (const cliffwave::EvalError& e) {
    std::cerr << "line " << e.line << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
