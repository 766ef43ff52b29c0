#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cliffwave {

// Configuration of one verification run.
struct SuiteConfig {
  std::string suite = "all";  // clifford|cpoly|hermite|bargmann|m2|gn|framework|all
  int n = 2;                  // algebra / spatial dimension
  int degree = 8;             // degree cap for basis families
  int quad_order = 40;        // quadrature order per real dimension
  double h = 1e-4;            // finite-difference step
  double tol_scale = 1.0;     // multiplies every asserted tolerance
  std::uint64_t seed = 0;
  std::string format = "json";  // json|csv|text
};

// One measured check.  pass <=> residual <= tol.  Diagnostic rows report a
// measured value without asserting; they never affect the exit status.
struct CheckRecord {
  std::string id;
  std::string params;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  bool diagnostic = false;
  std::string notes;
};

CheckRecord make_check(std::string id, std::string params, double residual,
                       double tol, std::string notes = "");
CheckRecord make_diagnostic(std::string id, std::string params, double value,
                            std::string notes);

// Convention decision where the implementation departs from a commonly
// printed form of the same formula.  `basis` names the computation that
// forced the choice; every entry is exercised by the suites.
struct Erratum {
  std::string id;
  std::string implemented;
  std::string alternative;
  std::string basis;
};

// The seven entries, stable order and ids.
const std::vector<Erratum>& erratum_table();

// Serialized report in cfg.format, erratum table included in every format.
std::string emit_report(const SuiteConfig& cfg,
                        const std::vector<CheckRecord>& checks);

// 0 when every non-diagnostic check passes, else 1.
int exit_status(const std::vector<CheckRecord>& checks);

}  // namespace cliffwave
