#pragma once

#include <vector>

#include "cliffwave/report.hpp"

namespace cliffwave {

// Each suite runs a fixed list of checks sized by the config.  Quadrature
// orders are picked per check from the polynomial exactness the integrand
// needs (cfg.quad_order caps the non-polynomial ones); every record's
// params string says what was actually used.
std::vector<CheckRecord> run_clifford_suite(const SuiteConfig& cfg);
std::vector<CheckRecord> run_cpoly_suite(const SuiteConfig& cfg);
std::vector<CheckRecord> run_hermite_suite(const SuiteConfig& cfg);
std::vector<CheckRecord> run_bargmann_suite(const SuiteConfig& cfg);
std::vector<CheckRecord> run_m2_suite(const SuiteConfig& cfg);
std::vector<CheckRecord> run_gn_suite(const SuiteConfig& cfg);
std::vector<CheckRecord> run_framework_suite(const SuiteConfig& cfg);

bool valid_suite_name(const std::string& name);

// Dispatch on cfg.suite; "all" concatenates the seven in the order above.
std::vector<CheckRecord> run_suite(const SuiteConfig& cfg);

}  // namespace cliffwave
