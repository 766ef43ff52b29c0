// Acceptance gate: one line per criterion, thresholds restated literally
// here so a regression in suite tolerances cannot silently relax the gate.
// Usage: acceptance [path-to-cli] (the CLI path drives the determinism
// criterion; without it that criterion fails).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliffwave/checks.hpp"
#include "cliffwave/report.hpp"

namespace {

using cliffwave::CheckRecord;
using cliffwave::SuiteConfig;

struct Gate {
  int number;
  std::string title;
  bool pass = true;
  std::string detail;

  void note(const std::string& text) {
    if (!detail.empty()) detail += "; ";
    detail += text;
  }
};

const CheckRecord* find(const std::vector<CheckRecord>& recs,
                        const std::string& id) {
  for (const auto& r : recs)
    if (r.id == id) return &r;
  return nullptr;
}

void need(Gate& g, const std::vector<CheckRecord>& recs, const std::string& id,
          double bound) {
  char buf[192];
  const CheckRecord* r = find(recs, id);
  if (r == nullptr) {
    g.pass = false;
    std::snprintf(buf, sizeof buf, "%s missing", id.c_str());
    g.note(buf);
    return;
  }
  const bool ok = r->residual <= bound;
  if (!ok) g.pass = false;
  std::snprintf(buf, sizeof buf, "%s %.3e %s %.0e", id.c_str(), r->residual,
                ok ? "<=" : ">", bound);
  g.note(buf);
}

SuiteConfig gate_cfg(const std::string& suite, int n, int degree) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.n = n;
  cfg.degree = degree;
  cfg.quad_order = 40;
  cfg.h = 1e-4;
  cfg.tol_scale = 1.0;
  cfg.seed = 7;
  cfg.format = "json";
  return cfg;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return in ? buf.str() : std::string{};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Gate> gates;

  const auto clifford = cliffwave::run_suite(gate_cfg("clifford", 2, 8));
  {
    Gate g{1, "Clifford relations and associativity"};
    need(g, clifford, "clifford.anticommutation", 1e-13);
    need(g, clifford, "clifford.associativity", 1e-13);
    gates.push_back(g);
  }

  const auto hermite = cliffwave::run_suite(gate_cfg("hermite", 2, 8));
  {
    Gate g{2, "Hermite orthonormality"};
    need(g, hermite, "hermite.orthonormality", 1e-10);
    gates.push_back(g);
  }
  {
    Gate g{3, "generating function closed form"};
    need(g, hermite, "hermite.generating_closed_vs_series", 1e-8);
    gates.push_back(g);
  }
  {
    Gate g{4, "ladder factors and Weyl relation"};
    need(g, hermite, "hermite.ladder_sqrt_factors", 1e-9);
    need(g, hermite, "hermite.weyl_relation", 1e-12);
    gates.push_back(g);
  }

  const auto cpoly = cliffwave::run_suite(gate_cfg("cpoly", 3, 5));
  {
    Gate g{5, "monogenic basis polynomials"};
    need(g, cpoly, "cpoly.monomial_monogenic", 1e-12);
    gates.push_back(g);
  }

  const auto m2 = cliffwave::run_suite(gate_cfg("m2", 3, 5));
  {
    Gate g{6, "model orthonormality"};
    need(g, m2, "m2.orthonormality", 1e-8);
    gates.push_back(g);
  }
  {
    Gate g{7, "model ladder operators"};
    need(g, m2, "m2.ladder_realized", 1e-12);
    need(g, m2, "m2.ladder_adjoint", 1e-10);
    need(g, m2, "m2.ladder_commutator", 1e-12);
    gates.push_back(g);
  }
  {
    Gate g{8, "reproducing kernel"};
    need(g, m2, "m2.kernel_reproduces", 1e-6);
    need(g, m2, "m2.kernel_conjugate_monogenic", 1e-6);
    gates.push_back(g);
  }
  {
    Gate g{9, "transform between model and analytic space"};
    need(g, m2, "m2.b_isometry", 1e-8);
    need(g, m2, "m2.b_ladder_conjugation", 1e-10);
    need(g, m2, "m2.b_kernel_restriction", 1e-8);
    gates.push_back(g);
  }

  const auto bargmann = cliffwave::run_suite(gate_cfg("bargmann", 2, 8));
  const auto gn = cliffwave::run_suite(gate_cfg("gn", 3, 8));
  {
    Gate g{10, "group actions: homomorphism and unitarity"};
    need(g, bargmann, "bargmann.schrodinger_homomorphism", 1e-12);
    need(g, gn, "gn.rho_homomorphism", 1e-12);
    need(g, bargmann, "bargmann.schrodinger_unitary", 1e-10);
    need(g, bargmann, "bargmann.schrodinger_unitary_quad", 1e-8);
    need(g, gn, "gn.rho_unitary", 1e-10);
    need(g, gn, "gn.inner_quadrature_cross", 1e-8);
    gates.push_back(g);
  }
  {
    Gate g{11, "derived operators and field algebra"};
    need(g, gn, "gn.lowering_kills_vacuum", 0.0);
    need(g, gn, "gn.ladder_commutators", 1e-10);
    need(g, gn, "gn.field_commutator", 1e-6);
    need(g, gn, "gn.field_left_right_commute", 1e-6);
    gates.push_back(g);
  }
  {
    Gate g{12, "wavelet transform closed form"};
    need(g, gn, "gn.wavelet_closed_vs_quadrature", 1e-8);
    need(g, gn, "gn.wavelet_origin_value", 0.0);
    gates.push_back(g);
  }
  {
    Gate g{13, "monogenicity of wavelet images"};
    need(g, gn, "gn.wavelet_image_monogenic", 1e-6);
    need(g, gn, "gn.dirac_stencil_controls", 1e-6);
    gates.push_back(g);
  }
  {
    Gate g{14, "reduced wavelets"};
    need(g, gn, "gn.reduced_matches_renormalized", 1e-12);
    need(g, gn, "gn.reduced_dirac_annihilates", 1e-6);
    gates.push_back(g);
  }

  const auto fw = cliffwave::run_suite(gate_cfg("framework", 2, 8));
  {
    Gate g{15, "projection and reconstruction"};
    need(g, fw, "framework.reconstruction", 1e-3);
    need(g, fw, "framework.reconstruction_monotone", 0.0);
    need(g, fw, "framework.projection_idempotent", 1e-6);
    need(g, fw, "framework.sb_projection_kernel", 1e-8);
    gates.push_back(g);
  }

  {
    Gate g{16, "deterministic reports and erratum table"};
    if (argc < 2) {
      g.pass = false;
      g.note("cli path not supplied");
    } else {
      const std::string cli = argv[1];
      const std::string base =
          "\"" + cli + "\" verify --suite all --seed 7 --format json --out ";
      const int rc1 = std::system((base + "acceptance_rep1.json").c_str());
      const int rc2 = std::system((base + "acceptance_rep2.json").c_str());
      (void)rc1;
      (void)rc2;
      const std::string rep1 = slurp("acceptance_rep1.json");
      const std::string rep2 = slurp("acceptance_rep2.json");
      if (rep1.empty() || rep2.empty()) {
        g.pass = false;
        g.note("report files missing or empty");
      } else if (rep1 != rep2) {
        g.pass = false;
        g.note("reports differ between runs");
      } else {
        g.note("two runs byte-identical");
        try {
          const auto doc = nlohmann::json::parse(rep1);
          const std::vector<std::string> want{
              "dirac_generator_factors", "monogenic_variable_sign",
              "pi_power_normalization",  "conjugation_side",
              "reduced_dirac_sign",      "drho_center_index",
              "analytic_action_phase"};
          const auto& errata = doc.at("errata");
          if (errata.size() != want.size()) {
            g.pass = false;
            g.note("erratum table has " + std::to_string(errata.size()) +
                   " entries, want 7");
          } else {
            for (std::size_t i = 0; i < want.size(); ++i)
              if (errata[i].at("id").get<std::string>() != want[i]) {
                g.pass = false;
                g.note("erratum " + std::to_string(i) + " is not " + want[i]);
              }
            if (g.pass) g.note("seven discrepancies tabulated");
          }
        } catch (const std::exception& e) {
          g.pass = false;
          g.note(std::string("report not parseable: ") + e.what());
        }
      }
    }
    gates.push_back(g);
  }

  int failures = 0;
  for (const auto& g : gates) {
    if (!g.pass) ++failures;
    std::printf("AC%02d %s  %s (%s)\n", g.number, g.pass ? "PASS" : "FAIL",
                g.title.c_str(), g.detail.c_str());
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
