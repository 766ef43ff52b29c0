#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cliffwave/multivector.hpp"
#include "cliffwave/quadrature.hpp"

namespace cliffwave {

// Generic coherent-state machinery over an abstract transformation group.
// Group points, quotient points and carrier elements are flat coordinate
// vectors; the instances pack their native types into them.  Values are
// kept per component (one slot for the scalar theory, n slots when each
// component carries its own character).
using GroupPt = std::vector<double>;
using OmegaPt = std::vector<double>;
using Carrier = std::vector<Complex>;
using CompVals = std::vector<Complex>;

struct CoherentSystem {
  std::string name;
  int n = 1;           // spatial dimension of the carrier functions
  int components = 1;  // independent value slots
  int group_dim = 0;
  int omega_dim = 0;   // real dimension of the quotient by the subgroup
  int center_dim = 0;

  GroupPt identity;
  std::function<GroupPt(const GroupPt&, const GroupPt&)> mul;
  std::function<GroupPt(const GroupPt&)> inv;

  Carrier vacuum;
  std::function<Carrier(const GroupPt&, const Carrier&)> act;
  // Pairing with the conjugation applied to the first slot.  The instance's
  // native notational convention is recorded in conj_note for the report.
  std::function<CompVals(const Carrier&, const Carrier&)> inner;
  std::string conj_note;
  // Carrier element evaluated at a spatial point, per component.
  std::function<CompVals(const Carrier&, std::span<const double>)> carrier_eval;

  // Decomposition g = (center part) * (section of the quotient point).
  std::function<OmegaPt(const GroupPt&)> omega_part;
  std::function<std::vector<double>(const GroupPt&)> center_part;
  std::function<GroupPt(const OmegaPt&)> section;
  std::function<GroupPt(std::span<const double>)> center_embed;
  // Character of the subgroup on value slot `comp`.
  std::function<Complex(std::span<const double>, int comp)> character;
  // Quotient coordinates that component `comp` actually lives on; the
  // projection and reconstruction integrals run over that slice with the
  // probability-normalized Gaussian measure.
  std::function<std::vector<int>(int comp)> slice;
  // Closed form of the vacuum transform on the whole group.
  std::function<CompVals(const GroupPt&)> vacuum_wavelet;
};

CoherentSystem make_oscillator_system(int n);
CoherentSystem make_nilgroup_system(int n);

// Wf(g): the vacuum is carried to g and paired against f.
CompVals wtransform(const CoherentSystem& sys, const Carrier& f,
                    const GroupPt& g);

// |W(act(g, f))(g') - Wf(g^{-1} g')|, max over components.
double check_intertwine(const CoherentSystem& sys, const Carrier& f,
                        const GroupPt& g, const GroupPt& gp);

// Restriction of the transform to the section over the quotient.
CompVals reduced_transform(const CoherentSystem& sys, const Carrier& f,
                           const OmegaPt& a);

// conj(chi_c(r(g))) per component; Wf = character_factor * (reduced o s).
CompVals character_factor(const CoherentSystem& sys, const GroupPt& g);
double factorization_residual(const CoherentSystem& sys, const Carrier& f,
                              const GroupPt& g);

// Vacuum eigenvector property under the subgroup, probed through the
// transform at a sample group point.
double homogeneity_residual(const CoherentSystem& sys,
                            std::span<const double> center_coords,
                            const GroupPt& probe);

double unitarity_residual(const CoherentSystem& sys, const Carrier& f,
                          const Carrier& fp, const GroupPt& g);

// Projection kernel K(a, b) = Wf0(s(a)^{-1} s(b)) on quotient points.
Complex repro_kernel(const CoherentSystem& sys, const OmegaPt& a,
                     const OmegaPt& b, int comp);

using OmegaFn = std::function<CompVals(const OmegaPt&)>;

// (P phi)(b) = int K(a, b) phi(a) over the component's slice, normalized
// Gaussian measure with the weight divided back out.
CompVals project_apply(const CoherentSystem& sys, const OmegaFn& phi,
                       const OmegaPt& b, const QuadRule& rule);

// f(x) recovered from phi = Wf on the section: int phi(a) w_a(x) da.
CompVals reconstruct_value(const CoherentSystem& sys, const OmegaFn& phi,
                           std::span<const double> x, const QuadRule& rule);

// Residual of a differential stencil on a function, max_abs at the point.
double cr_dirac_residual(
    const OperatorStencil& op,
    const std::function<Multivector(std::span<const double>)>& F,
    std::span<const double> point, double h);

// Analyticity stencil d/dconj(z_j) + z_j/2 over quotient coordinates
// (Re z_1, Im z_1, ..): annihilates reduced oscillator transforms.
// Coefficients are scalars of multivector dimension 1.
OperatorStencil sb_cr_stencil(int n, int j);

}  // namespace cliffwave
