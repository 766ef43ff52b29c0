#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cliffwave/multivector.hpp"

namespace cliffwave {

inline constexpr int kMaxQuadOrder = 200;
inline constexpr int kMaxTensorDims = 4;

// Gauss-Hermite rule for the weight exp(-x^2) on R: integrates polynomials
// up to degree 2*order-1 exactly.  Nodes are symmetric about 0.
struct QuadRule {
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

QuadRule hermite_rule(int order);

// Iterates a tensor grid of the 1-D rule over `dims` axes and accumulates
// values against the probability-normalized Gaussian pi^{-dims/2} e^{-|x|^2}.
// f sees the node coordinates; the Gaussian weight is carried by the rule.
Complex gaussian_integral(
    const std::function<Complex(std::span<const double>)>& f, int dims,
    const QuadRule& rule);

Multivector gaussian_integral_mv(
    const std::function<Multivector(std::span<const double>)>& f, int dims,
    const QuadRule& rule, int mv_dim);

// <f, g> = integral of conj(f(x)) g(x) against the normalized Gaussian.
Complex gaussian_inner(const std::function<Complex(std::span<const double>)>& f,
                       const std::function<Complex(std::span<const double>)>& g,
                       int dims, const QuadRule& rule);

// One term of a differential stencil: a partial of order 1 or 2 (or the
// identity, order 0) with a point-dependent left coefficient.
struct StencilTerm {
  int var = 0;
  int deriv_order = 1;
  std::function<Multivector(std::span<const double>)> coeff;
};

struct OperatorStencil {
  int point_dim = 0;
  std::vector<StencilTerm> terms;
};

StencilTerm constant_term(int var, int deriv_order, Multivector coeff);

// Central differences, O(h^2).
Multivector finite_diff_apply(
    const OperatorStencil& op,
    const std::function<Multivector(std::span<const double>)>& f,
    std::span<const double> point, double h);

}  // namespace cliffwave
