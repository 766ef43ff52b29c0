#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "cliffwave/cliffpoly.hpp"
#include "cliffwave/oscillator.hpp"
#include "cliffwave/quadrature.hpp"

namespace cliffwave {

// Element of the monogenic model space: complex coefficients over the
// orthonormal basis V_k = CK extension of x^k/sqrt(k!).  Index k runs over
// the spatial variables x1..xn (size n).
struct M2Element {
  int n = 1;
  std::map<std::vector<int>, Complex> coeff;
};

M2Element m2_basis(int n, const std::vector<int>& k);
M2Element m2_add(const M2Element& a, const M2Element& b);
M2Element m2_scale(const M2Element& a, Complex c);
int m2_degree(const M2Element& a);    // -1 when empty
double m2_norm(const M2Element& a);   // l2 over coefficients
double m2_distance(const M2Element& a, const M2Element& b);

// Realize as a polynomial in x0..xn.
CliffPoly m2_realize(const M2Element& a, int degree_cap = kDefaultDegreeCap);

struct M2Inner {
  Complex exact;       // coefficient contraction over the orthonormal basis
  Complex quadrature;  // scalar part of int conj(f) g against the normalized
                       // Gaussian on R^{n+1}
  double offscalar;    // leftover non-scalar mass of that integral
};

// Both evaluation paths, for cross-checking.  Quadrature needs n+1 <= 4.
M2Inner m2_inner(const M2Element& f, const M2Element& g, const QuadRule& rule);
Complex m2_inner_exact(const M2Element& f, const M2Element& g);

// Ladder shifts on coefficients: creation is symmetrized multiplication by
// x_j (factor sqrt(k_j+1)), annihilation is d/dx_j (factor sqrt(k_j)).
// j is 1-based.
M2Element create_apply(int j, const M2Element& f,
                       int degree_cap = kDefaultDegreeCap);
M2Element annihilate_apply(int j, const M2Element& f);

struct M2ActResult {
  M2Element value;
  double tail;  // l2 mass dropped by truncating the exponential factor
};

// Action of a Heisenberg group element (t, z = u+iv) on the model:
// real scalar exp(-(t + (u.u - v.v)/4)), times CK multiplication by
// E((u+v)/sqrt(2), .) truncated at trunc_degree, applied after the shift
// x -> x + (u-v)/sqrt(2).  Works on restrictions; monogenicity is restored
// by the basis expansion.
M2ActResult pi_m2_act(const HeisenbergElement& g, const M2Element& f,
                      int trunc_degree = 12);

struct M2Coherent {
  M2Element expansion;
  double tail;
  // Closed form: exp(-(t + (u.u - v.v)/4)) E((u+v)/sqrt(2), x), evaluated
  // at a point (x0, x1..xn).
  std::function<Multivector(std::span<const double>)> eval;
};

M2Coherent m2_coherent(const HeisenbergElement& g, int trunc_degree = 12);

// Intertwining kernel against the analytic model.  The default convention
// pairs V_k with conj(z)^k/sqrt(k!), fixed by requiring the restriction at
// x0 = 0 to equal exp(sum x_j conj(z_j)).  The plain-z variant is kept for
// comparison only.
enum class BConvention { kConjugated, kPlain };

Multivector b_kernel(std::span<const Complex> z, std::span<const double> point,
                     int n, int trunc_degree,
                     BConvention conv = BConvention::kConjugated);

// Basis correspondence z^m/sqrt(m!) <-> V_m, coefficient-wise.
M2Element b_transform(const FockCoeffs& f, int n);
FockCoeffs b_inverse(const M2Element& f);

// Quadrature realizations of the same maps, for cross-checks.
// Forward: pi^{-n} int B(z, x) F(z) e^{-|z|^2} dA(z), grid over R^{2n}
// with z_j = x_{2j} + i x_{2j+1}.
Multivector b_integral_apply(const FockCoeffs& f, int n,
                             std::span<const double> point, int trunc_degree,
                             const QuadRule& rule);
// Inverse: int conj(B(z, x)) f(x) dmu(x) over R^{n+1}, scalar part.
Complex b_integral_inverse(const M2Element& f, std::span<const Complex> z,
                           int trunc_degree, const QuadRule& rule);

// Reproducing kernel K(x, y) = sum_{|k| <= trunc_degree} V_k(x) conj(V_k(y)).
Multivector m2_repro_kernel(std::span<const double> x,
                            std::span<const double> y, int n,
                            int trunc_degree);

// int conj(K(x, y)) f(x) dmu(x); reproduces f(y) when deg f <= trunc_degree.
Multivector m2_reproduce(const M2Element& f, std::span<const double> y,
                         int trunc_degree, const QuadRule& rule);

}  // namespace cliffwave
