#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "cliffwave/quadrature.hpp"

namespace cliffwave {

inline constexpr int kHermiteDegreeCap = 30;

// Element (t, z) of the (2n+1)-dimensional Heisenberg group,
// (t,z)*(t',z') = (t + t' + Im<conj z, z'>/2, z + z').
struct HeisenbergElement {
  double t = 0.0;
  std::vector<Complex> z;
};

HeisenbergElement h_identity(int n);
HeisenbergElement h_mul(const HeisenbergElement& a, const HeisenbergElement& b);
HeisenbergElement h_inv(const HeisenbergElement& a);

// amp * exp(lin.x - x.x/2) on R^n.  Closed under the group action below.
struct GaussPacket {
  Complex amp{1.0};
  std::vector<Complex> lin;
};

GaussPacket vacuum_packet(int n);             // normalized, amp = pi^{-n/4}
Complex packet_eval(const GaussPacket& p, std::span<const double> x);
Complex packet_inner(const GaussPacket& a, const GaussPacket& b);  // conj on a
double packet_norm(const GaussPacket& p);

// f(x) -> exp(i(2t - sqrt2 <q,x> + <q,p>)) f(x - sqrt2 p), z = p + iq.
GaussPacket schrodinger_apply(const HeisenbergElement& g, const GaussPacket& f);

GaussPacket packet_shift(const GaussPacket& f, std::span<const double> c);
GaussPacket packet_modulate(const GaussPacket& f, std::span<const double> b);

// Coefficients over the Hermite-function basis phi_m, |m| <= 30.
using HermiteCoeffs = std::map<std::vector<int>, Complex>;

HermiteCoeffs ladder_raise(int k, const HermiteCoeffs& c);  // sqrt(m_k+1) shift
HermiteCoeffs ladder_lower(int k, const HermiteCoeffs& c);  // sqrt(m_k) shift

double hermite_value(std::span<const int> m, std::span<const double> x);
// phi_m without the Gaussian factor (phi_m = this * exp(-|x|^2/2)); the form
// quadrature against weight exp(-|x|^2) wants.
double hermite_polypart(std::span<const int> m, std::span<const double> x);
Complex hermite_coeffs_eval(const HermiteCoeffs& c, std::span<const double> x);
double hermite_coeffs_norm(const HermiteCoeffs& c);

// pi^{-n/4} exp(-(x.x + y.y)/2 + sqrt2 x.y), the closed form the basis sums
// to; first argument may be complex.
Complex generating_value(std::span<const Complex> x, std::span<const double> y);
// sum over |m| <= cap of x^m/sqrt(m!) phi_m(y).
Complex generating_series(std::span<const Complex> x, std::span<const double> y,
                          int cap);

// Entire function c * exp(beta . z): the analytic image of a Gaussian packet.
struct FockExp {
  Complex c{1.0};
  std::vector<Complex> beta;
};

Complex fock_exp_eval(const FockExp& f, std::span<const Complex> z);

// Analytic part of the coherent-state transform of a packet, derived in
// closed form.  The transform itself is wf = e^{-|z|^2/2} * (this).
FockExp bargmann_forward(const GaussPacket& f);
Complex bargmann_wf_value(const FockExp& f, std::span<const Complex> z);

// Transform by quadrature against the generating kernel, for cross-checks:
// e^{-|z|^2/2} integral f(y) * pi^{-n/4} e^{-(z.z+y.y)/2 + sqrt2 z.y} dy.
Complex bargmann_forward_quad(
    const std::function<Complex(std::span<const double>)>& f, int n,
    std::span<const Complex> z, const QuadRule& rule);

// Finite expansion over the orthonormal monomials z^m/sqrt(m!).
using FockCoeffs = std::map<std::vector<int>, Complex>;

Complex fock_eval(const FockCoeffs& c, int n, std::span<const Complex> z);
// Hermite coefficients map to identical monomial coefficients.
FockCoeffs hermite_to_fock(const HermiteCoeffs& c);
HermiteCoeffs fock_to_hermite(const FockCoeffs& c);

// Monomial projection c_m = <z^m/sqrt(m!), F> in the probability-normalized
// analytic inner product pi^{-n} int conj(.) . e^{-|z|^2}.
FockCoeffs fock_project(const std::function<Complex(std::span<const Complex>)>& f,
                        int n, int cap, const QuadRule& rule);

// Inverse integral realized by quadrature: f(x) = pi^{-n} int e^{-|z|^2/2}
// F(z) w_z(x) dz with w_z the normalized coherent state, then re-expanded
// over the Hermite basis.
HermiteCoeffs bargmann_inverse(const FockCoeffs& f, int n, int cap,
                               const QuadRule& z_rule, const QuadRule& x_rule);

// [beta_{(t,z)} F](u) = F(u+z) exp(it - <conj z, u> - |z|^2/2).
std::function<Complex(std::span<const Complex>)> bargmann_action(
    const HeisenbergElement& g,
    std::function<Complex(std::span<const Complex>)> f);

Complex bargmann_kernel(std::span<const Complex> u, std::span<const Complex> v);

// Normalized coherent state at (0, z): the group orbit of the vacuum.
GaussPacket coherent_packet(int n, std::span<const Complex> z);

}  // namespace cliffwave
