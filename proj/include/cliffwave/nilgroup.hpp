#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cliffwave/multivector.hpp"
#include "cliffwave/quadrature.hpp"

namespace cliffwave {

// Point of the step-two nilpotent group: n central coordinates t, one p and
// n entries q.  Exponential coordinates throughout.
struct NilElement {
  std::vector<double> t;
  double p = 0.0;
  std::vector<double> q;
};

int nil_dim(const NilElement& g);
NilElement nil_identity(int n);
NilElement g_mul(const NilElement& a, const NilElement& b);
NilElement g_inv(const NilElement& g);
double nil_distance(const NilElement& a, const NilElement& b);

// Section of the quotient by the center: a = (a0, a1..an) -> (0; a0; a),
// and the forgetful projection back.  Composing through the group is plain
// coordinate addition on the section.
NilElement s_embed(std::span<const double> a);
std::vector<double> s_project(const NilElement& g);
std::vector<double> nil_center_part(const NilElement& g);  // t of g

// n-component Gaussian packet: component j is amp_j exp(lin_j x - x^2/2)
// with values in span{1, e_j}, stored as complex numbers via e_j <-> i.
struct VPacket {
  int n = 1;
  std::vector<Complex> amp;
  std::vector<Complex> lin;
};

VPacket vacuum_vpacket(int n);  // amp = pi^{-1/4}, unit L2 norm per component
std::vector<Complex> vpacket_values(const VPacket& f, double x);
double vpacket_distance(const VPacket& a, const VPacket& b);

// Group action: component j picks up e^{e_j(2t_j + q_j(sqrt2 x - p))} and
// the argument shifts by sqrt2 p.  Packets map to packets.
VPacket rho_act(const NilElement& g, const VPacket& f);

// <f, g> = sum_j int conj(f_j) g_j dx, conjugation on the first slot,
// result assembled as a multivector with the e_j parts per component.
Multivector cliff_inner(const VPacket& a, const VPacket& b);
// The per-component values before assembly.
std::vector<Complex> cliff_inner_components(const VPacket& a, const VPacket& b);
Multivector cliff_inner_quad(const VPacket& a, const VPacket& b,
                             const QuadRule& rule);

// Packet with polynomial prefactors, closed under the derived action:
// component j is (sum_d poly_j[d] x^d) exp(lin_j x - x^2/2).
struct VPacketExt {
  int n = 1;
  std::vector<std::vector<Complex>> poly;
  std::vector<Complex> lin;
};

VPacketExt ext_from_packet(const VPacket& f);
VPacketExt ext_add(const VPacketExt& a, const VPacketExt& b);  // same lin
VPacketExt ext_scale(const VPacketExt& a, Complex c);
std::vector<Complex> ext_values(const VPacketExt& f, double x);
Multivector ext_inner(const VPacketExt& a, const VPacketExt& b);
double ext_norm(const VPacketExt& a);
double ext_distance(const VPacketExt& a, const VPacketExt& b);

// Lie algebra basis directions.
enum class NilBasis { kT, kP, kQ };

// Derived action: T_j doubles into 2 e_j on component j, P differentiates
// every component by -sqrt2 d/dx, Q_j multiplies component j by sqrt2 e_j x.
// The index j is 1-based and ignored for P.
VPacketExt drho_apply(NilBasis b, int j, const VPacketExt& f);

// Lowering operator: component j gets -sqrt2 (d/dx + x).  Kills the vacuum
// exactly.  The sign on the Q-part is forced by that annihilation and by
// the displayed commutators; see the errata notes in the report module.
VPacketExt a_minus(const VPacketExt& f);
// Raising partner: flips component k to -sqrt2 (d/dx - x).
VPacketExt a_plus(int k, const VPacketExt& f);

// Functions on the group use the flat coordinate layout
// (t_1..t_n, p, q_1..q_n), size 2n+1.
using GFunction = std::function<Multivector(std::span<const double>)>;

std::vector<double> nil_to_point(const NilElement& g);
NilElement point_to_nil(std::span<const double> x, int n);

// Dirac operator d/dp - sum_j e_j d/dq_j + (1/2) sum_j (e_j p + q_j) d/dt_j
// as a finite-difference stencil with left coefficients.
OperatorStencil nil_dirac_stencil(int n);
Multivector dirac_g_residual(const GFunction& F, std::span<const double> point,
                             double h);

// Invariant vector fields, plain-letter ones generate right shifts, the
// starred ones left shifts.  Index j is 1-based, ignored for kP/kPStar.
enum class NilField { kT, kP, kQ, kTStar, kPStar, kQStar };

OperatorStencil nil_field_stencil(NilField f, int j, int n);
Multivector vector_field_apply(NilField f, int j, const GFunction& F,
                               std::span<const double> point, double h);

// Wavelet transform of a packet at g: pairs the coherent state at g with f
// in the conjugated slot.  The closed form below covers f transported from
// the vacuum by (t', a).
Multivector g_wavelet(const VPacket& f, const NilElement& g,
                      const QuadRule& rule);
// sum_j exp(-2 e_j (t_j - t'_j) - (|z_j|^2 + |a_j|^2)/2 + a_j conj(z_j))
// with z_j = p + e_j q_j and a_j = a_0 + e_j a_j.
Multivector g_wavelet_closed(std::span<const double> tprime,
                             std::span<const double> a, const NilElement& g);
GFunction wavelet_image(std::vector<double> tprime, std::vector<double> a,
                        int n);
GFunction left_shift(const NilElement& h, GFunction F);

// Wavelet with the Gaussian envelope divided out, as a function on the
// section coordinates (z_0, z_1..z_n): sum_j exp(a_j conj(z_j)).
Multivector reduced_wavelet(std::span<const double> a,
                            std::span<const double> zpoint);
// d/dz_0 - sum_j e_j d/dz_j; annihilates the reduced wavelet.
OperatorStencil reduced_dirac_stencil(int n);

}  // namespace cliffwave
