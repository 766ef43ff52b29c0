#include "cliffwave/nilgroup.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cliffwave {

namespace {

constexpr Complex kI{0.0, 1.0};

// Component values live in span{1, e_j}; collect them into one multivector.
Multivector assemble(const std::vector<Complex>& comps) {
  const int n = static_cast<int>(comps.size());
  Multivector out(n);
  for (int j = 1; j <= n; ++j) {
    out += Multivector::scalar(n, comps[j - 1].real());
    out += Multivector::basis_blade(n, Blade{1} << (j - 1),
                                    Complex{comps[j - 1].imag()});
  }
  return out;
}

std::vector<Complex> poly_deriv(const std::vector<Complex>& p) {
  std::vector<Complex> out;
  for (size_t d = 1; d < p.size(); ++d)
    out.push_back(p[d] * static_cast<double>(d));
  return out;
}

std::vector<Complex> poly_mul_x(const std::vector<Complex>& p) {
  if (p.empty()) return {};
  std::vector<Complex> out(p.size() + 1, Complex{0.0});
  for (size_t d = 0; d < p.size(); ++d) out[d + 1] = p[d];
  return out;
}

std::vector<Complex> poly_scale(const std::vector<Complex>& p, Complex c) {
  std::vector<Complex> out = p;
  for (auto& v : out) v *= c;
  return out;
}

std::vector<Complex> poly_add(std::vector<Complex> a,
                              const std::vector<Complex>& b) {
  if (a.size() < b.size()) a.resize(b.size(), Complex{0.0});
  for (size_t d = 0; d < b.size(); ++d) a[d] += b[d];
  return a;
}

// int x^d exp(-x^2 + beta x) dx for d = 0..dmax.
std::vector<Complex> gauss_moments(Complex beta, int dmax) {
  std::vector<Complex> m(dmax + 1);
  m[0] = std::sqrt(std::numbers::pi) * std::exp(beta * beta * 0.25);
  if (dmax >= 1) m[1] = 0.5 * beta * m[0];
  for (int d = 2; d <= dmax; ++d)
    m[d] = 0.5 * beta * m[d - 1] + 0.5 * (d - 1) * m[d - 2];
  return m;
}

void check_packet(const VPacket& f) {
  if (static_cast<int>(f.amp.size()) != f.n ||
      static_cast<int>(f.lin.size()) != f.n)
    throw std::invalid_argument("packet arrays must have n entries");
}

void check_ext(const VPacketExt& f) {
  if (static_cast<int>(f.poly.size()) != f.n ||
      static_cast<int>(f.lin.size()) != f.n)
    throw std::invalid_argument("packet arrays must have n entries");
}

}  // namespace

int nil_dim(const NilElement& g) {
  if (g.t.size() != g.q.size())
    throw std::invalid_argument("t and q must have equal length");
  return static_cast<int>(g.t.size());
}

NilElement nil_identity(int n) {
  return {std::vector<double>(n, 0.0), 0.0, std::vector<double>(n, 0.0)};
}

NilElement g_mul(const NilElement& a, const NilElement& b) {
  const int n = nil_dim(a);
  if (nil_dim(b) != n) throw std::invalid_argument("dimension mismatch");
  NilElement out = nil_identity(n);
  for (int j = 0; j < n; ++j) {
    out.t[j] = a.t[j] + b.t[j] + 0.5 * (b.p * a.q[j] - a.p * b.q[j]);
    out.q[j] = a.q[j] + b.q[j];
  }
  out.p = a.p + b.p;
  return out;
}

NilElement g_inv(const NilElement& g) {
  NilElement out = g;
  for (auto& v : out.t) v = -v;
  for (auto& v : out.q) v = -v;
  out.p = -out.p;
  return out;
}

double nil_distance(const NilElement& a, const NilElement& b) {
  const int n = nil_dim(a);
  if (nil_dim(b) != n) throw std::invalid_argument("dimension mismatch");
  double m = std::abs(a.p - b.p);
  for (int j = 0; j < n; ++j) {
    m = std::max(m, std::abs(a.t[j] - b.t[j]));
    m = std::max(m, std::abs(a.q[j] - b.q[j]));
  }
  return m;
}

NilElement s_embed(std::span<const double> a) {
  const int n = static_cast<int>(a.size()) - 1;
  if (n < 1) throw std::invalid_argument("section point needs n+1 entries");
  NilElement out = nil_identity(n);
  out.p = a[0];
  for (int j = 0; j < n; ++j) out.q[j] = a[j + 1];
  return out;
}

std::vector<double> s_project(const NilElement& g) {
  std::vector<double> out(1, g.p);
  out.insert(out.end(), g.q.begin(), g.q.end());
  return out;
}

std::vector<double> nil_center_part(const NilElement& g) { return g.t; }

VPacket vacuum_vpacket(int n) {
  VPacket out;
  out.n = n;
  out.amp.assign(n, Complex{std::pow(std::numbers::pi, -0.25)});
  out.lin.assign(n, Complex{0.0});
  return out;
}

std::vector<Complex> vpacket_values(const VPacket& f, double x) {
  check_packet(f);
  std::vector<Complex> out(f.n);
  for (int j = 0; j < f.n; ++j)
    out[j] = f.amp[j] * std::exp(f.lin[j] * x - 0.5 * x * x);
  return out;
}

double vpacket_distance(const VPacket& a, const VPacket& b) {
  check_packet(a);
  check_packet(b);
  if (a.n != b.n) throw std::invalid_argument("dimension mismatch");
  double m = 0.0;
  for (int j = 0; j < a.n; ++j) {
    m = std::max(m, std::abs(a.amp[j] - b.amp[j]));
    m = std::max(m, std::abs(a.lin[j] - b.lin[j]));
  }
  return m;
}

VPacket rho_act(const NilElement& g, const VPacket& f) {
  check_packet(f);
  const int n = nil_dim(g);
  if (n != f.n) throw std::invalid_argument("dimension mismatch");
  VPacket out = f;
  const double p = g.p;
  for (int j = 0; j < n; ++j) {
    const Complex zj{p, g.q[j]};
    out.amp[j] = f.amp[j] * std::exp(2.0 * kI * g.t[j] - kI * g.q[j] * p -
                                     std::numbers::sqrt2 * p * f.lin[j] -
                                     p * p);
    out.lin[j] = f.lin[j] + std::numbers::sqrt2 * zj;
  }
  return out;
}

std::vector<Complex> cliff_inner_components(const VPacket& a,
                                            const VPacket& b) {
  check_packet(a);
  check_packet(b);
  if (a.n != b.n) throw std::invalid_argument("dimension mismatch");
  std::vector<Complex> comps(a.n);
  for (int j = 0; j < a.n; ++j) {
    const Complex beta = std::conj(a.lin[j]) + b.lin[j];
    comps[j] = std::conj(a.amp[j]) * b.amp[j] *
               std::sqrt(std::numbers::pi) * std::exp(beta * beta * 0.25);
  }
  return comps;
}

Multivector cliff_inner(const VPacket& a, const VPacket& b) {
  return assemble(cliff_inner_components(a, b));
}

Multivector cliff_inner_quad(const VPacket& a, const VPacket& b,
                             const QuadRule& rule) {
  check_packet(a);
  check_packet(b);
  if (a.n != b.n) throw std::invalid_argument("dimension mismatch");
  std::vector<Complex> comps(a.n, Complex{0.0});
  for (int j = 0; j < a.n; ++j) {
    const Complex beta = std::conj(a.lin[j]) + b.lin[j];
    const Complex front = std::conj(a.amp[j]) * b.amp[j];
    for (int i = 0; i < rule.order; ++i)
      comps[j] += rule.weights[i] * front * std::exp(beta * rule.nodes[i]);
  }
  return assemble(comps);
}

VPacketExt ext_from_packet(const VPacket& f) {
  check_packet(f);
  VPacketExt out;
  out.n = f.n;
  out.lin = f.lin;
  out.poly.resize(f.n);
  for (int j = 0; j < f.n; ++j) out.poly[j] = {f.amp[j]};
  return out;
}

VPacketExt ext_add(const VPacketExt& a, const VPacketExt& b) {
  check_ext(a);
  check_ext(b);
  if (a.n != b.n || a.lin != b.lin)
    throw std::invalid_argument("packets must share the Gaussian core");
  VPacketExt out = a;
  for (int j = 0; j < a.n; ++j) out.poly[j] = poly_add(out.poly[j], b.poly[j]);
  return out;
}

VPacketExt ext_scale(const VPacketExt& a, Complex c) {
  VPacketExt out = a;
  for (auto& p : out.poly) p = poly_scale(p, c);
  return out;
}

std::vector<Complex> ext_values(const VPacketExt& f, double x) {
  check_ext(f);
  std::vector<Complex> out(f.n, Complex{0.0});
  for (int j = 0; j < f.n; ++j) {
    Complex val = 0.0;
    double xp = 1.0;
    for (const Complex& c : f.poly[j]) {
      val += c * xp;
      xp *= x;
    }
    out[j] = val * std::exp(f.lin[j] * x - 0.5 * x * x);
  }
  return out;
}

Multivector ext_inner(const VPacketExt& a, const VPacketExt& b) {
  check_ext(a);
  check_ext(b);
  if (a.n != b.n) throw std::invalid_argument("dimension mismatch");
  std::vector<Complex> comps(a.n, Complex{0.0});
  for (int j = 0; j < a.n; ++j) {
    if (a.poly[j].empty() || b.poly[j].empty()) continue;
    const Complex beta = std::conj(a.lin[j]) + b.lin[j];
    const int dmax = static_cast<int>(a.poly[j].size() + b.poly[j].size()) - 2;
    const auto m = gauss_moments(beta, dmax);
    for (size_t da = 0; da < a.poly[j].size(); ++da)
      for (size_t db = 0; db < b.poly[j].size(); ++db)
        comps[j] += std::conj(a.poly[j][da]) * b.poly[j][db] * m[da + db];
  }
  return assemble(comps);
}

double ext_norm(const VPacketExt& a) {
  return std::sqrt(std::abs(ext_inner(a, a).scalar_part().real()));
}

double ext_distance(const VPacketExt& a, const VPacketExt& b) {
  return ext_norm(ext_add(a, ext_scale(b, -1.0)));
}

VPacketExt drho_apply(NilBasis b, int j, const VPacketExt& f) {
  check_ext(f);
  if (b != NilBasis::kP && (j < 1 || j > f.n))
    throw std::invalid_argument("bad basis index");
  VPacketExt out = f;
  for (auto& p : out.poly) p.clear();
  switch (b) {
    case NilBasis::kT:
      out.poly[j - 1] = poly_scale(f.poly[j - 1], 2.0 * kI);
      break;
    case NilBasis::kP:
      // -sqrt2 d/dx of poly * exp(lin x - x^2/2)
      for (int c = 0; c < f.n; ++c) {
        auto d = poly_add(poly_deriv(f.poly[c]),
                          poly_scale(f.poly[c], f.lin[c]));
        d = poly_add(d, poly_scale(poly_mul_x(f.poly[c]), -1.0));
        out.poly[c] = poly_scale(d, -std::numbers::sqrt2);
      }
      break;
    case NilBasis::kQ:
      out.poly[j - 1] =
          poly_scale(poly_mul_x(f.poly[j - 1]), std::numbers::sqrt2 * kI);
      break;
  }
  return out;
}

VPacketExt a_minus(const VPacketExt& f) {
  check_ext(f);
  // Component j: -sqrt2 (d/dx + x); the x terms cancel against the core.
  VPacketExt out = f;
  for (int c = 0; c < f.n; ++c) {
    auto d =
        poly_add(poly_deriv(f.poly[c]), poly_scale(f.poly[c], f.lin[c]));
    out.poly[c] = poly_scale(d, -std::numbers::sqrt2);
  }
  return out;
}

VPacketExt a_plus(int k, const VPacketExt& f) {
  check_ext(f);
  if (k < 1 || k > f.n) throw std::invalid_argument("bad basis index");
  VPacketExt out = a_minus(f);
  // Component k becomes -sqrt2 (d/dx - x) instead.
  auto d = poly_add(poly_deriv(f.poly[k - 1]),
                    poly_scale(f.poly[k - 1], f.lin[k - 1]));
  d = poly_add(d, poly_scale(poly_mul_x(f.poly[k - 1]), -2.0));
  out.poly[k - 1] = poly_scale(d, -std::numbers::sqrt2);
  return out;
}

std::vector<double> nil_to_point(const NilElement& g) {
  const int n = nil_dim(g);
  std::vector<double> out;
  out.reserve(2 * n + 1);
  out.insert(out.end(), g.t.begin(), g.t.end());
  out.push_back(g.p);
  out.insert(out.end(), g.q.begin(), g.q.end());
  return out;
}

NilElement point_to_nil(std::span<const double> x, int n) {
  if (static_cast<int>(x.size()) != 2 * n + 1)
    throw std::invalid_argument("point must have 2n+1 coordinates");
  NilElement out = nil_identity(n);
  for (int j = 0; j < n; ++j) {
    out.t[j] = x[j];
    out.q[j] = x[n + 1 + j];
  }
  out.p = x[n];
  return out;
}

OperatorStencil nil_dirac_stencil(int n) {
  OperatorStencil op;
  op.point_dim = 2 * n + 1;
  op.terms.push_back(
      constant_term(n, 1, Multivector::scalar(n, Complex{1.0})));
  for (int j = 1; j <= n; ++j) {
    op.terms.push_back(
        constant_term(n + j, 1, -Multivector::generator(n, j)));
    StencilTerm half;
    half.var = j - 1;
    half.deriv_order = 1;
    half.coeff = [n, j](std::span<const double> x) {
      return 0.5 * (Multivector::generator(n, j) * Complex{x[n]} +
                    Multivector::scalar(n, Complex{x[n + j]}));
    };
    op.terms.push_back(half);
  }
  return op;
}

Multivector dirac_g_residual(const GFunction& F, std::span<const double> point,
                             double h) {
  const int n = (static_cast<int>(point.size()) - 1) / 2;
  return finite_diff_apply(nil_dirac_stencil(n), F, point, h);
}

OperatorStencil nil_field_stencil(NilField f, int j, int n) {
  const bool needs_j =
      f != NilField::kP && f != NilField::kPStar;
  if (needs_j && (j < 1 || j > n))
    throw std::invalid_argument("bad field index");
  OperatorStencil op;
  op.point_dim = 2 * n + 1;
  const Multivector one = Multivector::scalar(n, Complex{1.0});
  switch (f) {
    case NilField::kT:
    case NilField::kTStar:
      op.terms.push_back(constant_term(j - 1, 1, one));
      break;
    case NilField::kP:
    case NilField::kPStar: {
      op.terms.push_back(constant_term(n, 1, one));
      const double sign = f == NilField::kP ? 0.5 : -0.5;
      for (int k = 1; k <= n; ++k) {
        StencilTerm term;
        term.var = k - 1;
        term.deriv_order = 1;
        term.coeff = [n, k, sign](std::span<const double> x) {
          return Multivector::scalar(n, Complex{sign * x[n + k]});
        };
        op.terms.push_back(term);
      }
      break;
    }
    case NilField::kQ:
    case NilField::kQStar: {
      op.terms.push_back(constant_term(n + j, 1, -one));
      const double sign = f == NilField::kQ ? 0.5 : -0.5;
      StencilTerm term;
      term.var = j - 1;
      term.deriv_order = 1;
      term.coeff = [n, sign](std::span<const double> x) {
        return Multivector::scalar(n, Complex{sign * x[n]});
      };
      op.terms.push_back(term);
      break;
    }
  }
  return op;
}

Multivector vector_field_apply(NilField f, int j, const GFunction& F,
                               std::span<const double> point, double h) {
  const int n = (static_cast<int>(point.size()) - 1) / 2;
  return finite_diff_apply(nil_field_stencil(f, j, n), F, point, h);
}

Multivector g_wavelet(const VPacket& f, const NilElement& g,
                      const QuadRule& rule) {
  const VPacket state = rho_act(g, vacuum_vpacket(f.n));
  return cliff_inner_quad(state, f, rule);
}

Multivector g_wavelet_closed(std::span<const double> tprime,
                             std::span<const double> a, const NilElement& g) {
  const int n = nil_dim(g);
  if (static_cast<int>(tprime.size()) != n ||
      static_cast<int>(a.size()) != n + 1)
    throw std::invalid_argument("parameter size mismatch");
  std::vector<Complex> comps(n);
  for (int j = 0; j < n; ++j) {
    const Complex zj{g.p, g.q[j]};
    const Complex aj{a[0], a[j + 1]};
    comps[j] = std::exp(-2.0 * kI * (g.t[j] - tprime[j]) -
                        0.5 * (std::norm(zj) + std::norm(aj)) +
                        aj * std::conj(zj));
  }
  return assemble(comps);
}

GFunction wavelet_image(std::vector<double> tprime, std::vector<double> a,
                        int n) {
  return [tprime = std::move(tprime), a = std::move(a),
          n](std::span<const double> x) {
    return g_wavelet_closed(tprime, a, point_to_nil(x, n));
  };
}

GFunction left_shift(const NilElement& h, GFunction F) {
  const int n = nil_dim(h);
  return [hinv = g_inv(h), F = std::move(F), n](std::span<const double> x) {
    return F(nil_to_point(g_mul(hinv, point_to_nil(x, n))));
  };
}

Multivector reduced_wavelet(std::span<const double> a,
                            std::span<const double> zpoint) {
  const int n = static_cast<int>(a.size()) - 1;
  if (n < 1 || zpoint.size() != a.size())
    throw std::invalid_argument("parameter size mismatch");
  std::vector<Complex> comps(n);
  for (int j = 0; j < n; ++j) {
    const Complex aj{a[0], a[j + 1]};
    const Complex zj{zpoint[0], zpoint[j + 1]};
    comps[j] = std::exp(aj * std::conj(zj));
  }
  return assemble(comps);
}

OperatorStencil reduced_dirac_stencil(int n) {
  OperatorStencil op;
  op.point_dim = n + 1;
  op.terms.push_back(
      constant_term(0, 1, Multivector::scalar(n, Complex{1.0})));
  for (int j = 1; j <= n; ++j)
    op.terms.push_back(constant_term(j, 1, -Multivector::generator(n, j)));
  return op;
}

}  // namespace cliffwave
