#include "cliffwave/oscillator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cliffwave {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

void check_same_n(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": size mismatch");
}

void check_index(const std::vector<int>& m) {
  int total = 0;
  for (int e : m) {
    if (e < 0) throw std::invalid_argument("negative basis index");
    total += e;
  }
  if (total > kHermiteDegreeCap)
    throw std::length_error("basis degree exceeds cap " +
                            std::to_string(kHermiteDegreeCap));
}

double index_factorial_sqrt(const std::vector<int>& m) {
  double r = 1.0;
  for (int e : m)
    for (int i = 2; i <= e; ++i) r *= i;
  return std::sqrt(r);
}

// All multi-indices of size n with |m| <= cap, in lexicographic order.
void enumerate_indices(int n, int cap,
                       const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> m(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n) {
      f(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m[pos] = e;
      rec(pos + 1, left - e);
    }
    m[pos] = 0;
  };
  rec(0, cap);
}

}  // namespace

HeisenbergElement h_identity(int n) {
  return HeisenbergElement{0.0, std::vector<Complex>(n, Complex{0.0})};
}

HeisenbergElement h_mul(const HeisenbergElement& a, const HeisenbergElement& b) {
  check_same_n(a.z.size(), b.z.size(), "group product");
  HeisenbergElement out;
  double cocycle = 0.0;
  out.z.resize(a.z.size());
  for (std::size_t j = 0; j < a.z.size(); ++j) {
    cocycle += std::imag(std::conj(a.z[j]) * b.z[j]);
    out.z[j] = a.z[j] + b.z[j];
  }
  out.t = a.t + b.t + 0.5 * cocycle;
  return out;
}

HeisenbergElement h_inv(const HeisenbergElement& a) {
  HeisenbergElement out;
  out.t = -a.t;
  out.z.resize(a.z.size());
  for (std::size_t j = 0; j < a.z.size(); ++j) out.z[j] = -a.z[j];
  return out;
}

GaussPacket vacuum_packet(int n) {
  GaussPacket p;
  p.amp = std::pow(kPi, -0.25 * n);
  p.lin.assign(n, Complex{0.0});
  return p;
}

Complex packet_eval(const GaussPacket& p, std::span<const double> x) {
  check_same_n(p.lin.size(), x.size(), "packet evaluation");
  Complex expo{0.0};
  for (std::size_t j = 0; j < x.size(); ++j)
    expo += p.lin[j] * x[j] - 0.5 * x[j] * x[j];
  return p.amp * std::exp(expo);
}

Complex packet_inner(const GaussPacket& a, const GaussPacket& b) {
  check_same_n(a.lin.size(), b.lin.size(), "packet inner product");
  // Per axis: int exp((conj la + lb) x - x^2) dx = sqrt(pi) e^{(conj la+lb)^2/4}.
  Complex expo{0.0};
  for (std::size_t j = 0; j < a.lin.size(); ++j) {
    Complex s = std::conj(a.lin[j]) + b.lin[j];
    expo += 0.25 * s * s;
  }
  double root = std::pow(kPi, 0.5 * a.lin.size());
  return std::conj(a.amp) * b.amp * root * std::exp(expo);
}

double packet_norm(const GaussPacket& p) {
  return std::sqrt(std::abs(packet_inner(p, p)));
}

GaussPacket schrodinger_apply(const HeisenbergElement& g, const GaussPacket& f) {
  check_same_n(g.z.size(), f.lin.size(), "group action");
  GaussPacket out;
  out.lin.resize(f.lin.size());
  Complex expo = 2.0 * kI * g.t;
  for (std::size_t j = 0; j < f.lin.size(); ++j) {
    double p = g.z[j].real(), q = g.z[j].imag();
    expo += kI * q * p - std::numbers::sqrt2 * f.lin[j] * p - p * p;
    out.lin[j] = f.lin[j] + std::numbers::sqrt2 * std::conj(g.z[j]);
  }
  out.amp = f.amp * std::exp(expo);
  return out;
}

GaussPacket packet_shift(const GaussPacket& f, std::span<const double> c) {
  check_same_n(f.lin.size(), c.size(), "packet shift");
  GaussPacket out;
  out.lin.resize(f.lin.size());
  Complex expo{0.0};
  for (std::size_t j = 0; j < c.size(); ++j) {
    expo += f.lin[j] * c[j] - 0.5 * c[j] * c[j];
    out.lin[j] = f.lin[j] - c[j];
  }
  out.amp = f.amp * std::exp(expo);
  return out;
}

GaussPacket packet_modulate(const GaussPacket& f, std::span<const double> b) {
  check_same_n(f.lin.size(), b.size(), "packet modulation");
  GaussPacket out = f;
  for (std::size_t j = 0; j < b.size(); ++j) out.lin[j] += kI * b[j];
  return out;
}

HermiteCoeffs ladder_raise(int k, const HermiteCoeffs& c) {
  HermiteCoeffs out;
  for (const auto& [m, a] : c) {
    if (k < 0 || k >= static_cast<int>(m.size()))
      throw std::invalid_argument("ladder index out of range");
    std::vector<int> up = m;
    up[k] += 1;
    check_index(up);
    out[up] += a * std::sqrt(static_cast<double>(up[k]));
  }
  return out;
}

HermiteCoeffs ladder_lower(int k, const HermiteCoeffs& c) {
  HermiteCoeffs out;
  for (const auto& [m, a] : c) {
    if (k < 0 || k >= static_cast<int>(m.size()))
      throw std::invalid_argument("ladder index out of range");
    if (m[k] == 0) continue;
    std::vector<int> down = m;
    down[k] -= 1;
    out[down] += a * std::sqrt(static_cast<double>(m[k]));
  }
  return out;
}

namespace {

// Normalized 1-D Hermite functions h_k(x) (or their polynomial part) via the
// stable recurrence h_{k+1} = sqrt(2/(k+1)) x h_k - sqrt(k/(k+1)) h_{k-1}.
double hermite_1d(int k, double x, bool with_gaussian) {
  double h0 = std::pow(kPi, -0.25);
  if (with_gaussian) h0 *= std::exp(-0.5 * x * x);
  if (k == 0) return h0;
  double h1 = std::numbers::sqrt2 * x * h0;
  if (k == 1) return h1;
  for (int i = 1; i < k; ++i) {
    double h2 = std::sqrt(2.0 / (i + 1)) * x * h1 -
                std::sqrt(static_cast<double>(i) / (i + 1)) * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

}  // namespace

double hermite_value(std::span<const int> m, std::span<const double> x) {
  check_same_n(m.size(), x.size(), "basis evaluation");
  double v = 1.0;
  for (std::size_t j = 0; j < m.size(); ++j) v *= hermite_1d(m[j], x[j], true);
  return v;
}

double hermite_polypart(std::span<const int> m, std::span<const double> x) {
  check_same_n(m.size(), x.size(), "basis evaluation");
  double v = 1.0;
  for (std::size_t j = 0; j < m.size(); ++j) v *= hermite_1d(m[j], x[j], false);
  return v;
}

Complex hermite_coeffs_eval(const HermiteCoeffs& c, std::span<const double> x) {
  Complex v{0.0};
  for (const auto& [m, a] : c) v += a * hermite_value(m, x);
  return v;
}

double hermite_coeffs_norm(const HermiteCoeffs& c) {
  double s = 0.0;
  for (const auto& [m, a] : c) s += std::norm(a);
  return std::sqrt(s);
}

Complex generating_value(std::span<const Complex> x, std::span<const double> y) {
  check_same_n(x.size(), y.size(), "generating kernel");
  Complex expo{0.0};
  for (std::size_t j = 0; j < x.size(); ++j)
    expo += -0.5 * (x[j] * x[j] + y[j] * y[j]) +
            std::numbers::sqrt2 * x[j] * y[j];
  return std::pow(kPi, -0.25 * static_cast<double>(x.size())) * std::exp(expo);
}

Complex generating_series(std::span<const Complex> x, std::span<const double> y,
                          int cap) {
  check_same_n(x.size(), y.size(), "generating series");
  const int n = static_cast<int>(x.size());
  Complex sum{0.0};
  enumerate_indices(n, cap, [&](const std::vector<int>& m) {
    Complex mono{1.0};
    for (int j = 0; j < n; ++j)
      for (int e = 0; e < m[j]; ++e) mono *= x[j];
    sum += mono / index_factorial_sqrt(m) *
           hermite_value(std::span<const int>(m), y);
  });
  return sum;
}

Complex fock_exp_eval(const FockExp& f, std::span<const Complex> z) {
  check_same_n(f.beta.size(), z.size(), "analytic evaluation");
  Complex expo{0.0};
  for (std::size_t j = 0; j < z.size(); ++j) expo += f.beta[j] * z[j];
  return f.c * std::exp(expo);
}

FockExp bargmann_forward(const GaussPacket& f) {
  // e^{-|z|^2/2} pi^{-n/4} int f(y) e^{-(z.z+y.y)/2 + sqrt2 z.y} dy
  //   = amp pi^{n/4} e^{sum lin^2/4} e^{-|z|^2/2} e^{(lin/sqrt2).z}.
  const std::size_t n = f.lin.size();
  FockExp out;
  out.beta.resize(n);
  Complex expo{0.0};
  for (std::size_t j = 0; j < n; ++j) {
    expo += 0.25 * f.lin[j] * f.lin[j];
    out.beta[j] = f.lin[j] / std::numbers::sqrt2;
  }
  out.c = f.amp * std::pow(kPi, 0.25 * static_cast<double>(n)) * std::exp(expo);
  return out;
}

Complex bargmann_wf_value(const FockExp& f, std::span<const Complex> z) {
  double zz = 0.0;
  for (const auto& v : z) zz += std::norm(v);
  return std::exp(-0.5 * zz) * fock_exp_eval(f, z);
}

Complex bargmann_forward_quad(
    const std::function<Complex(std::span<const double>)>& f, int n,
    std::span<const Complex> z, const QuadRule& rule) {
  check_same_n(static_cast<std::size_t>(n), z.size(), "transform point");
  // Integrand f(y) A(z,y): pull one e^{-|y|^2} into the quadrature weight and
  // evaluate the rest, so integrable Hermite-type inputs stay polynomial.
  double zz = 0.0;
  for (const auto& v : z) zz += std::norm(v);
  Complex zsq{0.0};
  for (const auto& v : z) zsq += v * v;
  std::vector<Complex> zcopy(z.begin(), z.end());
  Complex integral =
      gaussian_integral(
          [&](std::span<const double> y) {
            Complex cross{0.0};
            double ysq = 0.0;
            for (int j = 0; j < n; ++j) {
              cross += zcopy[j] * y[j];
              ysq += y[j] * y[j];
            }
            // f(y) e^{+|y|^2} folds the packet Gaussians into the weight.
            return f(y) * std::exp(std::numbers::sqrt2 * cross - 0.5 * zsq +
                                   0.5 * ysq);
          },
          n, rule) *
      std::pow(kPi, 0.5 * n);  // undo the probability normalization
  return std::exp(-0.5 * zz) * std::pow(kPi, -0.25 * n) * integral;
}

Complex fock_eval(const FockCoeffs& c, int n, std::span<const Complex> z) {
  check_same_n(static_cast<std::size_t>(n), z.size(), "monomial evaluation");
  Complex v{0.0};
  for (const auto& [m, a] : c) {
    Complex mono{1.0};
    for (int j = 0; j < n; ++j)
      for (int e = 0; e < m[j]; ++e) mono *= z[j];
    v += a * mono / index_factorial_sqrt(m);
  }
  return v;
}

FockCoeffs hermite_to_fock(const HermiteCoeffs& c) {
  return FockCoeffs(c.begin(), c.end());
}

HermiteCoeffs fock_to_hermite(const FockCoeffs& c) {
  return HermiteCoeffs(c.begin(), c.end());
}

FockCoeffs fock_project(const std::function<Complex(std::span<const Complex>)>& f,
                        int n, int cap, const QuadRule& rule) {
  if (2 * n > kMaxTensorDims)
    throw std::invalid_argument("monomial projection capped at 2 complex dims");
  FockCoeffs out;
  enumerate_indices(n, cap, [&](const std::vector<int>& m) {
    double norm = index_factorial_sqrt(m);
    Complex c = gaussian_integral(
        [&](std::span<const double> pq) {
          std::vector<Complex> z(n);
          Complex mono{1.0};
          for (int j = 0; j < n; ++j) {
            z[j] = Complex{pq[j], pq[n + j]};
            for (int e = 0; e < m[j]; ++e) mono *= std::conj(z[j]);
          }
          return mono / norm * f(z);
        },
        2 * n, rule);
    if (std::abs(c) > 0.0) out[m] = c;
  });
  return out;
}

HermiteCoeffs bargmann_inverse(const FockCoeffs& f, int n, int cap,
                               const QuadRule& z_rule, const QuadRule& x_rule) {
  if (n != 1)
    throw std::invalid_argument("inverse integral implemented for n = 1");
  // Stage 1: f(x) = pi^{-1} int e^{-|z|^2/2} F(z) w_z(x) dA(z); the coherent
  // state w_z = pi^{-1/4} e^{ipq - p^2} e^{sqrt2 conj(z) x - x^2/2} carries
  // e^{-p^2}, so against the e^{-p^2-q^2} weight the remainder grows like
  // e^{q^2/2}: still integrable by the rule, converging geometrically.
  auto sample = [&](double x) {
    Complex acc = gaussian_integral(
        [&](std::span<const double> pq) {
          double p = pq[0], q = pq[1];
          Complex z{p, q};
          std::vector<Complex> zv{z};
          Complex F = fock_eval(f, 1, zv);
          Complex expo = -0.5 * std::norm(z) + kI * p * q - p * p +
                         std::numbers::sqrt2 * std::conj(z) * x - 0.5 * x * x +
                         (p * p + q * q);  // divide out the rule weight
          return F * std::exp(expo);
        },
        2, z_rule);
    return acc * std::pow(kPi, -0.25);
  };

  // Stage 2: expand over the basis by 1-D quadrature.
  std::vector<Complex> samples(x_rule.order);
  for (int i = 0; i < x_rule.order; ++i) samples[i] = sample(x_rule.nodes[i]);

  HermiteCoeffs out;
  std::vector<int> m(1, 0);
  for (int k = 0; k <= cap; ++k) {
    m[0] = k;
    Complex c{0.0};
    for (int i = 0; i < x_rule.order; ++i) {
      double x = x_rule.nodes[i];
      // <phi_k, f>: fold both half-Gaussians into the weight.
      c += x_rule.weights[i] * hermite_polypart(m, std::span<const double>(&x, 1)) *
           samples[i] * std::exp(0.5 * x * x);
    }
    if (std::abs(c) > 1e-14) out[m] = c;
  }
  return out;
}

std::function<Complex(std::span<const Complex>)> bargmann_action(
    const HeisenbergElement& g,
    std::function<Complex(std::span<const Complex>)> f) {
  return [g, f = std::move(f)](std::span<const Complex> u) {
    double zz = 0.0;
    Complex cross{0.0};
    std::vector<Complex> shifted(u.size());
    if (u.size() != g.z.size())
      throw std::invalid_argument("analytic action dimension mismatch");
    for (std::size_t j = 0; j < u.size(); ++j) {
      zz += std::norm(g.z[j]);
      cross += std::conj(g.z[j]) * u[j];
      shifted[j] = u[j] + g.z[j];
    }
    return f(shifted) * std::exp(kI * g.t - cross - 0.5 * zz);
  };
}

Complex bargmann_kernel(std::span<const Complex> u, std::span<const Complex> v) {
  check_same_n(u.size(), v.size(), "reproducing kernel");
  Complex expo{0.0};
  for (std::size_t j = 0; j < u.size(); ++j) expo += u[j] * std::conj(v[j]);
  return std::exp(expo);
}

GaussPacket coherent_packet(int n, std::span<const Complex> z) {
  HeisenbergElement g;
  g.t = 0.0;
  g.z.assign(z.begin(), z.end());
  check_same_n(static_cast<std::size_t>(n), z.size(), "coherent state");
  return schrodinger_apply(g, vacuum_packet(n));
}

}  // namespace cliffwave
