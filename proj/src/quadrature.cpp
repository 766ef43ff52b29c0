#include "cliffwave/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cliffwave {

namespace {

// Eigenvalues of a symmetric tridiagonal matrix plus first components of the
// normalized eigenvectors, via QL with implicit shifts.  d is the diagonal,
// e the subdiagonal (e[0] unused), z starts as the first unit vector.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e,
                std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  if (n == 1) return;
  const double eps = 2.220446049250313e-16;
  e.push_back(0.0);

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    while (true) {
      int m = l;
      for (; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m + 1]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iter > 60)
        throw std::runtime_error("tridiagonal QL failed to converge");

      double g = (d[l + 1] - d[l]) / (2.0 * e[l + 1]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l + 1] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i + 1];
        double b = c * e[i + 1];
        r = std::hypot(f, g);
        e[i + 2] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m + 1] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        double zf = z[i + 1];
        z[i + 1] = s * z[i] + c * zf;
        z[i] = c * z[i] - s * zf;
      }
      d[l] -= p;
      e[l + 1] = g;
      e[m + 1] = 0.0;
    }
  }

  // Sort ascending, carrying z along.
  for (int i = 0; i < n - 1; ++i) {
    int k = i;
    for (int j = i + 1; j < n; ++j)
      if (d[j] < d[k]) k = j;
    if (k != i) {
      std::swap(d[i], d[k]);
      std::swap(z[i], z[k]);
    }
  }
}

}  // namespace

QuadRule hermite_rule(int order) {
  if (order < 1 || order > kMaxQuadOrder)
    throw std::invalid_argument("quadrature order out of range [1, " +
                                std::to_string(kMaxQuadOrder) + "]");
  // Jacobi matrix of the monic Hermite recurrence for weight exp(-x^2):
  // alpha_k = 0, beta_k = k/2, mu_0 = sqrt(pi).
  std::vector<double> d(order, 0.0), e(order, 0.0), z(order, 0.0);
  for (int k = 1; k < order; ++k) e[k] = std::sqrt(k / 2.0);
  z[0] = 1.0;
  tridiag_ql(d, e, z);

  const double mu0 = std::sqrt(std::numbers::pi);
  QuadRule rule;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = d[i];
    rule.weights[i] = mu0 * z[i] * z[i];
  }
  // Enforce the exact symmetry of the rule about 0.
  for (int i = 0; i < order / 2; ++i) {
    int j = order - 1 - i;
    double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    rule.weights[i] = w;
    rule.weights[j] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

namespace {

void check_dims(int dims) {
  if (dims < 1 || dims > kMaxTensorDims)
    throw std::invalid_argument("tensor quadrature capped at " +
                                std::to_string(kMaxTensorDims) +
                                " dimensions");
}

// Walks the tensor grid, calling visit(point, weight) with the plain
// product weight (normalization applied by the caller).
template <class Visit>
void tensor_walk(int dims, const QuadRule& rule, Visit&& visit) {
  std::vector<int> idx(dims, 0);
  std::vector<double> pt(dims, 0.0);
  while (true) {
    double w = 1.0;
    for (int i = 0; i < dims; ++i) {
      pt[i] = rule.nodes[idx[i]];
      w *= rule.weights[idx[i]];
    }
    visit(std::span<const double>(pt), w);
    int i = 0;
    for (; i < dims; ++i) {
      if (++idx[i] < rule.order) break;
      idx[i] = 0;
    }
    if (i == dims) break;
  }
}

}  // namespace

Complex gaussian_integral(
    const std::function<Complex(std::span<const double>)>& f, int dims,
    const QuadRule& rule) {
  check_dims(dims);
  Complex acc{0.0};
  tensor_walk(dims, rule,
              [&](std::span<const double> pt, double w) { acc += w * f(pt); });
  return acc * std::pow(std::numbers::pi, -0.5 * dims);
}

Multivector gaussian_integral_mv(
    const std::function<Multivector(std::span<const double>)>& f, int dims,
    const QuadRule& rule, int mv_dim) {
  check_dims(dims);
  Multivector acc(mv_dim);
  tensor_walk(dims, rule, [&](std::span<const double> pt, double w) {
    acc += f(pt) * Complex{w};
  });
  return acc * Complex{std::pow(std::numbers::pi, -0.5 * dims)};
}

Complex gaussian_inner(const std::function<Complex(std::span<const double>)>& f,
                       const std::function<Complex(std::span<const double>)>& g,
                       int dims, const QuadRule& rule) {
  return gaussian_integral(
      [&](std::span<const double> x) { return std::conj(f(x)) * g(x); }, dims,
      rule);
}

StencilTerm constant_term(int var, int deriv_order, Multivector coeff) {
  StencilTerm t;
  t.var = var;
  t.deriv_order = deriv_order;
  t.coeff = [c = std::move(coeff)](std::span<const double>) { return c; };
  return t;
}

Multivector finite_diff_apply(
    const OperatorStencil& op,
    const std::function<Multivector(std::span<const double>)>& f,
    std::span<const double> point, double h) {
  if (static_cast<int>(point.size()) != op.point_dim)
    throw std::invalid_argument("stencil point dimension mismatch");
  if (h <= 0.0) throw std::invalid_argument("step must be positive");

  std::vector<double> p(point.begin(), point.end());
  Multivector center = f(point);
  Multivector out(center.dim());
  for (const auto& term : op.terms) {
    if (term.var < 0 || term.var >= op.point_dim)
      throw std::invalid_argument("stencil variable out of range");
    if (term.deriv_order == 0) {
      out += term.coeff(point) * center;
      continue;
    }
    double saved = p[term.var];
    p[term.var] = saved + h;
    Multivector fp = f(p);
    p[term.var] = saved - h;
    Multivector fm = f(p);
    p[term.var] = saved;

    Multivector diff(center.dim());
    if (term.deriv_order == 1) {
      diff = (fp - fm) * Complex{1.0 / (2.0 * h)};
    } else if (term.deriv_order == 2) {
      diff = (fp - center * Complex{2.0} + fm) * Complex{1.0 / (h * h)};
    } else {
      throw std::invalid_argument("stencil derivative order must be 0, 1, or 2");
    }
    out += term.coeff(point) * diff;
  }
  return out;
}

}  // namespace cliffwave
