#include "cliffwave/monomodel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cliffwave {

namespace {

// Plain complex polynomial in x1..xn, used for restrictions at x0 = 0.
using PolyMap = std::map<std::vector<int>, Complex>;

void check_index(const M2Element& a, const std::vector<int>& k) {
  if (static_cast<int>(k.size()) != a.n)
    throw std::invalid_argument("index size does not match dimension");
  for (int ki : k)
    if (ki < 0) throw std::invalid_argument("negative exponent");
}

void check_element(const M2Element& a) {
  for (const auto& [k, c] : a.coeff) {
    check_index(a, k);
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("non-finite coefficient");
  }
}

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / i;
  return r;
}

PolyMap restriction_of(const M2Element& a) {
  PolyMap out;
  for (const auto& [k, c] : a.coeff)
    out[k] += c / std::sqrt(multi_factorial(k));
  return out;
}

M2Element from_restriction(const PolyMap& p, int n) {
  M2Element out{n, {}};
  for (const auto& [k, c] : p) {
    if (c == Complex{0.0}) continue;
    out.coeff[k] = c * std::sqrt(multi_factorial(k));
  }
  return out;
}

// Substitute x_j -> x_j + s_j term by term.
PolyMap shift_poly(const PolyMap& p, std::span<const double> s) {
  PolyMap out;
  const int n = static_cast<int>(s.size());
  for (const auto& [k, c] : p) {
    std::vector<int> m(n, 0);
    std::function<void(int, Complex)> walk = [&](int j, Complex acc) {
      if (j == n) {
        out[m] += acc;
        return;
      }
      double pw = 1.0;
      for (int mj = k[j]; mj >= 0; --mj) {
        m[j] = mj;
        walk(j + 1, acc * binom(k[j], mj) * pw);
        pw *= s[j];
      }
      m[j] = 0;
    };
    walk(0, c);
  }
  return out;
}

// Coefficients of exp(w.x) up to total degree cap: prod w_j^{k_j}/k_j!.
PolyMap exp_poly(std::span<const double> w, int cap) {
  PolyMap out;
  const int n = static_cast<int>(w.size());
  std::vector<int> k(n, 0);
  std::function<void(int, int, double)> walk = [&](int j, int left,
                                                   double acc) {
    if (j == n) {
      out[k] = acc;
      return;
    }
    double term = acc;
    for (int kj = 0; kj <= left; ++kj) {
      k[j] = kj;
      walk(j + 1, left - kj, term);
      term *= w[j] / (kj + 1);
    }
    k[j] = 0;
  };
  walk(0, cap, 1.0);
  return out;
}

PolyMap mul_poly(const PolyMap& a, const PolyMap& b) {
  PolyMap out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      std::vector<int> k(ka.size());
      for (size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
      out[k] += ca * cb;
    }
  return out;
}

// The group action on the restriction: shift by (u-v)/sqrt(2), multiply by
// the degree-capped expansion of exp(((u+v)/sqrt(2)).x), scale by the real
// factor exp(-(t + (u.u - v.v)/4)).
PolyMap act_restriction(const HeisenbergElement& g, const PolyMap& f, int n,
                        int e_degree) {
  std::vector<double> s(n), w(n);
  double uu = 0.0, vv = 0.0;
  for (int j = 0; j < n; ++j) {
    const double u = g.z[j].real();
    const double v = g.z[j].imag();
    s[j] = (u - v) / std::numbers::sqrt2;
    w[j] = (u + v) / std::numbers::sqrt2;
    uu += u * u;
    vv += v * v;
  }
  const double scale = std::exp(-(g.t + 0.25 * (uu - vv)));
  PolyMap out = mul_poly(exp_poly(w, e_degree), shift_poly(f, s));
  for (auto& [k, c] : out) c *= scale;
  return out;
}

double offscalar_mass(const Multivector& m) {
  double s = 0.0;
  for (const auto& [b, c] : m.terms())
    if (b != 0) s += std::norm(c);
  return std::sqrt(s);
}

}  // namespace

M2Element m2_basis(int n, const std::vector<int>& k) {
  M2Element out{n, {}};
  out.coeff[k] = 1.0;
  check_element(out);
  return out;
}

M2Element m2_add(const M2Element& a, const M2Element& b) {
  if (a.n != b.n) throw std::invalid_argument("dimension mismatch");
  M2Element out = a;
  for (const auto& [k, c] : b.coeff) {
    auto& slot = out.coeff[k];
    slot += c;
    if (slot == Complex{0.0}) out.coeff.erase(k);
  }
  return out;
}

M2Element m2_scale(const M2Element& a, Complex c) {
  M2Element out{a.n, {}};
  if (c == Complex{0.0}) return out;
  for (const auto& [k, v] : a.coeff) out.coeff[k] = v * c;
  return out;
}

int m2_degree(const M2Element& a) {
  int d = -1;
  for (const auto& [k, c] : a.coeff)
    if (c != Complex{0.0}) d = std::max(d, multi_degree(k));
  return d;
}

double m2_norm(const M2Element& a) {
  double s = 0.0;
  for (const auto& [k, c] : a.coeff) s += std::norm(c);
  return std::sqrt(s);
}

double m2_distance(const M2Element& a, const M2Element& b) {
  return m2_norm(m2_add(a, m2_scale(b, -1.0)));
}

CliffPoly m2_realize(const M2Element& a, int degree_cap) {
  check_element(a);
  CliffPoly out(a.n);
  for (const auto& [k, c] : a.coeff)
    out += monogenic_monomial(a.n, k, degree_cap).scaled(c);
  return out;
}

Complex m2_inner_exact(const M2Element& f, const M2Element& g) {
  if (f.n != g.n) throw std::invalid_argument("dimension mismatch");
  Complex s = 0.0;
  for (const auto& [k, c] : f.coeff) {
    auto it = g.coeff.find(k);
    if (it != g.coeff.end()) s += std::conj(c) * it->second;
  }
  return s;
}

M2Inner m2_inner(const M2Element& f, const M2Element& g, const QuadRule& rule) {
  M2Inner out;
  out.exact = m2_inner_exact(f, g);
  const int dims = f.n + 1;
  const int cap =
      std::max({kDefaultDegreeCap, m2_degree(f), m2_degree(g)});
  const CliffPoly fr = m2_realize(f, cap);
  const CliffPoly gr = m2_realize(g, cap);
  const Multivector full = gaussian_integral_mv(
      [&](std::span<const double> x) {
        return conjugate(fr.eval(x)) * gr.eval(x);
      },
      dims, rule, f.n);
  out.quadrature = full.scalar_part();
  out.offscalar = offscalar_mass(full);
  return out;
}

M2Element create_apply(int j, const M2Element& f, int degree_cap) {
  if (j < 1 || j > f.n) throw std::invalid_argument("bad ladder index");
  M2Element out{f.n, {}};
  for (const auto& [k, c] : f.coeff) {
    if (multi_degree(k) + 1 > degree_cap)
      throw std::length_error("degree cap exceeded");
    std::vector<int> up = k;
    up[j - 1] += 1;
    out.coeff[up] += c * std::sqrt(static_cast<double>(up[j - 1]));
  }
  return out;
}

M2Element annihilate_apply(int j, const M2Element& f) {
  if (j < 1 || j > f.n) throw std::invalid_argument("bad ladder index");
  M2Element out{f.n, {}};
  for (const auto& [k, c] : f.coeff) {
    if (k[j - 1] == 0) continue;
    std::vector<int> down = k;
    down[j - 1] -= 1;
    out.coeff[down] += c * std::sqrt(static_cast<double>(k[j - 1]));
  }
  return out;
}

M2ActResult pi_m2_act(const HeisenbergElement& g, const M2Element& f,
                      int trunc_degree) {
  if (static_cast<int>(g.z.size()) != f.n)
    throw std::invalid_argument("dimension mismatch");
  check_element(f);
  const PolyMap r = restriction_of(f);
  M2ActResult out;
  out.value = from_restriction(act_restriction(g, r, f.n, trunc_degree), f.n);
  // Mass the exponential truncation dropped, measured after the full
  // pipeline against a longer expansion.
  const M2Element wide =
      from_restriction(act_restriction(g, r, f.n, trunc_degree + 8), f.n);
  out.tail = m2_distance(out.value, wide);
  return out;
}

M2Coherent m2_coherent(const HeisenbergElement& g, int trunc_degree) {
  const int n = static_cast<int>(g.z.size());
  const M2ActResult act =
      pi_m2_act(g, m2_basis(n, std::vector<int>(n, 0)), trunc_degree);
  M2Coherent out;
  out.expansion = act.value;
  out.tail = act.tail;
  std::vector<double> w(n);
  double uu = 0.0, vv = 0.0;
  for (int j = 0; j < n; ++j) {
    const double u = g.z[j].real();
    const double v = g.z[j].imag();
    w[j] = (u + v) / std::numbers::sqrt2;
    uu += u * u;
    vv += v * v;
  }
  const double scale = std::exp(-(g.t + 0.25 * (uu - vv)));
  out.eval = [w, scale](std::span<const double> point) {
    return scale * monogenic_exponential(w, point);
  };
  return out;
}

Multivector b_kernel(std::span<const Complex> z, std::span<const double> point,
                     int n, int trunc_degree, BConvention conv) {
  if (static_cast<int>(z.size()) != n ||
      static_cast<int>(point.size()) != n + 1)
    throw std::invalid_argument("dimension mismatch");
  Multivector out(n);
  const int cap = std::max(kDefaultDegreeCap, trunc_degree);
  std::vector<int> k(n, 0);
  std::function<void(int, int, Complex)> walk = [&](int j, int left,
                                                    Complex acc) {
    if (j == n) {
      const double root = std::sqrt(multi_factorial(k));
      out += monogenic_monomial(n, k, cap).eval(point) * (acc / root);
      return;
    }
    Complex term = acc;
    const Complex base = conv == BConvention::kConjugated ? std::conj(z[j])
                                                          : z[j];
    for (int kj = 0; kj <= left; ++kj) {
      k[j] = kj;
      walk(j + 1, left - kj, term);
      term *= base;
    }
    k[j] = 0;
  };
  // acc carries z^k; the 1/sqrt(k!) joins V_k's own normalization to give
  // z^k/k! overall, summing to the exponential on restriction.
  walk(0, trunc_degree, 1.0);
  return out;
}

M2Element b_transform(const FockCoeffs& f, int n) {
  M2Element out{n, f};
  check_element(out);
  return out;
}

FockCoeffs b_inverse(const M2Element& f) {
  check_element(f);
  return f.coeff;
}

Multivector b_integral_apply(const FockCoeffs& f, int n,
                             std::span<const double> point, int trunc_degree,
                             const QuadRule& rule) {
  return gaussian_integral_mv(
      [&](std::span<const double> xy) {
        std::vector<Complex> z(n);
        for (int j = 0; j < n; ++j) z[j] = {xy[2 * j], xy[2 * j + 1]};
        return b_kernel(z, point, n, trunc_degree) * fock_eval(f, n, z);
      },
      2 * n, rule, n);
}

Complex b_integral_inverse(const M2Element& f, std::span<const Complex> z,
                           int trunc_degree, const QuadRule& rule) {
  const int n = f.n;
  const CliffPoly fr = m2_realize(f, std::max(kDefaultDegreeCap, m2_degree(f)));
  const std::vector<Complex> zz(z.begin(), z.end());
  const Multivector full = gaussian_integral_mv(
      [&](std::span<const double> x) {
        return conjugate(b_kernel(zz, x, n, trunc_degree)) * fr.eval(x);
      },
      n + 1, rule, n);
  return full.scalar_part();
}

Multivector m2_repro_kernel(std::span<const double> x,
                            std::span<const double> y, int n,
                            int trunc_degree) {
  if (static_cast<int>(x.size()) != n + 1 ||
      static_cast<int>(y.size()) != n + 1)
    throw std::invalid_argument("dimension mismatch");
  Multivector out(n);
  const int cap = std::max(kDefaultDegreeCap, trunc_degree);
  std::vector<int> k(n, 0);
  std::function<void(int, int)> walk = [&](int j, int left) {
    if (j == n) {
      const CliffPoly vk = monogenic_monomial(n, k, cap);
      out += vk.eval(x) * conjugate(vk.eval(y));
      return;
    }
    for (int kj = 0; kj <= left; ++kj) {
      k[j] = kj;
      walk(j + 1, left - kj);
    }
    k[j] = 0;
  };
  walk(0, trunc_degree);
  return out;
}

Multivector m2_reproduce(const M2Element& f, std::span<const double> y,
                         int trunc_degree, const QuadRule& rule) {
  const int n = f.n;
  const CliffPoly fr = m2_realize(f, std::max(kDefaultDegreeCap, m2_degree(f)));
  const std::vector<double> yy(y.begin(), y.end());
  return gaussian_integral_mv(
      [&](std::span<const double> x) {
        return conjugate(m2_repro_kernel(x, yy, n, trunc_degree)) * fr.eval(x);
      },
      n + 1, rule, n);
}

}  // namespace cliffwave
