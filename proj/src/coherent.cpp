#include "cliffwave/coherent.hpp"

#include <cmath>
#include <stdexcept>

#include "cliffwave/nilgroup.hpp"
#include "cliffwave/oscillator.hpp"

namespace cliffwave {

namespace {

constexpr Complex kI{0.0, 1.0};

HeisenbergElement unpack_h(const GroupPt& g, int n) {
  HeisenbergElement out;
  out.t = g[0];
  out.z.resize(n);
  for (int j = 0; j < n; ++j) out.z[j] = {g[1 + 2 * j], g[2 + 2 * j]};
  return out;
}

GroupPt pack_h(const HeisenbergElement& h) {
  const int n = static_cast<int>(h.z.size());
  GroupPt out(2 * n + 1, 0.0);
  out[0] = h.t;
  for (int j = 0; j < n; ++j) {
    out[1 + 2 * j] = h.z[j].real();
    out[2 + 2 * j] = h.z[j].imag();
  }
  return out;
}

GaussPacket unpack_packet(const Carrier& c, int n) {
  GaussPacket out;
  out.amp = c[0];
  out.lin.assign(c.begin() + 1, c.end());
  if (static_cast<int>(out.lin.size()) != n)
    throw std::invalid_argument("carrier size mismatch");
  return out;
}

Carrier pack_packet(const GaussPacket& p) {
  Carrier out{p.amp};
  out.insert(out.end(), p.lin.begin(), p.lin.end());
  return out;
}

VPacket unpack_vpacket(const Carrier& c, int n) {
  if (static_cast<int>(c.size()) != 2 * n)
    throw std::invalid_argument("carrier size mismatch");
  VPacket out;
  out.n = n;
  out.amp.assign(c.begin(), c.begin() + n);
  out.lin.assign(c.begin() + n, c.end());
  return out;
}

Carrier pack_vpacket(const VPacket& f) {
  Carrier out = f.amp;
  out.insert(out.end(), f.lin.begin(), f.lin.end());
  return out;
}

double max_abs_diff(const CompVals& a, const CompVals& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

CoherentSystem make_oscillator_system(int n) {
  CoherentSystem sys;
  sys.name = "oscillator";
  sys.n = n;
  sys.components = 1;
  sys.group_dim = 2 * n + 1;
  sys.omega_dim = 2 * n;
  sys.center_dim = 1;
  sys.identity = GroupPt(2 * n + 1, 0.0);
  sys.mul = [n](const GroupPt& a, const GroupPt& b) {
    return pack_h(h_mul(unpack_h(a, n), unpack_h(b, n)));
  };
  sys.inv = [n](const GroupPt& a) { return pack_h(h_inv(unpack_h(a, n))); };
  sys.vacuum = pack_packet(vacuum_packet(n));
  sys.act = [n](const GroupPt& g, const Carrier& f) {
    return pack_packet(schrodinger_apply(unpack_h(g, n), unpack_packet(f, n)));
  };
  sys.inner = [n](const Carrier& a, const Carrier& b) {
    return CompVals{packet_inner(unpack_packet(a, n), unpack_packet(b, n))};
  };
  sys.conj_note =
      "native pairing conjugates the second slot; the state slot is "
      "conjugated when evaluating";
  sys.carrier_eval = [n](const Carrier& f, std::span<const double> x) {
    return CompVals{packet_eval(unpack_packet(f, n), x)};
  };
  sys.omega_part = [](const GroupPt& g) {
    return OmegaPt(g.begin() + 1, g.end());
  };
  sys.center_part = [](const GroupPt& g) {
    return std::vector<double>{g[0]};
  };
  sys.section = [](const OmegaPt& a) {
    GroupPt g(a.size() + 1, 0.0);
    std::copy(a.begin(), a.end(), g.begin() + 1);
    return g;
  };
  sys.center_embed = [n](std::span<const double> h) {
    GroupPt g(2 * n + 1, 0.0);
    g[0] = h[0];
    return g;
  };
  sys.character = [](std::span<const double> h, int) {
    return std::exp(2.0 * kI * h[0]);
  };
  sys.slice = [n](int) {
    std::vector<int> idx(2 * n);
    for (int i = 0; i < 2 * n; ++i) idx[i] = i;
    return idx;
  };
  sys.vacuum_wavelet = [n](const GroupPt& g) {
    double z2 = 0.0;
    for (int i = 1; i <= 2 * n; ++i) z2 += g[i] * g[i];
    return CompVals{std::exp(Complex{-0.5 * z2, -2.0 * g[0]})};
  };
  return sys;
}

CoherentSystem make_nilgroup_system(int n) {
  CoherentSystem sys;
  sys.name = "nilgroup";
  sys.n = n;
  sys.components = n;
  sys.group_dim = 2 * n + 1;
  sys.omega_dim = n + 1;
  sys.center_dim = n;
  sys.identity = GroupPt(2 * n + 1, 0.0);
  sys.mul = [n](const GroupPt& a, const GroupPt& b) {
    return nil_to_point(g_mul(point_to_nil(a, n), point_to_nil(b, n)));
  };
  sys.inv = [n](const GroupPt& a) {
    return nil_to_point(g_inv(point_to_nil(a, n)));
  };
  sys.vacuum = pack_vpacket(vacuum_vpacket(n));
  sys.act = [n](const GroupPt& g, const Carrier& f) {
    return pack_vpacket(rho_act(point_to_nil(g, n), unpack_vpacket(f, n)));
  };
  sys.inner = [n](const Carrier& a, const Carrier& b) {
    return cliff_inner_components(unpack_vpacket(a, n), unpack_vpacket(b, n));
  };
  sys.conj_note = "native pairing conjugates the first slot";
  sys.carrier_eval = [n](const Carrier& f, std::span<const double> x) {
    return vpacket_values(unpack_vpacket(f, n), x[0]);
  };
  sys.omega_part = [n](const GroupPt& g) {
    return s_project(point_to_nil(g, n));
  };
  sys.center_part = [n](const GroupPt& g) {
    return std::vector<double>(g.begin(), g.begin() + n);
  };
  sys.section = [](const OmegaPt& a) { return nil_to_point(s_embed(a)); };
  sys.center_embed = [n](std::span<const double> h) {
    GroupPt g(2 * n + 1, 0.0);
    std::copy(h.begin(), h.end(), g.begin());
    return g;
  };
  sys.character = [](std::span<const double> h, int comp) {
    return std::exp(2.0 * kI * h[comp]);
  };
  sys.slice = [](int comp) { return std::vector<int>{0, 1 + comp}; };
  sys.vacuum_wavelet = [n](const GroupPt& g) {
    CompVals out(n);
    const double p = g[n];
    for (int c = 0; c < n; ++c) {
      const double qc = g[n + 1 + c];
      out[c] = std::exp(Complex{-0.5 * (p * p + qc * qc), -2.0 * g[c]});
    }
    return out;
  };
  return sys;
}

CompVals wtransform(const CoherentSystem& sys, const Carrier& f,
                    const GroupPt& g) {
  return sys.inner(sys.act(g, sys.vacuum), f);
}

double check_intertwine(const CoherentSystem& sys, const Carrier& f,
                        const GroupPt& g, const GroupPt& gp) {
  const CompVals lhs = wtransform(sys, sys.act(g, f), gp);
  const CompVals rhs = wtransform(sys, f, sys.mul(sys.inv(g), gp));
  return max_abs_diff(lhs, rhs);
}

CompVals reduced_transform(const CoherentSystem& sys, const Carrier& f,
                           const OmegaPt& a) {
  return wtransform(sys, f, sys.section(a));
}

CompVals character_factor(const CoherentSystem& sys, const GroupPt& g) {
  const auto h = sys.center_part(g);
  CompVals out(sys.components);
  for (int c = 0; c < sys.components; ++c)
    out[c] = std::conj(sys.character(h, c));
  return out;
}

double factorization_residual(const CoherentSystem& sys, const Carrier& f,
                              const GroupPt& g) {
  const CompVals full = wtransform(sys, f, g);
  const CompVals red = reduced_transform(sys, f, sys.omega_part(g));
  const CompVals chi = character_factor(sys, g);
  CompVals rhs(sys.components);
  for (int c = 0; c < sys.components; ++c) rhs[c] = chi[c] * red[c];
  return max_abs_diff(full, rhs);
}

double homogeneity_residual(const CoherentSystem& sys,
                            std::span<const double> center_coords,
                            const GroupPt& probe) {
  const Carrier moved = sys.act(sys.center_embed(center_coords), sys.vacuum);
  const CompVals lhs = wtransform(sys, moved, probe);
  const CompVals base = wtransform(sys, sys.vacuum, probe);
  CompVals rhs(sys.components);
  for (int c = 0; c < sys.components; ++c)
    rhs[c] = sys.character(center_coords, c) * base[c];
  return max_abs_diff(lhs, rhs);
}

double unitarity_residual(const CoherentSystem& sys, const Carrier& f,
                          const Carrier& fp, const GroupPt& g) {
  const CompVals lhs = sys.inner(sys.act(g, f), sys.act(g, fp));
  const CompVals rhs = sys.inner(f, fp);
  return max_abs_diff(lhs, rhs);
}

Complex repro_kernel(const CoherentSystem& sys, const OmegaPt& a,
                     const OmegaPt& b, int comp) {
  const GroupPt g = sys.mul(sys.inv(sys.section(a)), sys.section(b));
  return sys.vacuum_wavelet(g)[comp];
}

CompVals project_apply(const CoherentSystem& sys, const OmegaFn& phi,
                       const OmegaPt& b, const QuadRule& rule) {
  CompVals out(sys.components);
  for (int c = 0; c < sys.components; ++c) {
    const std::vector<int> idx = sys.slice(c);
    out[c] = gaussian_integral(
        [&](std::span<const double> node) {
          OmegaPt a(sys.omega_dim, 0.0);
          double n2 = 0.0;
          for (size_t i = 0; i < idx.size(); ++i) {
            a[idx[i]] = node[i];
            n2 += node[i] * node[i];
          }
          return std::exp(n2) * repro_kernel(sys, a, b, c) * phi(a)[c];
        },
        static_cast<int>(idx.size()), rule);
  }
  return out;
}

CompVals reconstruct_value(const CoherentSystem& sys, const OmegaFn& phi,
                           std::span<const double> x, const QuadRule& rule) {
  CompVals out(sys.components);
  for (int c = 0; c < sys.components; ++c) {
    const std::vector<int> idx = sys.slice(c);
    out[c] = gaussian_integral(
        [&](std::span<const double> node) {
          OmegaPt a(sys.omega_dim, 0.0);
          double n2 = 0.0;
          for (size_t i = 0; i < idx.size(); ++i) {
            a[idx[i]] = node[i];
            n2 += node[i] * node[i];
          }
          const Carrier state = sys.act(sys.section(a), sys.vacuum);
          return std::exp(n2) * phi(a)[c] * sys.carrier_eval(state, x)[c];
        },
        static_cast<int>(idx.size()), rule);
  }
  return out;
}

double cr_dirac_residual(
    const OperatorStencil& op,
    const std::function<Multivector(std::span<const double>)>& F,
    std::span<const double> point, double h) {
  return finite_diff_apply(op, F, point, h).max_abs();
}

OperatorStencil sb_cr_stencil(int n, int j) {
  if (j < 1 || j > n) throw std::invalid_argument("bad stencil index");
  OperatorStencil op;
  op.point_dim = 2 * n;
  op.terms.push_back(
      constant_term(2 * j - 2, 1, Multivector::scalar(1, Complex{0.5})));
  op.terms.push_back(
      constant_term(2 * j - 1, 1, Multivector::scalar(1, 0.5 * kI)));
  StencilTerm zero;
  zero.var = 0;
  zero.deriv_order = 0;
  zero.coeff = [j](std::span<const double> x) {
    return Multivector::scalar(
        1, 0.5 * Complex{x[2 * j - 2], x[2 * j - 1]});
  };
  op.terms.push_back(zero);
  return op;
}

}  // namespace cliffwave
