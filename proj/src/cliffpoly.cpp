#include "cliffwave/cliffpoly.hpp"

#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cliffwave {

namespace {

void check_same_shape(const CliffPoly& a, const CliffPoly& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("polynomial dimension mismatch: n=" +
                                std::to_string(a.n()) + " vs n=" +
                                std::to_string(b.n()));
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

int multi_degree(const MultiIndex& k) {
  return std::accumulate(k.begin(), k.end(), 0);
}

double multi_factorial(const MultiIndex& k) {
  double r = 1.0;
  for (int e : k)
    for (int i = 2; i <= e; ++i) r *= i;
  return r;
}

CliffPoly::CliffPoly(int n) : n_(n) {
  if (n < 0 || n > kMaxDimension)
    throw std::invalid_argument("polynomial dimension out of range");
}

CliffPoly CliffPoly::monomial(int n, const MultiIndex& k, Multivector coeff) {
  CliffPoly p(n);
  p.add_term(k, coeff);
  return p;
}

CliffPoly CliffPoly::constant(int n, Complex value) {
  return monomial(n, MultiIndex(n + 1, 0), Multivector::scalar(n, value));
}

int CliffPoly::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, multi_degree(k));
  return d;
}

void CliffPoly::add_term(const MultiIndex& k, const Multivector& coeff) {
  if (static_cast<int>(k.size()) != n_ + 1)
    throw std::invalid_argument("multi-index size must be n+1");
  for (int e : k)
    if (e < 0) throw std::invalid_argument("negative exponent");
  if (coeff.dim() != n_)
    throw std::invalid_argument("coefficient dimension mismatch");
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    if (!coeff.is_zero()) terms_.emplace(k, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Multivector CliffPoly::coefficient(const MultiIndex& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Multivector(n_) : it->second;
}

CliffPoly& CliffPoly::operator+=(const CliffPoly& rhs) {
  check_same_shape(*this, rhs);
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

CliffPoly& CliffPoly::operator-=(const CliffPoly& rhs) {
  check_same_shape(*this, rhs);
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

CliffPoly CliffPoly::scaled(Complex c) const {
  CliffPoly out(n_);
  if (c == Complex{0.0}) return out;
  for (const auto& [k, m] : terms_) out.terms_.emplace(k, m * c);
  return out;
}

CliffPoly CliffPoly::scaled_left(const Multivector& m) const {
  CliffPoly out(n_);
  for (const auto& [k, c] : terms_) out.add_term(k, m * c);
  return out;
}

double CliffPoly::max_abs() const {
  double r = 0.0;
  for (const auto& [k, c] : terms_) r = std::max(r, c.max_abs());
  return r;
}

Multivector CliffPoly::eval(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != n_ + 1)
    throw std::invalid_argument("evaluation point must have n+1 coordinates");
  Multivector out(n_);
  for (const auto& [k, c] : terms_) {
    double mono = 1.0;
    for (int i = 0; i <= n_; ++i)
      for (int e = 0; e < k[i]; ++e) mono *= point[i];
    out += c * Complex{mono};
  }
  return out;
}

std::string CliffPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.to_string() << "]";
    for (int i = 0; i <= n_; ++i)
      if (k[i] > 0) {
        os << "*x" << i;
        if (k[i] > 1) os << "^" << k[i];
      }
  }
  return os.str();
}

CliffPoly multiply(const CliffPoly& p, const CliffPoly& q, int degree_cap) {
  check_same_shape(p, q);
  CliffPoly out(p.n());
  for (const auto& [ka, ca] : p.terms())
    for (const auto& [kb, cb] : q.terms()) {
      MultiIndex k(ka.size());
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
      if (multi_degree(k) > degree_cap)
        throw std::length_error("polynomial product exceeds degree cap " +
                                std::to_string(degree_cap));
      out.add_term(k, ca * cb);
    }
  return out;
}

CliffPoly derivative(const CliffPoly& p, int var) {
  if (var < 0 || var > p.n())
    throw std::invalid_argument("derivative variable out of range");
  CliffPoly out(p.n());
  for (const auto& [k, c] : p.terms()) {
    if (k[var] == 0) continue;
    MultiIndex kd = k;
    kd[var] -= 1;
    out.add_term(kd, c * Complex{static_cast<double>(k[var])});
  }
  return out;
}

CliffPoly dirac(const CliffPoly& p) {
  CliffPoly out = derivative(p, 0);
  for (int j = 1; j <= p.n(); ++j) {
    Multivector ej = Multivector::generator(p.n(), j);
    out += derivative(p, j).scaled_left(ej);
  }
  return out;
}

CliffPoly restrict_x0(const CliffPoly& p) {
  CliffPoly out(p.n());
  for (const auto& [k, c] : p.terms())
    if (k[0] == 0) out.add_term(k, c);
  return out;
}

bool depends_on_x0(const CliffPoly& p) {
  for (const auto& [k, c] : p.terms())
    if (k[0] > 0) return true;
  return false;
}

CliffPoly ck_extension(const CliffPoly& p, int degree_cap) {
  if (depends_on_x0(p))
    throw std::invalid_argument("extension input must not involve x0");
  if (p.degree() > degree_cap)
    throw std::length_error("extension input exceeds degree cap");

  // Spatial Dirac part, sum_j e_j d_j.
  auto spatial_dirac = [](const CliffPoly& f) {
    CliffPoly out(f.n());
    for (int j = 1; j <= f.n(); ++j)
      out += derivative(f, j).scaled_left(Multivector::generator(f.n(), j));
    return out;
  };

  CliffPoly out = p;
  CliffPoly layer = p;
  double kfact = 1.0;
  for (int k = 1; !layer.is_zero(); ++k) {
    layer = spatial_dirac(layer);
    if (layer.is_zero()) break;
    kfact *= k;
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    for (const auto& [idx, c] : layer.terms()) {
      MultiIndex shifted = idx;
      shifted[0] += k;
      out.add_term(shifted, c * Complex{sign / kfact});
    }
  }
  return out;
}

CliffPoly ck_product(const CliffPoly& f, const CliffPoly& g, double tol,
                     int degree_cap) {
  check_same_shape(f, g);
  if (dirac(f).max_abs() > tol || dirac(g).max_abs() > tol)
    throw std::domain_error("monogenic product requires monogenic factors");
  return ck_extension(multiply(restrict_x0(f), restrict_x0(g), degree_cap),
                      degree_cap);
}

CliffPoly monogenic_monomial(int n, const std::vector<int>& k,
                             int degree_cap) {
  if (static_cast<int>(k.size()) != n)
    throw std::invalid_argument("basis index must have size n");
  if (multi_degree(k) > degree_cap)
    throw std::length_error("basis degree exceeds cap");

  static std::mutex cache_mutex;
  static std::map<std::pair<int, std::vector<int>>, CliffPoly> cache;
  {
    std::scoped_lock lock(cache_mutex);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
  }

  MultiIndex idx(n + 1, 0);
  for (int j = 0; j < n; ++j) idx[j + 1] = k[j];
  double scale = 1.0 / std::sqrt(multi_factorial(idx));
  CliffPoly base =
      CliffPoly::monomial(n, idx, Multivector::scalar(n, Complex{scale}));
  CliffPoly result = ck_extension(base, degree_cap);

  std::scoped_lock lock(cache_mutex);
  cache.emplace(std::make_pair(n, k), result);
  return result;
}

Multivector monogenic_exponential(std::span<const double> u,
                                  std::span<const double> point) {
  const int n = static_cast<int>(u.size());
  if (static_cast<int>(point.size()) != n + 1)
    throw std::invalid_argument("point must have n+1 coordinates");
  double dot = 0.0, norm2 = 0.0;
  for (int j = 0; j < n; ++j) {
    dot += u[j] * point[j + 1];
    norm2 += u[j] * u[j];
  }
  const double rho = std::sqrt(norm2);
  const double x0 = point[0];
  const double radial = std::exp(dot);

  Multivector out = Multivector::scalar(n, Complex{radial * std::cos(rho * x0)});
  // (u/rho) sin(rho x0) -> u * x0 * sinc(rho x0); stable as u -> 0.
  double phase = rho * x0;
  double sinc = std::abs(phase) < 1e-8 ? 1.0 - phase * phase / 6.0
                                       : std::sin(phase) / phase;
  for (int j = 0; j < n; ++j)
    out += Multivector::generator(n, j + 1) *
           Complex{-radial * u[j] * x0 * sinc};
  return out;
}

CliffPoly shift_spatial(const CliffPoly& p, std::span<const double> c) {
  if (static_cast<int>(c.size()) != p.n())
    throw std::invalid_argument("shift vector must have size n");
  CliffPoly out(p.n());
  for (const auto& [k, coeff] : p.terms()) {
    // Expand prod_j (x_j + c_j)^{k_j}; x0 passes through.
    std::vector<std::pair<MultiIndex, double>> expansion{
        {MultiIndex(p.n() + 1, 0), 1.0}};
    expansion[0].first[0] = k[0];
    for (int j = 1; j <= p.n(); ++j) {
      if (k[j] == 0) continue;
      std::vector<std::pair<MultiIndex, double>> next;
      for (const auto& [idx, w] : expansion)
        for (int m = 0; m <= k[j]; ++m) {
          MultiIndex idx2 = idx;
          idx2[j] = m;
          double w2 = w * binomial(k[j], m) *
                      std::pow(c[j - 1], static_cast<double>(k[j] - m));
          next.emplace_back(std::move(idx2), w2);
        }
      expansion = std::move(next);
    }
    for (const auto& [idx, w] : expansion) out.add_term(idx, coeff * Complex{w});
  }
  return out;
}

}  // namespace cliffwave
