#include "cliffwave/multivector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cliffwave {

namespace {

void check_dim(int dim) {
  if (dim < 0 || dim > kMaxDimension)
    throw std::invalid_argument("multivector dimension out of range [0, " +
                                std::to_string(kMaxDimension) + "]");
}

void check_same_dim(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("dimension mismatch: Cl(0," +
                                std::to_string(a.dim()) + ") vs Cl(0," +
                                std::to_string(b.dim()) + ")");
}

}  // namespace

int blade_grade(Blade b) { return std::popcount(b); }

int product_sign(Blade a, Blade b) {
  // Count transpositions needed to interleave the generators of b into a.
  int swaps = 0;
  Blade a_high = a >> 1;
  while (a_high != 0) {
    swaps += std::popcount(a_high & b);
    a_high >>= 1;
  }
  // Each shared generator contracts with e_j e_j = -1.
  swaps += std::popcount(a & b);
  return (swaps % 2 == 0) ? 1 : -1;
}

std::string blade_name(Blade b) {
  if (b == 0) return "1";
  std::string name;
  for (int j = 1; j <= kMaxDimension; ++j)
    if (b & (Blade{1} << (j - 1))) name += "e" + std::to_string(j);
  return name;
}

Multivector::Multivector(int dim) : dim_(dim) { check_dim(dim); }

Multivector Multivector::scalar(int dim, Complex value) {
  Multivector m(dim);
  m.add_term(0, value);
  return m;
}

Multivector Multivector::generator(int dim, int j) {
  if (j < 1 || j > dim)
    throw std::invalid_argument("generator index out of range");
  Multivector m(dim);
  m.add_term(Blade{1} << (j - 1), 1.0);
  return m;
}

Multivector Multivector::basis_blade(int dim, Blade b, Complex coeff) {
  Multivector m(dim);
  if (b >= (Blade{1} << dim))
    throw std::invalid_argument("blade outside Cl(0,n)");
  m.add_term(b, coeff);
  return m;
}

Complex Multivector::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Complex{0.0} : it->second;
}

void Multivector::add_term(Blade b, Complex coeff) {
  if (b >= (Blade{1} << dim_))
    throw std::invalid_argument("blade outside Cl(0,n)");
  auto [it, inserted] = terms_.try_emplace(b, coeff);
  if (!inserted) it->second += coeff;
  if (it->second == Complex{0.0}) terms_.erase(it);
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  check_same_dim(*this, rhs);
  for (const auto& [b, c] : rhs.terms_) add_term(b, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  check_same_dim(*this, rhs);
  for (const auto& [b, c] : rhs.terms_) add_term(b, -c);
  return *this;
}

Multivector& Multivector::operator*=(Complex c) {
  if (c == Complex{0.0}) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, v] : terms_) v *= c;
  return *this;
}

Multivector Multivector::operator-() const {
  Multivector out(dim_);
  for (const auto& [b, c] : terms_) out.terms_.emplace(b, -c);
  return out;
}

Multivector operator*(const Multivector& lhs, const Multivector& rhs) {
  check_same_dim(lhs, rhs);
  Multivector out(lhs.dim());
  for (const auto& [ba, ca] : lhs.terms_)
    for (const auto& [bb, cb] : rhs.terms_) {
      Complex c = ca * cb * static_cast<double>(product_sign(ba, bb));
      out.add_term(ba ^ bb, c);
    }
  return out;
}

double Multivector::max_abs() const {
  double m = 0.0;
  for (const auto& [b, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

double Multivector::norm() const {
  double s = 0.0;
  for (const auto& [b, c] : terms_) s += std::norm(c);
  return std::sqrt(s);
}

std::string Multivector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
    if (b != 0) os << "*" << blade_name(b);
  }
  return os.str();
}

Multivector conjugate(const Multivector& a) {
  Multivector out(a.dim());
  for (const auto& [b, c] : a.terms()) {
    int r = blade_grade(b);
    double sign = (r * (r + 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    out.add_term(b, sign * std::conj(c));
  }
  return out;
}

Multivector symmetrized_product(std::span<const Multivector> factors) {
  if (factors.empty())
    throw std::invalid_argument("symmetrized product of no factors");
  const int k = static_cast<int>(factors.size());
  if (k > kMaxSymFactors)
    throw std::invalid_argument("symmetrized product capped at " +
                                std::to_string(kMaxSymFactors) + " factors");
  for (const auto& f : factors) check_same_dim(factors[0], f);

  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Multivector sum(factors[0].dim());
  std::uint64_t count = 0;
  do {
    Multivector p = factors[perm[0]];
    for (int i = 1; i < k; ++i) p = p * factors[perm[i]];
    sum += p;
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  sum *= Complex{1.0 / static_cast<double>(count)};
  return sum;
}

double distance(const Multivector& a, const Multivector& b) {
  return (a - b).max_abs();
}

}  // namespace cliffwave
