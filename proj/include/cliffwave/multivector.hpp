#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace cliffwave {

using Complex = std::complex<double>;

// Basis blade of Cl(0,n), encoded as a bitmask: bit j-1 set <=> generator e_j
// present. 0 encodes the scalar unit.
using Blade = std::uint32_t;

inline constexpr int kMaxDimension = 12;
inline constexpr int kMaxSymFactors = 10;

int blade_grade(Blade b);

// Sign accumulated when multiplying canonical blades a and b and reordering
// the result into canonical form: one factor -1 per transposition, one per
// shared generator (e_j e_j = -1).
int product_sign(Blade a, Blade b);

std::string blade_name(Blade b);

// Sparse multivector over Cl(0,n) with complex coefficients.  Value type:
// every operation returns a fresh object, exact zeros are pruned.
class Multivector {
 public:
  explicit Multivector(int dim);

  static Multivector scalar(int dim, Complex value);
  static Multivector generator(int dim, int j);  // e_j, 1-based
  static Multivector basis_blade(int dim, Blade b, Complex coeff = 1.0);

  int dim() const { return dim_; }
  const std::map<Blade, Complex>& terms() const { return terms_; }

  Complex coefficient(Blade b) const;
  Complex scalar_part() const { return coefficient(0); }
  void add_term(Blade b, Complex coeff);

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(Complex c);

  friend Multivector operator+(Multivector lhs, const Multivector& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Multivector operator-(Multivector lhs, const Multivector& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend Multivector operator*(Multivector lhs, Complex c) {
    lhs *= c;
    return lhs;
  }
  friend Multivector operator*(Complex c, Multivector rhs) {
    rhs *= c;
    return rhs;
  }
  Multivector operator-() const;

  // Geometric product.
  friend Multivector operator*(const Multivector& lhs, const Multivector& rhs);

  // max |coefficient|; 0 for the zero element.
  double max_abs() const;
  // sqrt(sum |coefficient|^2), the coefficient 2-norm.
  double norm() const;
  bool is_zero(double tol = 0.0) const { return max_abs() <= tol; }

  std::string to_string() const;

 private:
  int dim_;
  std::map<Blade, Complex> terms_;
};

// Clifford conjugation composed with complex conjugation of coefficients:
// grade-r blades pick up (-1)^(r(r+1)/2).  Anti-automorphism.
Multivector conjugate(const Multivector& a);

// Average of the products over all k! orderings of the factors, k <= 10.
Multivector symmetrized_product(std::span<const Multivector> factors);

double distance(const Multivector& a, const Multivector& b);

}  // namespace cliffwave
