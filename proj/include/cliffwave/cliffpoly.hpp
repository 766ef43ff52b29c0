#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cliffwave/multivector.hpp"

namespace cliffwave {

// Exponent vector over the variables x0..xn (size n+1, entry i is the power
// of x_i).  Compared lexicographically, which keeps map iteration stable.
using MultiIndex = std::vector<int>;

inline constexpr int kDefaultDegreeCap = 12;

int multi_degree(const MultiIndex& k);
double multi_factorial(const MultiIndex& k);  // prod k_i!

// Polynomial in x0..xn with Multivector coefficients (coefficients multiply
// from the left of the monomial).
class CliffPoly {
 public:
  explicit CliffPoly(int n);

  static CliffPoly monomial(int n, const MultiIndex& k, Multivector coeff);
  static CliffPoly constant(int n, Complex value);

  int n() const { return n_; }            // spatial dimension
  int var_count() const { return n_ + 1; }
  const std::map<MultiIndex, Multivector>& terms() const { return terms_; }

  int degree() const;  // -1 for the zero polynomial
  void add_term(const MultiIndex& k, const Multivector& coeff);
  Multivector coefficient(const MultiIndex& k) const;

  CliffPoly& operator+=(const CliffPoly& rhs);
  CliffPoly& operator-=(const CliffPoly& rhs);
  friend CliffPoly operator+(CliffPoly lhs, const CliffPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend CliffPoly operator-(CliffPoly lhs, const CliffPoly& rhs) {
    lhs -= rhs;
    return lhs;
  }

  CliffPoly scaled(Complex c) const;
  CliffPoly scaled_left(const Multivector& m) const;  // m * coeff per term

  double max_abs() const;
  bool is_zero(double tol = 0.0) const { return max_abs() <= tol; }

  Multivector eval(std::span<const double> point) const;

  std::string to_string() const;

 private:
  int n_;
  std::map<MultiIndex, Multivector> terms_;
};

// Product with degree guard: throws std::length_error past the cap.
CliffPoly multiply(const CliffPoly& p, const CliffPoly& q,
                   int degree_cap = kDefaultDegreeCap);

CliffPoly derivative(const CliffPoly& p, int var);

// D = sum_{i=0..n} e_i d/dx_i with e_0 = 1, generators multiplying from the
// left.  A polynomial is monogenic when this vanishes.
CliffPoly dirac(const CliffPoly& p);

CliffPoly restrict_x0(const CliffPoly& p);  // substitute x0 = 0
bool depends_on_x0(const CliffPoly& p);

// Unique monogenic extension of a polynomial in x1..xn:
// sum_k (-x0)^k/k! (sum_j e_j d_j)^k p.  Restriction at x0 = 0 returns p.
CliffPoly ck_extension(const CliffPoly& p, int degree_cap = kDefaultDegreeCap);

// Monogenic product: extend the product of the restrictions.  Both factors
// must be monogenic within tol.
CliffPoly ck_product(const CliffPoly& f, const CliffPoly& g,
                     double tol = 1e-10, int degree_cap = kDefaultDegreeCap);

// Monogenic extension of x^k / sqrt(k!), the orthonormal monomial basis of
// the model space.  k indexes x1..xn (size n).
CliffPoly monogenic_monomial(int n, const std::vector<int>& k,
                             int degree_cap = kDefaultDegreeCap);

// Monogenic extension of exp(u.x), evaluated at a point (x0, x1..xn):
// exp(u.x) (cos(|u| x0) - (u/|u|) sin(|u| x0)).
Multivector monogenic_exponential(std::span<const double> u,
                                  std::span<const double> point);

// Substitute x_j -> x_j + c_j for the spatial variables (x0 untouched).
CliffPoly shift_spatial(const CliffPoly& p, std::span<const double> c);

}  // namespace cliffwave
