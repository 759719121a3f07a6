#pragma once

#include <cstdint>
#include <random>

#include "cy5/geometry.hpp"

namespace cy5 {

/// Geometry of the total space of O(-1)+O(-1)+O(-1) over P^2.
///
/// Ring Q[H]/(H^3), c2 = -3H^2, c3 = 0, no diagonal pairs, no 1-pointed
/// counts. Genus-0 input N_{0,d}(H^2,H^2) = (-1)^{d-1}/d and genus-1 input
/// N_{1,d} = (-1)^d/(8d).
Geometry localp2_geometry(int max_degree);

/// Closed forms used by localp2_geometry.
Rational localp2_genus0_gw(int d);
Rational localp2_genus1_gw(int d);

/// Torus weights (a, b, c) on C^3; pairwise distinct.
struct WeightTriple {
  WeightTriple(Rational a, Rational b, Rational c);
  Rational a;
  Rational b;
  Rational c;
};

/// c0 + c1*lambda + c2*psi on M11bar, where every product of two degree-1
/// classes vanishes.
class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(Rational constant, Rational lambda = 0, Rational psi = 0)  // NOLINT
      : constant_(std::move(constant)), lambda_(std::move(lambda)), psi_(std::move(psi)) {}

  static LinearForm lambda_class() { return {0, 1, 0}; }
  static LinearForm psi_class() { return {0, 0, 1}; }

  const Rational& constant() const { return constant_; }
  const Rational& lambda_coeff() const { return lambda_; }
  const Rational& psi_coeff() const { return psi_; }

  LinearForm& operator+=(const LinearForm& rhs);
  LinearForm& operator-=(const LinearForm& rhs);
  LinearForm& operator*=(const LinearForm& rhs);
  /// Throws DomainError when the constant term of rhs is zero.
  LinearForm& operator/=(const LinearForm& rhs);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(LinearForm a, const LinearForm& b) { return a *= b; }
  friend LinearForm operator/(LinearForm a, const LinearForm& b) { return a /= b; }

  /// 1/(c0 + x) = 1/c0 - x/c0^2. Throws DomainError for c0 = 0.
  LinearForm inverse() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  Rational constant_;
  Rational lambda_;
  Rational psi_;
};

/// Integral over M11bar: (lambda + psi coefficients)/24.
Rational integrate_M11(const LinearForm& f);

/// True when no fixed-point factor c - ((d-r)a + rb)/d vanishes for any
/// ordering of the weights and 0 <= r <= d.
bool weights_admissible(int d, const WeightTriple& w);

/// Genus-0 degree-d two-point count from the single contributing fixed locus.
/// Throws WeightDegeneracyError on a vanishing denominator.
Rational localization_g0(int d, const WeightTriple& w);

/// Contribution of the d-fold cover of the line through the fixed points
/// with weights x, y, with the contracted elliptic component at the x point.
/// z is the remaining weight.
Rational localization_g1_locus(int d, const Rational& x, const Rational& y, const Rational& z);

/// Closed form ((-1)^d / 24d) (z - x)/(z - y) for the same locus.
Rational genus1_locus_closed_form(int d, const Rational& x, const Rational& y, const Rational& z);

/// Sum of the six locus contributions.
Rational localization_g1(int d, const WeightTriple& w);

/// Sum over ordered pairs (x, y) of (z - x)/(z - y).
Rational locus_factor_sum(const WeightTriple& w);

/// Draws rational weights p/q (|p| <= 1000, 1 <= q <= 97), re-drawing until
/// weights_admissible(d, .) holds.
WeightTriple random_weight_triple(std::mt19937_64& rng, int d);

}  // namespace cy5
