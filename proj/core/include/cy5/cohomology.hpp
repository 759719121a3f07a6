#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <vector>

#include "cy5/rational.hpp"

namespace cy5 {

/// Q[H]/(H^{top_power+1}): the even cohomology of a space whose second
/// cohomology is generated by one divisor class H.
class Ring {
 public:
  /// top_power >= 1. top_integral is the value of the integral of H^top_power
  /// over X when X is compact; leave it empty for local models.
  Ring(int top_power, std::optional<Rational> top_integral);

  int top_power() const { return top_power_; }
  const std::optional<Rational>& top_integral() const { return top_integral_; }

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  int top_power_;
  std::optional<Rational> top_integral_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(int top_power, std::optional<Rational> top_integral = std::nullopt);

/// Element of a Ring, stored as coefficients of H^0..H^top_power.
class CohClass {
 public:
  static CohClass zero(RingPtr ring);
  /// coefficient * H^power; the zero class when power exceeds the truncation.
  static CohClass monomial(RingPtr ring, int power, Rational coefficient = 1);

  const RingPtr& ring() const { return ring_; }
  /// Coefficient of H^power (zero beyond the truncation).
  Rational coefficient(int power) const;

  bool is_zero() const;
  /// The H-power of a class with exactly one nonzero coefficient.
  std::optional<int> homogeneous_power() const;

  CohClass& operator+=(const CohClass& rhs);
  CohClass& operator-=(const CohClass& rhs);
  CohClass& operator*=(const Rational& scalar);
  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator*(CohClass a, const Rational& s) { return a *= s; }
  friend CohClass operator*(const Rational& s, CohClass a) { return a *= s; }

  friend bool operator==(const CohClass& a, const CohClass& b);

 private:
  CohClass(RingPtr ring, std::vector<Rational> coefficients);
  friend CohClass ring_mul(const CohClass&, const CohClass&);

  RingPtr ring_;
  std::vector<Rational> coefficients_;
};

/// Graded product with truncation. Throws DegreeError for different rings.
CohClass ring_mul(const CohClass& a, const CohClass& b);
inline CohClass operator*(const CohClass& a, const CohClass& b) { return ring_mul(a, b); }

/// Integral over X of a class; only the top coefficient survives.
/// Throws DomainError when the ring has no top integral.
Rational integrate(const CohClass& c);

/// Effective curve class in a rank-1 cone, identified with its degree H.beta.
class CurveClass {
 public:
  explicit CurveClass(int degree);
  int degree() const { return degree_; }

  friend CurveClass operator+(CurveClass a, CurveClass b) { return CurveClass(a.degree_ + b.degree_); }
  /// Throws DomainError unless a > b.
  friend CurveClass operator-(CurveClass a, CurveClass b);
  friend auto operator<=>(const CurveClass&, const CurveClass&) = default;

 private:
  int degree_;
};

/// (mu, beta) for a divisor class mu = x H: returns x * deg(beta).
/// The zero class pairs to 0; any other non-divisor class throws DegreeError.
Rational curve_pairing(const CohClass& mu, CurveClass beta);

}  // namespace cy5
