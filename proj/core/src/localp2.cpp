#include "cy5/localp2.hpp"

#include <array>

#include "cy5/errors.hpp"

namespace cy5 {

Rational localp2_genus0_gw(int d) { return Rational(d % 2 == 1 ? 1 : -1, d); }

Rational localp2_genus1_gw(int d) { return Rational(d % 2 == 0 ? 1 : -1, 8L * d); }

Geometry localp2_geometry(int max_degree) {
  if (max_degree < 1) throw DomainError("max_degree must be >= 1");
  auto ring = make_ring(2);  // H^3 = 0
  std::vector<Rational> genus0, genus1;
  for (int d = 1; d <= max_degree; ++d) {
    genus0.push_back(localp2_genus0_gw(d));
    genus1.push_back(localp2_genus1_gw(d));
  }
  return Geometry(ring, CohClass::monomial(ring, 2, -3), CohClass::zero(ring), {},
                  DegreeSeries::zeros(max_degree), invert_multi_cover(DegreeSeries(std::move(genus0)), 2),
                  DegreeSeries(std::move(genus1)));
}

WeightTriple::WeightTriple(Rational a_, Rational b_, Rational c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (a == b || b == c || a == c) throw WeightDegeneracyError("torus weights must be pairwise distinct");
}

LinearForm& LinearForm::operator+=(const LinearForm& rhs) {
  constant_ += rhs.constant_;
  lambda_ += rhs.lambda_;
  psi_ += rhs.psi_;
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& rhs) {
  constant_ -= rhs.constant_;
  lambda_ -= rhs.lambda_;
  psi_ -= rhs.psi_;
  return *this;
}

LinearForm& LinearForm::operator*=(const LinearForm& rhs) {
  lambda_ = constant_ * rhs.lambda_ + lambda_ * rhs.constant_;
  psi_ = constant_ * rhs.psi_ + psi_ * rhs.constant_;
  constant_ *= rhs.constant_;
  return *this;
}

LinearForm LinearForm::inverse() const {
  if (constant_.is_zero()) throw DomainError("LinearForm with zero constant term is not invertible");
  const Rational inv = Rational(1) / constant_;
  const Rational inv2 = inv * inv;
  return {inv, -lambda_ * inv2, -psi_ * inv2};
}

LinearForm& LinearForm::operator/=(const LinearForm& rhs) { return *this *= rhs.inverse(); }

Rational integrate_M11(const LinearForm& f) { return (f.lambda_coeff() + f.psi_coeff()) / Rational(24); }

namespace {

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= Rational(i);
  return f;
}

Rational sign_power(int exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

// z - ((d-r)x + ry)/d
Rational edge_factor(int d, int r, const Rational& x, const Rational& y, const Rational& z) {
  return z - (Rational(d - r) * x + Rational(r) * y) / Rational(d);
}

// prod_{r=first}^{last} of edge_factor; throws on a vanishing factor.
Rational edge_product(int d, int first, int last, const Rational& x, const Rational& y, const Rational& z) {
  Rational p = 1;
  for (int r = first; r <= last; ++r) {
    Rational f = edge_factor(d, r, x, y, z);
    if (f.is_zero()) {
      throw WeightDegeneracyError("fixed-point weight vanishes at r=" + std::to_string(r) + ", d=" + std::to_string(d));
    }
    p *= f;
  }
  return p;
}

std::array<std::array<const Rational*, 3>, 6> orderings(const WeightTriple& w) {
  return {{{&w.a, &w.b, &w.c},
           {&w.b, &w.a, &w.c},
           {&w.a, &w.c, &w.b},
           {&w.c, &w.a, &w.b},
           {&w.b, &w.c, &w.a},
           {&w.c, &w.b, &w.a}}};
}

void require_degree(int d) {
  if (d < 1) throw DomainError("degree must be >= 1");
}

}  // namespace

bool weights_admissible(int d, const WeightTriple& w) {
  for (const auto& o : orderings(w)) {
    for (int r = 0; r <= d; ++r) {
      if (edge_factor(d, r, *o[0], *o[1], *o[2]).is_zero()) return false;
    }
  }
  return true;
}

Rational localization_g0(int d, const WeightTriple& w) {
  require_degree(d);
  const Rational& a = w.a;
  const Rational& b = w.b;
  const Rational& c = w.c;
  const unsigned e = static_cast<unsigned>(d - 1);
  const Rational fact = factorial(d - 1);
  const Rational k = sign_power(d - 1) * fact / pow(Rational(d), e);
  const Rational p = edge_product(d, 1, d - 1, a, b, c);

  const Rational h1_first = k * pow(a - b, e);
  const Rational h1_second = k * pow(b - a, e);
  const Rational h1_third = sign_power(d - 1) * p;
  const Rational tangent = sign_power(d - 1) * fact * fact / pow(Rational(d), 2 * e) * pow(a - b, 2 * e) * p;
  return h1_first * h1_second * h1_third / tangent / Rational(d);
}

Rational localization_g1_locus(int d, const Rational& x, const Rational& y, const Rational& z) {
  require_degree(d);
  if (x == y || y == z || x == z) throw WeightDegeneracyError("torus weights must be pairwise distinct");
  const unsigned e = static_cast<unsigned>(d - 1);
  const Rational k = sign_power(d - 1) * factorial(d - 1) / pow(Rational(d), e);
  const LinearForm lambda = LinearForm::lambda_class();
  const LinearForm psi = LinearForm::psi_class();

  const LinearForm first = LinearForm(k * pow(x - y, e)) * (LinearForm(0) - lambda);
  const LinearForm second = LinearForm(k * pow(y - x, e)) * (LinearForm(x - y) - lambda);
  const LinearForm third = LinearForm(sign_power(d - 1) * edge_product(d, 1, d - 1, x, y, z)) * (LinearForm(x - z) - lambda);
  const LinearForm obstruction = (LinearForm(y - x) - lambda) * (LinearForm(z - x) - lambda);

  const Rational fact = factorial(d);
  const Rational tangent_const = sign_power(d) * fact * fact / pow(Rational(d), static_cast<unsigned>(2 * d - 1)) *
                                 pow(x - y, static_cast<unsigned>(2 * d - 1)) * edge_product(d, 0, d, x, y, z);
  const LinearForm tangent = LinearForm(tangent_const) * (LinearForm((y - x) / Rational(d)) - psi);

  const LinearForm integrand = first * second * third * obstruction / tangent;
  return integrate_M11(integrand) / Rational(d);
}

Rational genus1_locus_closed_form(int d, const Rational& x, const Rational& y, const Rational& z) {
  require_degree(d);
  return sign_power(d) / Rational(24L * d) * (z - x) / (z - y);
}

Rational localization_g1(int d, const WeightTriple& w) {
  Rational total;
  for (const auto& o : orderings(w)) total += localization_g1_locus(d, *o[0], *o[1], *o[2]);
  return total;
}

Rational locus_factor_sum(const WeightTriple& w) {
  Rational total;
  for (const auto& o : orderings(w)) total += (*o[2] - *o[0]) / (*o[2] - *o[1]);
  return total;
}

WeightTriple random_weight_triple(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 97);
  for (;;) {
    Rational a(num(rng), den(rng));
    Rational b(num(rng), den(rng));
    Rational c(num(rng), den(rng));
    if (a == b || b == c || a == c) continue;
    WeightTriple w(std::move(a), std::move(b), std::move(c));
    if (weights_admissible(d, w)) return w;
  }
}

}  // namespace cy5
