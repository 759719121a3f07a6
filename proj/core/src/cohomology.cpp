#include "cy5/cohomology.hpp"

#include <string>

#include "cy5/errors.hpp"

namespace cy5 {

Ring::Ring(int top_power, std::optional<Rational> top_integral)
    : top_power_(top_power), top_integral_(std::move(top_integral)) {
  if (top_power_ < 1) throw DomainError("ring truncation must be at least H^1");
  if (top_integral_ && top_integral_->is_zero()) throw DomainError("top integral must be nonzero");
}

RingPtr make_ring(int top_power, std::optional<Rational> top_integral) {
  return std::make_shared<const Ring>(top_power, std::move(top_integral));
}

namespace {

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a != b && !(*a == *b)) throw DegreeError("cohomology classes belong to different rings");
}

}  // namespace

CohClass::CohClass(RingPtr ring, std::vector<Rational> coefficients)
    : ring_(std::move(ring)), coefficients_(std::move(coefficients)) {}

CohClass CohClass::zero(RingPtr ring) {
  if (!ring) throw DomainError("null ring");
  const auto size = static_cast<std::size_t>(ring->top_power() + 1);
  return CohClass(std::move(ring), std::vector<Rational>(size));
}

CohClass CohClass::monomial(RingPtr ring, int power, Rational coefficient) {
  if (power < 0) throw DegreeError("negative H-power");
  CohClass c = zero(std::move(ring));
  if (power <= c.ring_->top_power()) c.coefficients_[static_cast<std::size_t>(power)] = std::move(coefficient);
  return c;
}

Rational CohClass::coefficient(int power) const {
  if (power < 0 || power > ring_->top_power()) return {};
  return coefficients_[static_cast<std::size_t>(power)];
}

bool CohClass::is_zero() const {
  for (const auto& c : coefficients_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::optional<int> CohClass::homogeneous_power() const {
  std::optional<int> found;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (coefficients_[k].is_zero()) continue;
    if (found) return std::nullopt;
    found = static_cast<int>(k);
  }
  return found;
}

CohClass& CohClass::operator+=(const CohClass& rhs) {
  require_same_ring(ring_, rhs.ring_);
  for (std::size_t k = 0; k < coefficients_.size(); ++k) coefficients_[k] += rhs.coefficients_[k];
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& rhs) {
  require_same_ring(ring_, rhs.ring_);
  for (std::size_t k = 0; k < coefficients_.size(); ++k) coefficients_[k] -= rhs.coefficients_[k];
  return *this;
}

CohClass& CohClass::operator*=(const Rational& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

bool operator==(const CohClass& a, const CohClass& b) {
  return (a.ring_ == b.ring_ || *a.ring_ == *b.ring_) && a.coefficients_ == b.coefficients_;
}

CohClass ring_mul(const CohClass& a, const CohClass& b) {
  require_same_ring(a.ring_, b.ring_);
  const std::size_t size = a.coefficients_.size();
  std::vector<Rational> out(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (a.coefficients_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < size; ++j) {
      if (b.coefficients_[j].is_zero()) continue;
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return CohClass(a.ring_, std::move(out));
}

Rational integrate(const CohClass& c) {
  const auto& top = c.ring()->top_integral();
  if (!top) throw DomainError("ring has no top integral (non-compact model)");
  return c.coefficient(c.ring()->top_power()) * *top;
}

CurveClass::CurveClass(int degree) : degree_(degree) {
  if (degree_ < 1) throw DomainError("curve class degree must be >= 1, got " + std::to_string(degree_));
}

CurveClass operator-(CurveClass a, CurveClass b) {
  if (a.degree_ <= b.degree_) {
    throw DomainError("curve class difference " + std::to_string(a.degree_) + " - " +
                      std::to_string(b.degree_) + " is not effective");
  }
  return CurveClass(a.degree_ - b.degree_);
}

Rational curve_pairing(const CohClass& mu, CurveClass beta) {
  if (mu.is_zero()) return {};
  if (mu.homogeneous_power() != 1) throw DegreeError("curve pairing needs a divisor class (H-power 1)");
  return mu.coefficient(1) * Rational(beta.degree());
}

}  // namespace cy5
