#include "cy5/series.hpp"

#include <string>

#include "cy5/errors.hpp"
#include "cy5/number_theory.hpp"

namespace cy5 {

DegreeSeries::DegreeSeries(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("DegreeSeries needs max_degree >= 1");
}

DegreeSeries DegreeSeries::zeros(int max_degree) {
  if (max_degree < 1) throw DomainError("DegreeSeries needs max_degree >= 1");
  return DegreeSeries(std::vector<Rational>(static_cast<std::size_t>(max_degree)));
}

DegreeSeries DegreeSeries::from_map(const std::map<int, Rational>& values, int max_degree) {
  if (max_degree < 1) throw DomainError("DegreeSeries needs max_degree >= 1");
  std::vector<Rational> dense;
  dense.reserve(static_cast<std::size_t>(max_degree));
  for (int d = 1; d <= max_degree; ++d) {
    auto it = values.find(d);
    if (it == values.end()) throw MissingDegreeError(d, max_degree);
    dense.push_back(it->second);
  }
  if (values.size() != dense.size()) {
    throw DomainError("series map has degrees outside 1.." + std::to_string(max_degree));
  }
  return DegreeSeries(std::move(dense));
}

const Rational& DegreeSeries::at(int degree) const {
  if (degree < 1 || degree > max_degree()) throw MissingDegreeError(degree, max_degree());
  return values_[static_cast<std::size_t>(degree - 1)];
}

DegreeSeries DegreeSeries::truncated(int max_degree) const {
  if (max_degree < 1 || max_degree > this->max_degree()) {
    throw MissingDegreeError(max_degree, this->max_degree());
  }
  return DegreeSeries(std::vector<Rational>(values_.begin(), values_.begin() + max_degree));
}

DegreeSeries invert_multi_cover(const DegreeSeries& gw, int insertions) {
  if (insertions != 1 && insertions != 2) {
    throw DomainError("multiple-cover inversion takes 1 or 2 insertions, got " + std::to_string(insertions));
  }
  const unsigned power = static_cast<unsigned>(3 - insertions);
  const int max_degree = gw.max_degree();
  std::vector<Rational> n(static_cast<std::size_t>(max_degree));
  // N_D = n_D + sum_{e|D, e>1} n_{D/e}/e^power; the n_D coefficient is 1.
  for (int D = 1; D <= max_degree; ++D) {
    Rational value = gw.at(D);
    for (std::int64_t e : divisors(D)) {
      if (e == 1) continue;
      value -= n[static_cast<std::size_t>(D / e - 1)] / pow(Rational(e), power);
    }
    n[static_cast<std::size_t>(D - 1)] = std::move(value);
  }
  return DegreeSeries(std::move(n));
}

namespace {

void require_cover(const DegreeSeries& genus1_gw, const DegreeSeries& chern) {
  if (chern.max_degree() < genus1_gw.max_degree()) {
    throw MissingDegreeError(chern.max_degree() + 1, chern.max_degree());
  }
}

// (1/24) sum_{e|D} C_{D/e}/e
Rational elliptic_cover_term(const DegreeSeries& chern, int D) {
  Rational total;
  for (std::int64_t e : divisors(D)) total += chern.at(static_cast<int>(D / e)) / Rational(e);
  return total / Rational(24);
}

}  // namespace

DegreeSeries extract_genus1_bps(const DegreeSeries& genus1_gw, const DegreeSeries& chern) {
  require_cover(genus1_gw, chern);
  const int max_degree = genus1_gw.max_degree();
  std::vector<Rational> n(static_cast<std::size_t>(max_degree));
  for (int D = 1; D <= max_degree; ++D) {
    Rational value = genus1_gw.at(D) - elliptic_cover_term(chern, D);
    for (std::int64_t e : divisors(D)) {
      if (e == 1) continue;
      value -= Rational(sigma(e), e) * n[static_cast<std::size_t>(D / e - 1)];
    }
    n[static_cast<std::size_t>(D - 1)] = std::move(value);
  }
  return DegreeSeries(std::move(n));
}

DegreeSeries extract_genus1_bps_tilde(const DegreeSeries& genus1_gw, const DegreeSeries& chern) {
  require_cover(genus1_gw, chern);
  const int max_degree = genus1_gw.max_degree();
  std::vector<Rational> n(static_cast<std::size_t>(max_degree));
  for (int D = 1; D <= max_degree; ++D) {
    Rational value = genus1_gw.at(D) - elliptic_cover_term(chern, D);
    for (std::int64_t e : divisors(D)) {
      if (e == 1) continue;
      value -= n[static_cast<std::size_t>(D / e - 1)] / Rational(e);
    }
    n[static_cast<std::size_t>(D - 1)] = std::move(value);
  }
  return DegreeSeries(std::move(n));
}

}  // namespace cy5
