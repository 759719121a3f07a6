#pragma once

#include <map>
#include <vector>

#include "cy5/rational.hpp"

namespace cy5 {

/// Coefficients of a formal series sum_{d>=1} c_d q^d, dense on 1..max_degree.
///
/// Reading a degree outside that range throws MissingDegreeError; there is no
/// implicit zero padding.
class DegreeSeries {
 public:
  /// values[0] is the degree-1 coefficient. Must be non-empty.
  explicit DegreeSeries(std::vector<Rational> values);

  /// All-zero series on 1..max_degree.
  static DegreeSeries zeros(int max_degree);

  /// Every degree in 1..max_degree must be present; extra keys are rejected.
  static DegreeSeries from_map(const std::map<int, Rational>& values, int max_degree);

  int max_degree() const { return static_cast<int>(values_.size()); }
  const Rational& at(int degree) const;
  const Rational& operator[](int degree) const { return at(degree); }

  /// Restriction to 1..max_degree (must not exceed the current range).
  DegreeSeries truncated(int max_degree) const;

  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const DegreeSeries&, const DegreeSeries&) = default;

 private:
  std::vector<Rational> values_;
};

/// Multiple-cover inversion for genus-0 invariants with k insertions (k = 1, 2):
/// returns n with N_D = sum_{e|D} n_{D/e} / e^{3-k}.
DegreeSeries invert_multi_cover(const DegreeSeries& gw, int insertions);

/// Genus-1 integer counts n with
///   N1_D = sum_{e|D} (sigma(e)/e) n_{D/e} + (1/24) sum_{e|D} C_{D/e} / e.
DegreeSeries extract_genus1_bps(const DegreeSeries& genus1_gw, const DegreeSeries& chern);

/// BPS-form counts n~ with N1_D = sum_{e|D} (n~_{D/e} + C_{D/e}/24) / e.
DegreeSeries extract_genus1_bps_tilde(const DegreeSeries& genus1_gw, const DegreeSeries& chern);

}  // namespace cy5
