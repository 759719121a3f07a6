#pragma once

#include <cstdint>
#include <vector>

#include "cy5/geometry.hpp"

namespace cy5 {

struct BpsReport {
  int max_degree = 0;
  DegreeSeries n1;
  DegreeSeries n1_tilde;
  DegreeSeries chern;
  std::vector<int> integrality_failures;  // degrees where n1 is not an integer
};

/// Chern integrals for d = 1..max_degree, then the genus-1 extraction.
/// jobs > 1 evaluates degrees on several threads sharing one memo store; the
/// result is identical to jobs = 1.
BpsReport compute_bps_table(const Geometry& geometry, int max_degree, int jobs = 1);

/// Sign in the closed form for local P^2: moebius(d), or moebius(d/4) when
/// d = 4 mod 8.
int martin_S(std::int64_t d);

/// Magnitude in the same closed form. Returns 0 when 8 | d.
Rational martin_V(std::int64_t d);

struct MartinRow {
  int degree;
  Rational computed;
  Rational predicted;
  bool match;
};

/// Compares report.n1 against S(d) V(d) degree by degree. Degrees divisible
/// by 8 match only when the computed value is 0.
std::vector<MartinRow> martin_check(const BpsReport& report);

}  // namespace cy5
