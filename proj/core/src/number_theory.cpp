#include "cy5/number_theory.hpp"

#include <algorithm>
#include <string>

#include "cy5/errors.hpp"

namespace cy5 {

namespace {

void require_positive(std::int64_t d, const char* what) {
  if (d <= 0) throw DomainError(std::string(what) + " requires d >= 1, got " + std::to_string(d));
}

}  // namespace

std::vector<std::int64_t> divisors(std::int64_t d) {
  require_positive(d, "divisors");
  std::vector<std::int64_t> small;
  std::vector<std::int64_t> large;
  for (std::int64_t i = 1; i * i <= d; ++i) {
    if (d % i != 0) continue;
    small.push_back(i);
    if (i != d / i) large.push_back(d / i);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t sigma(std::int64_t d) {
  require_positive(d, "sigma");
  std::int64_t total = 0;
  for (std::int64_t e : divisors(d)) total += e;
  return total;
}

int moebius(std::int64_t d) {
  require_positive(d, "moebius");
  int sign = 1;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    sign = -sign;
  }
  if (d > 1) sign = -sign;
  return sign;
}

}  // namespace cy5
