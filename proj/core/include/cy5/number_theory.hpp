#pragma once

#include <cstdint>
#include <vector>

namespace cy5 {

/// Sum of the positive divisors of d. Throws DomainError for d <= 0.
std::int64_t sigma(std::int64_t d);

/// Moebius function: (-1)^r for a product of r distinct primes, 0 otherwise.
int moebius(std::int64_t d);

/// Positive divisors of d in increasing order.
std::vector<std::int64_t> divisors(std::int64_t d);

}  // namespace cy5
