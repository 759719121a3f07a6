#include "cy5/engine.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "cy5/errors.hpp"

namespace cy5 {

const char* to_string(CountKind kind) {
  switch (kind) {
    case CountKind::N1B: return "N1B";
    case CountKind::N1C: return "N1C";
    case CountKind::N1D: return "N1D";
    case CountKind::N1E: return "N1E";
    case CountKind::N1F: return "N1F";
    case CountKind::N1G: return "N1G";
    case CountKind::Gamma1: return "GAMMA1";
    case CountKind::N2A: return "N2A";
    case CountKind::N2B: return "N2B";
    case CountKind::N2C: return "N2C";
    case CountKind::N2D: return "N2D";
    case CountKind::N2E: return "N2E";
    case CountKind::Gamma2: return "GAMMA2";
    case CountKind::CorrMu: return "CORR_MU";
    case CountKind::M3: return "M3";
    case CountKind::Chern: return "CHERN";
  }
  return "?";
}

std::optional<Rational> MemoStore::find(const CountKey& key) const {
  std::shared_lock lock(mutex_);
  auto it = values_.find(key.packed());
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void MemoStore::insert(const CountKey& key, const Rational& value) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = values_.try_emplace(key.packed(), value);
  if (!inserted && it->second != value) {
    throw DeterminismError(std::string("conflicting values for ") + to_string(key.kind) + ": " +
                           it->second.to_string() + " vs " + value.to_string());
  }
}

std::size_t MemoStore::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

namespace {

constexpr int kMaxKeyDegree = 0xFFFF;

CountKey key_of(CountKind kind, int d1, int d2 = 0, int d3 = 0) {
  return {kind, {static_cast<std::uint16_t>(d1), static_cast<std::uint16_t>(d2), static_cast<std::uint16_t>(d3)}};
}

Rational sq(int x) { return Rational(static_cast<long>(x) * x); }

const Rational kHalf(1, 2);
const Rational kFiveHalves(5, 2);

}  // namespace

Engine::Engine(const Geometry& geometry, std::shared_ptr<MemoStore> memo)
    : geometry_(geometry), memo_(memo ? std::move(memo) : std::make_shared<MemoStore>()) {
  const auto& ring = geometry_.ring();
  const CohClass h = CohClass::monomial(ring, 1);
  c2_ = geometry_.c2().coefficient(2);

  for (const auto& [omega, sharp] : geometry_.diagonal_pairs()) {
    // n_{b1}(omega) n_{b2}(omega#, mu): omega in H^6, omega# in H^4
    diag_n2a_ += omega.coefficient(3) * sharp.coefficient(2);
    // n_{b1}(omega mu) n_{b2}(omega#) with mu = H
    diag_n2b_ += ring_mul(omega, h).coefficient(3) * sharp.coefficient(3);
    // n_{b1b2}(|;omega) n_{b3}(omega#)
    diag_m3_ += omega.coefficient(2) * sharp.coefficient(3);
  }
}

template <class Compute>
Rational Engine::memoized(CountKey key, Compute&& compute) {
  if (auto hit = memo_->find(key)) return *std::move(hit);
  const std::uint64_t id = key.packed();
  if (!in_progress_.insert(id).second) {
    throw RecursionCycleError(std::string("recursion re-entered ") + to_string(key.kind) + "(" +
                              std::to_string(key.degrees[0]) + "," + std::to_string(key.degrees[1]) + "," +
                              std::to_string(key.degrees[2]) + ")");
  }
  struct Release {
    std::unordered_set<std::uint64_t>& set;
    std::uint64_t id;
    ~Release() { set.erase(id); }
  } release{in_progress_, id};
  Rational value = compute();
  memo_->insert(key, value);
  return value;
}

void Engine::check_total(int total) const {
  if (total > geometry_.max_degree() || total > kMaxKeyDegree) {
    throw DomainError("total curve degree " + std::to_string(total) + " exceeds the geometry's max degree " +
                      std::to_string(geometry_.max_degree()));
  }
}

Rational Engine::slot(const CohClass& mu, int power) const {
  if (!(*mu.ring() == *geometry_.ring())) throw DegreeError("insertion belongs to another ring");
  if (mu.is_zero()) return {};
  if (mu.homogeneous_power() != power) {
    throw DegreeError("insertion must be a multiple of H^" + std::to_string(power));
  }
  return mu.coefficient(power);
}

// ---------------------------------------------------------------------------
// Unit-insertion recursions. Divisor slots carry H, codimension-2 slots H^2.

Rational Engine::base1(int d) const { return geometry_.unit_n1pt().at(d); }

Rational Engine::base2(int d) const { return geometry_.unit_n2pt().at(d); }

Rational Engine::u_n1c(int d) {
  return memoized(key_of(CountKind::N1C, d), [&] {
    const CohClass h_cube = ring_mul(geometry_.hyperplane_power(1), geometry_.hyperplane_power(2));
    Rational value = base2(d) - Rational(2L * d) * geometry_.base_n1pt(CurveClass(d), h_cube);
    for (int d1 = 1; d1 < d; ++d1) value += sq(d1) * u_n2a(d1, d - d1);
    return value / sq(d);
  });
}

Rational Engine::u_n1d(int d) {
  return memoized(key_of(CountKind::N1D, d), [&] {
    // (H, beta) n(H^2, H^2) - 2 H_beta n(H*H, H^2)
    Rational value = Rational(d) * base2(d) - Rational(2L * d) * base2(d);
    for (int d1 = 1; d1 < d; ++d1) {
      const int d2 = d - d1;
      value += Rational(static_cast<long>(d1) * d2 * d2 + static_cast<long>(d2) * d1 * d1) * u_n2a(d1, d2);
    }
    return value / sq(d);
  });
}

Rational Engine::u_n1e(int d) {
  return memoized(key_of(CountKind::N1E, d), [&] {
    Rational value = u_n1d(d) - Rational(2L * d) * u_n1c(d);
    for (int d1 = 1; d1 < d; ++d1) value += sq(d1) * (u_n2d(d1, d - d1) + u_n2b(d1, d - d1));
    return value / sq(d);
  });
}

Rational Engine::u_n1f(int d) {
  return memoized(key_of(CountKind::N1F, d), [&] {
    Rational value;
    for (int d1 = 1; d1 < d; ++d1) value -= u_n2a(d1, d - d1);
    return value;
  });
}

Rational Engine::u_n1g(int d) {
  return memoized(key_of(CountKind::N1G, d), [&] {
    Rational value = u_n1f(d) - Rational(2L * d) * u_n1e(d);
    for (int d1 = 1; d1 < d; ++d1) value += sq(d1) * (u_n2e(d1, d - d1) + u_n2c(d1, d - d1));
    return value / sq(d);
  });
}

Rational Engine::u_gamma1(int d) {
  return memoized(key_of(CountKind::Gamma1, d), [&] {
    Rational head = geometry_.base_n1pt(CurveClass(d), geometry_.c3()) + c2_ * u_n1c(d) + u_n1g(d) +
                    c2_ * c2_ * base2(d) + Rational(4) * c2_ * u_n1f(d);
    Rational value = kHalf * head;
    for (int d1 = 1; d1 < d; ++d1) {
      value -= Rational(2) * u_n2e(d1, d - d1) + kFiveHalves * u_n2c(d1, d - d1);
    }
    return value;
  });
}

Rational Engine::u_n2a(int d1, int d2) {
  return memoized(key_of(CountKind::N2A, d1, d2), [&] {
    Rational value;
    if (!diag_n2a_.is_zero()) value = diag_n2a_ * base1(d1) * base2(d2);
    if (d2 > d1) {
      value += u_n2a(d1, d2 - d1) + u_n2a(d2 - d1, d1);
    } else if (d2 < d1) {
      value += u_n2a(d1 - d2, d2);
    } else {
      value += c2_ * base2(d1) + Rational(2) * u_n1f(d1);
    }
    return value;
  });
}

Rational Engine::u_n2b(int d1, int d2) {
  return memoized(key_of(CountKind::N2B, d1, d2), [&] {
    Rational value;
    if (!diag_n2b_.is_zero()) value = diag_n2b_ * base1(d1) * base1(d2);
    const int smaller = std::min(d1, d2);
    for (int b = 1; b < smaller; ++b) value -= Rational(b) * u_m3(d1 - b, b, d2 - b);
    value -= u_corr_mu(d1, d2);
    return value;
  });
}

Rational Engine::u_n2c(int d1, int d2) {
  return memoized(key_of(CountKind::N2C, d1, d2), [&] {
    Rational value = u_n2a(d1, d2) - Rational(2L * d2) * u_n2b(d1, d2);
    for (int b = 1; b < d2; ++b) value += sq(b) * u_m3(d1, d2 - b, b);
    return value / sq(d2);
  });
}

Rational Engine::u_n2d(int d1, int d2) {
  return memoized(key_of(CountKind::N2D, d1, d2), [&] {
    // The psi~ sits on the beta2 component, so the divisor pairs with beta2.
    Rational value = Rational(d2) * u_n2a(d1, d2) - Rational(2L * d2) * u_n2a(d1, d2);
    for (int b = 1; b < d2; ++b) {
      const int bp = d2 - b;
      value += Rational(static_cast<long>(b) * bp * bp + static_cast<long>(bp) * b * b) * u_m3(d1, bp, b);
    }
    return value / sq(d2);
  });
}

Rational Engine::u_n2e(int d1, int d2) {
  return memoized(key_of(CountKind::N2E, d1, d2), [&] {
    Rational value;
    for (int b = 1; b < d2; ++b) value -= u_m3(d1, d2 - b, b);
    return value;
  });
}

Rational Engine::u_gamma2(int d1, int d2) {
  return memoized(key_of(CountKind::Gamma2, d1, d2), [&] {
    return c2_ * u_n2a(d1, d2) + Rational(2) * u_n2e(d1, d2) + u_n2c(d1, d2) + u_n2c(d2, d1);
  });
}

Rational Engine::u_corr_mu(int d1, int d2) {
  if (d2 < d1) return u_corr_mu(d2, d1);
  return memoized(key_of(CountKind::CorrMu, d1, d2), [&] {
    if (d2 > d1) {
      const int e = d2 - d1;
      Rational chains;
      for (int b = 1; b < e; ++b) chains += u_m3(b, d1, e - b);
      return u_n2d(e, d1) + u_n2b(e, d1) + Rational(d1) * (u_gamma2(e, d1) + kHalf * chains);
    }
    const CurveClass beta(d1);
    const CohClass c2h = ring_mul(geometry_.c2(), CohClass::monomial(geometry_.ring(), 1));
    Rational value = geometry_.base_n1pt(beta, c2h) + u_n1e(d1) + c2_ * u_n1d(d1) + Rational(d1) * u_gamma1(d1);
    for (int b = 1; b < d2; ++b) value -= Rational(2) * u_n2d(b, d2 - b) + kFiveHalves * u_n2b(b, d2 - b);
    return value;
  });
}

CorrectionTriple Engine::u_corr3(int d1, int d2, int d3) {
  CorrectionTriple c;
  if (d3 > d1) {
    c.c1 = u_m3(d3 - d1, d1, d2);
  } else if (d3 < d1) {
    c.c1 = u_m3(d1 - d3, d3, d2);
  } else {
    c.c1 = u_gamma2(d2, d1);
  }

  if (d3 > d2) {
    c.c2 = -u_m3(d1, d2, d3 - d2);
  } else if (d3 < d2) {
    c.c2 = -(u_m3(d1, d3, d2 - d3) + u_m3(d1, d2 - d3, d3));
  } else {
    c.c2 = -(c2_ * u_n2a(d1, d2) + Rational(2) * u_n2e(d1, d2));
  }

  if (d3 > d1 + d2) {
    c.c12 = -u_m3(d3 - d1 - d2, d1, d2);
  } else if (d2 < d3 && d3 < d1 + d2) {
    c.c12 = -u_m3(d1 + d2 - d3, d3 - d2, d2);
  } else if (d3 == d1 + d2) {
    c.c12 = -u_gamma2(d2, d1);
  }
  return c;
}

Rational Engine::u_m3(int d1, int d2, int d3) {
  return memoized(key_of(CountKind::M3, d1, d2, d3), [&] {
    Rational value;
    if (!diag_m3_.is_zero()) value = diag_m3_ * u_n2a(d1, d2) * base1(d3);
    const CorrectionTriple c = u_corr3(d1, d2, d3);
    value -= c.c1;
    value -= c.c2;
    value -= c.c12;
    return value;
  });
}

Rational Engine::u_chern(int d) {
  return memoized(key_of(CountKind::Chern, d), [&] {
    Rational value = -(u_n1g(d) + c2_ * u_n1c(d) + geometry_.base_n1pt(CurveClass(d), geometry_.c3()));
    Rational nodes;
    for (int d1 = 1; d1 < d; ++d1) nodes += u_n2c(d1, d - d1) + u_n2c(d - d1, d1);
    value += kHalf * nodes;
    return value;
  });
}

// ---------------------------------------------------------------------------
// Public surface: type-check insertions, scale the unit value.

Rational Engine::n1A(CurveClass beta, const CohClass& mu) {
  check_total(beta.degree());
  return geometry_.base_n1pt(beta, mu);
}

Rational Engine::n1B(CurveClass beta, const CohClass& mu1, const CohClass& mu2) {
  check_total(beta.degree());
  const Rational x = slot(mu1, 2) * slot(mu2, 2);
  return x.is_zero() ? Rational() : x * base2(beta.degree());
}

Rational Engine::n1C(CurveClass beta, const CohClass& mu) {
  check_total(beta.degree());
  const Rational x = slot(mu, 2);
  return x.is_zero() ? Rational() : x * u_n1c(beta.degree());
}

Rational Engine::n1D(CurveClass beta, const CohClass& mu1, const CohClass& mu2) {
  check_total(beta.degree());
  const Rational x = slot(mu1, 1) * slot(mu2, 2);
  return x.is_zero() ? Rational() : x * u_n1d(beta.degree());
}

Rational Engine::n1E(CurveClass beta, const CohClass& mu) {
  check_total(beta.degree());
  const Rational x = slot(mu, 1);
  return x.is_zero() ? Rational() : x * u_n1e(beta.degree());
}

Rational Engine::n1F(CurveClass beta, const CohClass& mu) {
  check_total(beta.degree());
  const Rational x = slot(mu, 2);
  return x.is_zero() ? Rational() : x * u_n1f(beta.degree());
}

Rational Engine::n1G(CurveClass beta) {
  check_total(beta.degree());
  return u_n1g(beta.degree());
}

Rational Engine::gamma1(CurveClass beta) {
  check_total(beta.degree());
  return u_gamma1(beta.degree());
}

Rational Engine::n2A(CurveClass beta1, CurveClass beta2, const CohClass& mu) {
  check_total((beta1 + beta2).degree());
  const Rational x = slot(mu, 2);
  return x.is_zero() ? Rational() : x * u_n2a(beta1.degree(), beta2.degree());
}

Rational Engine::n2B(CurveClass beta1, CurveClass beta2, const CohClass& mu) {
  check_total((beta1 + beta2).degree());
  const Rational x = slot(mu, 1);
  return x.is_zero() ? Rational() : x * u_n2b(beta1.degree(), beta2.degree());
}

Rational Engine::n2C(CurveClass beta1, CurveClass beta2) {
  check_total((beta1 + beta2).degree());
  return u_n2c(beta1.degree(), beta2.degree());
}

Rational Engine::n2D(CurveClass beta1, CurveClass beta2, const CohClass& mu) {
  check_total((beta1 + beta2).degree());
  const Rational x = slot(mu, 1);
  return x.is_zero() ? Rational() : x * u_n2d(beta1.degree(), beta2.degree());
}

Rational Engine::n2E(CurveClass beta1, CurveClass beta2) {
  check_total((beta1 + beta2).degree());
  return u_n2e(beta1.degree(), beta2.degree());
}

Rational Engine::gamma2(CurveClass beta1, CurveClass beta2) {
  check_total((beta1 + beta2).degree());
  return u_gamma2(beta1.degree(), beta2.degree());
}

Rational Engine::correction_C2(CurveClass beta1, CurveClass beta2, const CohClass& mu) {
  check_total((beta1 + beta2).degree());
  const Rational x = slot(mu, 1);
  return x.is_zero() ? Rational() : x * u_corr_mu(beta1.degree(), beta2.degree());
}

CorrectionTriple Engine::correction_C3(CurveClass beta1, CurveClass beta2, CurveClass beta3) {
  check_total((beta1 + beta2 + beta3).degree());
  return u_corr3(beta1.degree(), beta2.degree(), beta3.degree());
}

Rational Engine::m3(CurveClass beta1, CurveClass beta2, CurveClass beta3) {
  check_total((beta1 + beta2 + beta3).degree());
  return u_m3(beta1.degree(), beta2.degree(), beta3.degree());
}

Rational Engine::chern_integral(CurveClass beta) {
  check_total(beta.degree());
  return u_chern(beta.degree());
}

}  // namespace cy5
