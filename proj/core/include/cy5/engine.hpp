#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>

#include "cy5/geometry.hpp"

namespace cy5 {

/// The counts computed by the engine. Insertion slots are fixed per kind:
///
///   N1B  n_b(mu1, mu2)            mu1, mu2 in H^4
///   N1C  n_b(psi~ mu)             mu in H^4
///   N1D  n_b(psi~ mu1, mu2)       mu1 in H^2, mu2 in H^4
///   N1E  n_b(psi~^2 mu)           mu in H^2
///   N1F  n_b(psi~^2, mu)          mu in H^4
///   N1G  n_b(psi~^3)
///   N2A  n_b1b2(|;mu)             mu in H^4
///   N2B  n_b1b2(mu|;)             mu in H^2
///   N2C  n_b1b2(psi~_2|;)
///   N2D  n_b1b2(|;psi~ mu)        mu in H^2
///   N2E  n_b1b2(|;psi~^2)
///   M3   m_b1b2b3
///
/// plus the Chern numbers GAMMA1, GAMMA2, CHERN and the divisor correction
/// CORR_MU. Memo entries hold the value at the unit insertion (H, H^2).
enum class CountKind : std::uint8_t {
  N1B,
  N1C,
  N1D,
  N1E,
  N1F,
  N1G,
  Gamma1,
  N2A,
  N2B,
  N2C,
  N2D,
  N2E,
  Gamma2,
  CorrMu,
  M3,
  Chern,
};

const char* to_string(CountKind kind);

struct CountKey {
  CountKind kind;
  std::array<std::uint16_t, 3> degrees{};  // unused trailing slots are 0

  std::uint64_t packed() const {
    return static_cast<std::uint64_t>(kind) << 48 | std::uint64_t{degrees[0]} << 32 |
           std::uint64_t{degrees[1]} << 16 | degrees[2];
  }
  friend bool operator==(const CountKey& a, const CountKey& b) { return a.packed() == b.packed(); }
};

/// Write-once cache of exact counts. Safe to share between engines running on
/// different threads: writes are serialized, and a second write of the same
/// key must carry the same value (DeterminismError otherwise).
class MemoStore {
 public:
  std::optional<Rational> find(const CountKey& key) const;
  void insert(const CountKey& key, const Rational& value);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, Rational> values_;
};

/// (C^(1), C^(2), C^(12)) correction terms of the three-component recursion.
struct CorrectionTriple {
  Rational c1;
  Rational c2;
  Rational c12;
};

/// Memoized evaluation of the genus-0 counts and Chern numbers of a Geometry.
///
/// Public methods take homogeneous insertions (or the zero class) of the
/// H-power listed for their kind and extend by linearity; anything else throws
/// DegreeError. The total curve degree of a request may not exceed
/// geometry.max_degree().
///
/// One Engine must only be used from one thread; several engines may share a
/// MemoStore.
class Engine {
 public:
  explicit Engine(const Geometry& geometry, std::shared_ptr<MemoStore> memo = nullptr);

  const Geometry& geometry() const { return geometry_; }
  const std::shared_ptr<MemoStore>& memo() const { return memo_; }

  Rational n1A(CurveClass beta, const CohClass& mu);
  Rational n1B(CurveClass beta, const CohClass& mu1, const CohClass& mu2);
  Rational n1C(CurveClass beta, const CohClass& mu);
  Rational n1D(CurveClass beta, const CohClass& mu1, const CohClass& mu2);
  Rational n1E(CurveClass beta, const CohClass& mu);
  Rational n1F(CurveClass beta, const CohClass& mu);
  Rational n1G(CurveClass beta);
  Rational gamma1(CurveClass beta);

  Rational n2A(CurveClass beta1, CurveClass beta2, const CohClass& mu);
  Rational n2B(CurveClass beta1, CurveClass beta2, const CohClass& mu);
  Rational n2C(CurveClass beta1, CurveClass beta2);
  Rational n2D(CurveClass beta1, CurveClass beta2, const CohClass& mu);
  Rational n2E(CurveClass beta1, CurveClass beta2);
  Rational gamma2(CurveClass beta1, CurveClass beta2);
  Rational correction_C2(CurveClass beta1, CurveClass beta2, const CohClass& mu);

  CorrectionTriple correction_C3(CurveClass beta1, CurveClass beta2, CurveClass beta3);
  Rational m3(CurveClass beta1, CurveClass beta2, CurveClass beta3);

  /// Integral of 2c2 - c1^2 over the family of degree-beta rational curves.
  Rational chern_integral(CurveClass beta);

 private:
  // Unit-insertion evaluators; degrees are plain ints.
  Rational base1(int d) const;
  Rational base2(int d) const;
  Rational u_n1c(int d);
  Rational u_n1d(int d);
  Rational u_n1e(int d);
  Rational u_n1f(int d);
  Rational u_n1g(int d);
  Rational u_gamma1(int d);
  Rational u_n2a(int d1, int d2);
  Rational u_n2b(int d1, int d2);
  Rational u_n2c(int d1, int d2);
  Rational u_n2d(int d1, int d2);
  Rational u_n2e(int d1, int d2);
  Rational u_gamma2(int d1, int d2);
  Rational u_corr_mu(int d1, int d2);
  CorrectionTriple u_corr3(int d1, int d2, int d3);
  Rational u_m3(int d1, int d2, int d3);
  Rational u_chern(int d);

  template <class Compute>
  Rational memoized(CountKey key, Compute&& compute);

  void check_total(int total) const;
  Rational slot(const CohClass& mu, int power) const;

  const Geometry& geometry_;
  std::shared_ptr<MemoStore> memo_;
  std::unordered_set<std::uint64_t> in_progress_;

  // Coefficient of c2 against H^2.
  Rational c2_;
  // sum_l of the pair coefficients that survive dimension vanishing in the
  // diagonal terms of n2A, n2B and m3 respectively.
  Rational diag_n2a_;
  Rational diag_n2b_;
  Rational diag_m3_;
};

}  // namespace cy5
