#include "cy5/genus1.hpp"

#include <algorithm>
#include <exception>
#include <memory>
#include <string>
#include <thread>

#include "cy5/engine.hpp"
#include "cy5/errors.hpp"
#include "cy5/number_theory.hpp"

namespace cy5 {

BpsReport compute_bps_table(const Geometry& geometry, int max_degree, int jobs) {
  if (max_degree < 1) throw DomainError("max degree must be positive");
  if (max_degree > geometry.max_degree()) throw MissingDegreeError(max_degree, geometry.max_degree());
  if (jobs < 1) throw DomainError("jobs must be positive");
  jobs = std::min(jobs, max_degree);

  auto memo = std::make_shared<MemoStore>();
  std::vector<Rational> chern(max_degree);

  // Striped so that each worker climbs through increasing degrees and mostly
  // finds its lower-degree dependencies already in the shared memo.
  auto work = [&](int first) {
    Engine engine(geometry, memo);
    for (int d = first; d <= max_degree; d += jobs) chern[d - 1] = engine.chern_integral(CurveClass(d));
  };

  if (jobs == 1) {
    work(1);
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int t = 0; t < jobs; ++t) {
      threads.emplace_back([&, t] {
        try {
          work(t + 1);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& thread : threads) thread.join();
    for (const auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }
  }

  BpsReport report{max_degree, DegreeSeries::zeros(1), DegreeSeries::zeros(1), DegreeSeries(std::move(chern)), {}};
  const DegreeSeries gw = geometry.gw_genus1().truncated(max_degree);
  report.n1 = extract_genus1_bps(gw, report.chern);
  report.n1_tilde = extract_genus1_bps_tilde(gw, report.chern);
  for (int d = 1; d <= max_degree; ++d) {
    if (!report.n1.at(d).is_integer()) report.integrality_failures.push_back(d);
  }
  return report;
}

int martin_S(std::int64_t d) {
  if (d <= 0) throw DomainError("martin_S needs a positive degree");
  return d % 8 == 4 ? moebius(d / 4) : moebius(d);
}

Rational martin_V(std::int64_t d) {
  if (d <= 0) throw DomainError("martin_V needs a positive degree");
  std::int64_t k = d;
  int twos = 0;
  while (k % 2 == 0) {
    k /= 2;
    ++twos;
  }
  if (twos >= 3) return {};
  const Rational k2 = Rational(k) * Rational(k);
  const Rational base = (k2 - Rational(1)) / Rational(8);
  switch (twos) {
    case 0: return base * base;
    case 1: return base * (Rational(17) * k2 + Rational(7)) / Rational(8);
    default: return base * (Rational(2) * k2 + Rational(1));
  }
}

std::vector<MartinRow> martin_check(const BpsReport& report) {
  std::vector<MartinRow> rows;
  rows.reserve(report.max_degree);
  for (int d = 1; d <= report.max_degree; ++d) {
    const Rational predicted = Rational(martin_S(d)) * martin_V(d);
    const Rational& computed = report.n1.at(d);
    rows.push_back({d, computed, predicted, computed == predicted});
  }
  return rows;
}

}  // namespace cy5
