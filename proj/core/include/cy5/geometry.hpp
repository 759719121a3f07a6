#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "cy5/cohomology.hpp"
#include "cy5/series.hpp"

namespace cy5 {

/// One term omega x omega# of the Kunneth decomposition of the diagonal,
/// restricted to H^4 (x) H^6 and H^6 (x) H^4.
struct DiagonalPair {
  CohClass omega;
  CohClass omega_sharp;
};

/// Everything the recursion engine needs to know about a Calabi-Yau 5-fold
/// with rank-1 H_2. Immutable after construction.
///
/// The genus-0 input is stored already inverted to integer form: unit_n1pt(d)
/// is n_{0,d}(H^3) and unit_n2pt(d) is n_{0,d}(H^2, H^2). Arbitrary insertions
/// are handled by linearity, and any insertion of the wrong codimension gives
/// 0 (the family of degree-d rational curves is 2-dimensional, so a k-pointed
/// count needs total codimension 2 + k).
class Geometry {
 public:
  Geometry(RingPtr ring, CohClass c2, CohClass c3, std::vector<DiagonalPair> diagonal_pairs,
           DegreeSeries unit_n1pt, DegreeSeries unit_n2pt, DegreeSeries gw_genus1);

  const RingPtr& ring() const { return ring_; }
  const CohClass& c2() const { return c2_; }
  const CohClass& c3() const { return c3_; }
  const std::vector<DiagonalPair>& diagonal_pairs() const { return diagonal_pairs_; }
  const DegreeSeries& unit_n1pt() const { return unit_n1pt_; }
  const DegreeSeries& unit_n2pt() const { return unit_n2pt_; }
  const DegreeSeries& gw_genus1() const { return gw_genus1_; }
  int max_degree() const { return gw_genus1_.max_degree(); }

  /// n_beta(mu): count 1A.
  Rational base_n1pt(CurveClass beta, const CohClass& mu) const;
  /// n_beta(mu1, mu2): count 1B.
  Rational base_n2pt(CurveClass beta, const CohClass& mu1, const CohClass& mu2) const;

  CohClass hyperplane_power(int power) const { return CohClass::monomial(ring_, power); }

 private:
  RingPtr ring_;
  CohClass c2_;
  CohClass c3_;
  std::vector<DiagonalPair> diagonal_pairs_;
  DegreeSeries unit_n1pt_;
  DegreeSeries unit_n2pt_;
  DegreeSeries gw_genus1_;
};

struct HypersurfaceChern {
  CohClass c1;
  CohClass c2;
  CohClass c3;
};

/// Chern classes of a degree-k hypersurface in P^n from
/// c(X) = (1+H)^{n+1} / (1+kH). Requires k = n+1 (so c1 = 0); the classes
/// live in a ring truncated at H^{n-1} with top integral k.
HypersurfaceChern hypersurface_chern(int ambient_dim, int hyp_degree);

/// Parsed contents of a `cy5-gw v1` input file.
struct GwInput {
  struct Row {
    Rational n0_1pt_h3;
    Rational n0_2pt_h2h2;
    Rational n1;
  };
  Rational t5;
  Rational c2;
  Rational c3;
  std::vector<Row> rows;  // rows[d-1] holds degree d

  int max_degree() const { return static_cast<int>(rows.size()); }
};

/// Throws FormatError (with the offending 1-based line) or ParseError.
GwInput parse_gw_input(std::istream& in);
void write_gw_input(std::ostream& out, const GwInput& input);

/// Builds the hypersurface geometry: ring truncated at H^5 with top integral
/// t5, diagonal pairs (H^2, H^3/t5), (H^3, H^2/t5), base counts by
/// multiple-cover inversion of the two genus-0 columns.
Geometry hypersurface_geometry(const GwInput& input, int max_degree);

/// parse_gw_input + hypersurface_geometry. Throws FormatError when the file
/// does not cover 1..max_degree.
Geometry load_hypersurface_geometry(const std::filesystem::path& path, int max_degree);

}  // namespace cy5
