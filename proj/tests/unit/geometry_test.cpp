#include "cy5/geometry.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cy5/errors.hpp"
#include "cy5/localp2.hpp"

namespace cy5 {
namespace {

GwInput parse(const std::string& text) {
  std::istringstream in(text);
  return parse_gw_input(in);
}

// Message of the exception thrown by parsing `text`, with its line.
template <class E>
std::pair<int, std::string> parse_failure(const std::string& text) {
  try {
    parse(text);
  } catch (const FormatError& e) {
    if constexpr (std::is_same_v<E, FormatError>) return {e.line(), e.what()};
  } catch (const ParseError& e) {
    if constexpr (std::is_same_v<E, ParseError>) return {0, e.what()};
  }
  ADD_FAILURE() << "no error of the expected type for:\n" << text;
  return {-1, ""};
}

const char* kSepticHeader = "cy5-gw v1\nt5=7 c2=21 c3=-112 maxdeg=2\n";

TEST(HypersurfaceChern, Septic) {
  const auto c = hypersurface_chern(6, 7);
  EXPECT_TRUE(c.c1.is_zero());
  EXPECT_EQ(c.c2.coefficient(2), Rational(21));
  EXPECT_EQ(c.c3.coefficient(3), Rational(-112));
  EXPECT_EQ(c.c2.ring()->top_power(), 5);
  EXPECT_EQ(*c.c2.ring()->top_integral(), Rational(7));
}

TEST(HypersurfaceChern, Quintic) {
  const auto c = hypersurface_chern(4, 5);
  EXPECT_TRUE(c.c1.is_zero());
  EXPECT_EQ(c.c2.coefficient(2), Rational(10));
  EXPECT_EQ(c.c3.coefficient(3), Rational(-40));
}

TEST(HypersurfaceChern, RequiresTrivialCanonicalClass) {
  EXPECT_THROW(hypersurface_chern(6, 6), DomainError);
  EXPECT_THROW(hypersurface_chern(1, 2), DomainError);
}

TEST(GeometryValidation, PairsMustBeComplementaryAndDual) {
  auto ring = make_ring(5, Rational(7));
  const auto h = [&](int p, Rational c = 1) { return CohClass::monomial(ring, p, c); };
  const DegreeSeries z = DegreeSeries::zeros(2);
  EXPECT_NO_THROW(Geometry(ring, h(2), h(3), {{h(2), h(3, Rational(1, 7))}}, z, z, z));
  EXPECT_THROW(Geometry(ring, h(2), h(3), {{h(2), h(2)}}, z, z, z), DegreeError);
  EXPECT_THROW(Geometry(ring, h(2), h(3), {{h(2), h(3)}}, z, z, z), DomainError);
  EXPECT_THROW(Geometry(ring, h(2), h(3), {}, z, z, DegreeSeries::zeros(3)), DomainError);
  EXPECT_THROW(Geometry(ring, h(3), h(3), {}, z, z, z), DegreeError);
}

TEST(GeometryBaseCounts, ScaleAndVanishByCodimension) {
  auto ring = make_ring(5, Rational(7));
  const auto h = [&](int p, Rational c = 1) { return CohClass::monomial(ring, p, c); };
  const DegreeSeries one({Rational(10), Rational(20)});
  const DegreeSeries two({Rational(3), Rational(4)});
  const Geometry g(ring, h(2), h(3), {}, one, two, DegreeSeries::zeros(2));
  EXPECT_EQ(g.base_n1pt(CurveClass(2), h(3, Rational(5))), Rational(100));
  EXPECT_EQ(g.base_n1pt(CurveClass(2), h(2)), Rational(0));
  EXPECT_EQ(g.base_n2pt(CurveClass(1), h(2, Rational(2)), h(2, Rational(3))), Rational(18));
  EXPECT_EQ(g.base_n2pt(CurveClass(1), h(1), h(3)), Rational(0));
}

TEST(GwInput, ParsesAndRoundTrips) {
  const std::string text = std::string(kSepticHeader) + "1 1009792 1707797 0\n2 1/8 -3/2 5\n";
  const GwInput input = parse(text);
  EXPECT_EQ(input.t5, Rational(7));
  EXPECT_EQ(input.c2, Rational(21));
  EXPECT_EQ(input.c3, Rational(-112));
  ASSERT_EQ(input.max_degree(), 2);
  EXPECT_EQ(input.rows[1].n0_2pt_h2h2, Rational(-3, 2));

  std::ostringstream out;
  write_gw_input(out, input);
  EXPECT_EQ(out.str(), text);
  const GwInput again = parse(out.str());
  EXPECT_EQ(again.rows[0].n0_1pt_h3, input.rows[0].n0_1pt_h3);
  EXPECT_EQ(again.rows[1].n1, input.rows[1].n1);
}

TEST(GwInput, BlankLinesAndSurroundingSpaceAreIgnored) {
  const GwInput input = parse("  cy5-gw v1 \n maxdeg=1   c3=0 c2=0 t5=5\n\n  1  0 0 0  \n\n");
  EXPECT_EQ(input.max_degree(), 1);
}

TEST(GwInput, MissingRowNamesTheDegree) {
  auto [line, what] = parse_failure<FormatError>(std::string(kSepticHeader) + "1 0 0 0\n");
  EXPECT_NE(what.find("missing row for degree 2"), std::string::npos) << what;

  std::tie(line, what) =
      parse_failure<FormatError>("cy5-gw v1\nt5=7 c2=21 c3=-112 maxdeg=3\n1 0 0 0\n3 0 0 0\n");
  EXPECT_EQ(line, 4);
  EXPECT_NE(what.find("missing row for degree 2"), std::string::npos) << what;
}

TEST(GwInput, StructuralErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_failure<FormatError>("").first, 1);
  EXPECT_EQ(parse_failure<FormatError>("cy5-gw v2\n").first, 1);
  EXPECT_EQ(parse_failure<FormatError>("cy5-gw v1\n").first, 2);
  EXPECT_EQ(parse_failure<FormatError>("cy5-gw v1\nt5=7 c2=21 c3=-112\n").first, 2);
  EXPECT_EQ(parse_failure<FormatError>("cy5-gw v1\nt5=7 c2=21 c3=-112 maxdeg=1 x=2\n").first, 2);
  EXPECT_EQ(parse_failure<FormatError>("cy5-gw v1\nt5=7 t5=7 c2=21 c3=-112 maxdeg=1\n").first, 2);
  EXPECT_EQ(parse_failure<FormatError>("cy5-gw v1\nt5=7 c2=21 c3=-112 maxdeg=0\n").first, 2);
  EXPECT_EQ(parse_failure<FormatError>(std::string(kSepticHeader) + "1 0 0\n").first, 3);
  EXPECT_EQ(parse_failure<FormatError>(std::string(kSepticHeader) + "1 0 0 0 0\n").first, 3);
  EXPECT_EQ(parse_failure<FormatError>(std::string(kSepticHeader) + "1 0 0 0\n2 0 0 0\n3 0 0 0\n").first, 5);
}

TEST(GwInput, BadNumbersAreParseErrorsWithTheLine) {
  const auto [unused, what] = parse_failure<ParseError>(std::string(kSepticHeader) + "1 0 0 0\n2 0 zero 0\n");
  EXPECT_EQ(what.rfind("line 4:", 0), 0U) << what;
  EXPECT_EQ(parse_failure<ParseError>("cy5-gw v1\nt5=seven c2=21 c3=-112 maxdeg=1\n1 0 0 0\n").second.rfind("line 2:", 0),
            0U);
}

TEST(HypersurfaceGeometry, InvertsTheGenusZeroColumns) {
  // n_{0,1}(H^3) = 1, n_{0,2}(H^3) = 2 => N_2 = 2 + 1/2^2 for one insertion;
  // n_{0,1}(H^2,H^2) = 3, n_{0,2} = 4 => N_2 = 4 + 3/2 for two insertions.
  const GwInput input = parse(std::string(kSepticHeader) + "1 1 3 0\n2 9/4 11/2 0\n");
  const Geometry g = hypersurface_geometry(input, 2);
  EXPECT_EQ(g.unit_n1pt(), DegreeSeries({Rational(1), Rational(2)}));
  EXPECT_EQ(g.unit_n2pt(), DegreeSeries({Rational(3), Rational(4)}));
  EXPECT_EQ(g.c2().coefficient(2), Rational(21));
  EXPECT_EQ(g.c3().coefficient(3), Rational(-112));
  ASSERT_EQ(g.diagonal_pairs().size(), 2U);
  for (const auto& [omega, sharp] : g.diagonal_pairs()) EXPECT_EQ(integrate(omega * sharp), Rational(1));
}

TEST(HypersurfaceGeometry, TruncatesAndRefusesToPad) {
  const GwInput input = parse(std::string(kSepticHeader) + "1 1 3 0\n2 0 0 0\n");
  EXPECT_EQ(hypersurface_geometry(input, 1).max_degree(), 1);
  EXPECT_THROW(hypersurface_geometry(input, 3), FormatError);
}

TEST(HypersurfaceGeometry, LoadsFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "cy5_geometry_test.gw";
  {
    std::ofstream out(path);
    out << kSepticHeader << "1 0 0 0\n2 0 0 0\n";
  }
  EXPECT_EQ(load_hypersurface_geometry(path, 2).max_degree(), 2);
  std::filesystem::remove(path);
  EXPECT_THROW(load_hypersurface_geometry(path, 2), FormatError);
}

TEST(LocalP2Geometry, Data) {
  const Geometry g = localp2_geometry(5);
  EXPECT_EQ(g.ring()->top_power(), 2);
  EXPECT_FALSE(g.ring()->top_integral().has_value());
  EXPECT_EQ(g.c2().coefficient(2), Rational(-3));
  EXPECT_TRUE(g.c3().is_zero());
  EXPECT_TRUE(g.diagonal_pairs().empty());
  EXPECT_EQ(g.unit_n1pt(), DegreeSeries::zeros(5));
  EXPECT_EQ(g.unit_n2pt(), DegreeSeries({Rational(1), Rational(-1), Rational(0), Rational(0), Rational(0)}));
  EXPECT_EQ(g.gw_genus1().at(3), Rational(-1, 24));
}

}  // namespace
}  // namespace cy5
