#include "cy5/geometry.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "cy5/errors.hpp"

namespace cy5 {

namespace {

void require_power(const CohClass& c, int power, const char* what) {
  if (c.is_zero()) return;
  if (c.homogeneous_power() != power) {
    throw DegreeError(std::string(what) + " must be a multiple of H^" + std::to_string(power));
  }
}

}  // namespace

Geometry::Geometry(RingPtr ring, CohClass c2, CohClass c3, std::vector<DiagonalPair> diagonal_pairs,
                   DegreeSeries unit_n1pt, DegreeSeries unit_n2pt, DegreeSeries gw_genus1)
    : ring_(std::move(ring)),
      c2_(std::move(c2)),
      c3_(std::move(c3)),
      diagonal_pairs_(std::move(diagonal_pairs)),
      unit_n1pt_(std::move(unit_n1pt)),
      unit_n2pt_(std::move(unit_n2pt)),
      gw_genus1_(std::move(gw_genus1)) {
  if (!ring_) throw DomainError("geometry needs a ring");
  if (!(*c2_.ring() == *ring_) || !(*c3_.ring() == *ring_)) throw DegreeError("Chern classes live in another ring");
  require_power(c2_, 2, "c2");
  require_power(c3_, 3, "c3");
  for (const auto& [omega, sharp] : diagonal_pairs_) {
    if (!(*omega.ring() == *ring_) || !(*sharp.ring() == *ring_)) {
      throw DegreeError("diagonal pair lives in another ring");
    }
    const auto p = omega.homogeneous_power();
    const auto q = sharp.homogeneous_power();
    if (!p || !q || !((*p == 2 && *q == 3) || (*p == 3 && *q == 2))) {
      throw DegreeError("diagonal pairs must be homogeneous of complementary H-powers 2 and 3");
    }
    if (ring_->top_integral() && integrate(ring_mul(omega, sharp)) != Rational(1)) {
      throw DomainError("diagonal pair is not dual: integral of omega * omega# != 1");
    }
  }
  if (unit_n1pt_.max_degree() != gw_genus1_.max_degree() || unit_n2pt_.max_degree() != gw_genus1_.max_degree()) {
    throw DomainError("geometry input series have different max degrees");
  }
}

Rational Geometry::base_n1pt(CurveClass beta, const CohClass& mu) const {
  const Rational x = mu.coefficient(3);
  if (x.is_zero()) return {};
  return x * unit_n1pt_.at(beta.degree());
}

Rational Geometry::base_n2pt(CurveClass beta, const CohClass& mu1, const CohClass& mu2) const {
  const Rational x = mu1.coefficient(2) * mu2.coefficient(2);
  if (x.is_zero()) return {};
  return x * unit_n2pt_.at(beta.degree());
}

HypersurfaceChern hypersurface_chern(int ambient_dim, int hyp_degree) {
  if (ambient_dim < 2) throw DomainError("ambient projective space must have dimension >= 2");
  if (hyp_degree != ambient_dim + 1) {
    throw DomainError("degree " + std::to_string(hyp_degree) + " hypersurface in P^" + std::to_string(ambient_dim) +
                      " is not Calabi-Yau");
  }
  // c_j = sum_i binom(n+1, i) (-k)^{j-i}
  Rational c[4];
  Rational binom = 1;
  std::vector<Rational> binoms;
  for (int i = 0; i <= 3; ++i) {
    binoms.push_back(binom);
    binom = binom * Rational(ambient_dim + 1 - i) / Rational(i + 1);
  }
  for (int j = 0; j <= 3; ++j) {
    for (int i = 0; i <= j; ++i) c[j] += binoms[static_cast<std::size_t>(i)] * pow(Rational(-hyp_degree), static_cast<unsigned>(j - i));
  }
  auto ring = make_ring(ambient_dim - 1, Rational(hyp_degree));
  return {CohClass::monomial(ring, 1, c[1]), CohClass::monomial(ring, 2, c[2]), CohClass::monomial(ring, 3, c[3])};
}

namespace {

constexpr const char* kMagic = "cy5-gw v1";

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Rational parse_field(const std::string& text, int line) {
  try {
    return Rational::parse(text);
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(line) + ": " + e.what());
  }
}

}  // namespace

GwInput parse_gw_input(std::istream& in) {
  std::string raw;
  int line = 0;

  if (!std::getline(in, raw)) throw FormatError(1, "empty input, expected '" + std::string(kMagic) + "'");
  ++line;
  if (trim(raw) != kMagic) throw FormatError(line, "expected header '" + std::string(kMagic) + "'");

  if (!std::getline(in, raw)) throw FormatError(2, "missing parameter line");
  ++line;
  std::map<std::string, std::string> params;
  {
    std::istringstream tokens(raw);
    std::string token;
    while (tokens >> token) {
      const auto eq = token.find('=');
      if (eq == std::string::npos) throw FormatError(line, "expected key=value, got '" + token + "'");
      std::string key = token.substr(0, eq);
      if (key != "t5" && key != "c2" && key != "c3" && key != "maxdeg") {
        throw FormatError(line, "unknown key '" + key + "'");
      }
      if (!params.emplace(key, token.substr(eq + 1)).second) throw FormatError(line, "duplicate key '" + key + "'");
    }
  }
  for (const char* key : {"t5", "c2", "c3", "maxdeg"}) {
    if (!params.count(key)) throw FormatError(line, std::string("missing key '") + key + "'");
  }

  GwInput input;
  input.t5 = parse_field(params["t5"], line);
  input.c2 = parse_field(params["c2"], line);
  input.c3 = parse_field(params["c3"], line);
  const Rational maxdeg = parse_field(params["maxdeg"], line);
  if (!maxdeg.is_integer() || maxdeg < Rational(1) || maxdeg > Rational(65535)) {
    throw FormatError(line, "maxdeg must be an integer in 1..65535");
  }
  const int max_degree = static_cast<int>(maxdeg.get().get_num().get_si());

  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty()) continue;
    std::istringstream fields(text);
    std::string d_text, a, b, c, extra;
    if (!(fields >> d_text >> a >> b >> c) || (fields >> extra)) {
      throw FormatError(line, "expected '<d> <N0_1pt_H3> <N0_2pt_H2H2> <N1>'");
    }
    const Rational d = parse_field(d_text, line);
    const int expected = input.max_degree() + 1;
    if (expected > max_degree) throw FormatError(line, "row beyond maxdeg=" + std::to_string(max_degree));
    if (d != Rational(expected)) {
      throw FormatError(line, "degrees out of order: expected degree " + std::to_string(expected) + ", found " +
                                  d_text + " (missing row for degree " + std::to_string(expected) + ")");
    }
    input.rows.push_back({parse_field(a, line), parse_field(b, line), parse_field(c, line)});
  }
  if (input.max_degree() < max_degree) {
    throw FormatError(line, "missing row for degree " + std::to_string(input.max_degree() + 1));
  }
  return input;
}

void write_gw_input(std::ostream& out, const GwInput& input) {
  out << kMagic << '\n';
  out << "t5=" << input.t5 << " c2=" << input.c2 << " c3=" << input.c3 << " maxdeg=" << input.max_degree() << '\n';
  for (int d = 1; d <= input.max_degree(); ++d) {
    const auto& row = input.rows[static_cast<std::size_t>(d - 1)];
    out << d << ' ' << row.n0_1pt_h3 << ' ' << row.n0_2pt_h2h2 << ' ' << row.n1 << '\n';
  }
}

Geometry hypersurface_geometry(const GwInput& input, int max_degree) {
  if (max_degree < 1) throw DomainError("max_degree must be >= 1");
  if (max_degree > input.max_degree()) {
    throw FormatError(0, "input covers degrees 1.." + std::to_string(input.max_degree()) + ", missing degree " +
                             std::to_string(input.max_degree() + 1));
  }
  if (input.t5.is_zero()) throw FormatError(2, "t5 must be nonzero");

  auto ring = make_ring(5, input.t5);
  const Rational inv = Rational(1) / input.t5;
  std::vector<DiagonalPair> pairs{
      {CohClass::monomial(ring, 2), CohClass::monomial(ring, 3, inv)},
      {CohClass::monomial(ring, 3), CohClass::monomial(ring, 2, inv)},
  };

  std::vector<Rational> one, two, genus1;
  for (int d = 1; d <= max_degree; ++d) {
    const auto& row = input.rows[static_cast<std::size_t>(d - 1)];
    one.push_back(row.n0_1pt_h3);
    two.push_back(row.n0_2pt_h2h2);
    genus1.push_back(row.n1);
  }
  return Geometry(ring, CohClass::monomial(ring, 2, input.c2), CohClass::monomial(ring, 3, input.c3),
                  std::move(pairs), invert_multi_cover(DegreeSeries(std::move(one)), 1),
                  invert_multi_cover(DegreeSeries(std::move(two)), 2), DegreeSeries(std::move(genus1)));
}

Geometry load_hypersurface_geometry(const std::filesystem::path& path, int max_degree) {
  std::ifstream in(path);
  if (!in) throw FormatError(0, "cannot open '" + path.string() + "'");
  return hypersurface_geometry(parse_gw_input(in), max_degree);
}

}  // namespace cy5
