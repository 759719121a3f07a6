#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "cy5/engine.hpp"
#include "cy5/errors.hpp"
#include "cy5/genus1.hpp"
#include "cy5/geometry.hpp"
#include "cy5/localp2.hpp"

namespace cy5::cli {
namespace {

using nlohmann::json;

json to_json(const Rational& q) { return {{"num", q.numerator_string()}, {"den", q.denominator_string()}}; }

const char* status(bool ok) { return ok ? "PASS" : "FAIL"; }

const char* command_name(Command c) {
  switch (c) {
    case Command::LocalP2: return "local-p2";
    case Command::Hypersurface: return "hypersurface";
    case Command::VerifyLocalization: return "verify-localization";
    case Command::VerifyMartin: return "verify-martin";
  }
  return "?";
}

int require_max_degree(const RunConfig& config, std::ostream& err) {
  if (!config.max_degree) {
    err << "error: --max-degree is required for " << command_name(config.command) << "\n";
    return 0;
  }
  return *config.max_degree;
}

}  // namespace

std::variant<RunConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Genus-1 BPS invariants of Calabi-Yau 5-folds", "cy5bps"};
  app.require_subcommand(1);

  std::string format = "csv";
  int max_degree = 0;
  std::string input;
  std::string output;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--max-degree", max_degree, "Largest curve degree")->check(CLI::Range(1, 65535));
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", output, "Write to this file instead of standard output");
  };

  auto* local = app.add_subcommand("local-p2", "n_{1,d} table of local P^2 with the closed-form comparison");
  add_common(local);
  local->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::Range(1, 65535));

  auto* hyp = app.add_subcommand("hypersurface", "n_{1,d} table of a hypersurface from a cy5-gw file");
  add_common(hyp);
  hyp->add_option("--input", input, "cy5-gw v1 input file")->required();
  hyp->add_option("--meeting-table", config.meeting_table, "Also print n_{d1 d2}(H|;) for d1, d2 <= D")
      ->check(CLI::Range(1, 65535));
  hyp->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::Range(1, 65535));

  auto* loc = app.add_subcommand("verify-localization", "Check the torus-localization sums for local P^2");
  add_common(loc);
  loc->add_option("--seed", config.seed, "Seed for the random weight triples");

  auto* martin = app.add_subcommand("verify-martin", "Check the closed form S(d) V(d) degree by degree");
  add_common(martin);
  martin->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::Range(1, 65535));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (local->parsed()) config.command = Command::LocalP2;
  if (hyp->parsed()) config.command = Command::Hypersurface;
  if (loc->parsed()) config.command = Command::VerifyLocalization;
  if (martin->parsed()) config.command = Command::VerifyMartin;

  const CLI::App* sub = app.get_subcommands().front();
  if (sub->count("--max-degree") > 0) config.max_degree = max_degree;
  config.format = format == "json" ? Format::Json : Format::Csv;
  config.input = input;
  config.output = output;

  if (config.command != Command::Hypersurface && !config.max_degree) {
    err << "error: --max-degree is required for " << command_name(config.command) << "\n";
    return kExitUsage;
  }
  return config;
}

int cmd_local_p2(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const int max_degree = require_max_degree(config, err);
  if (max_degree < 1) return kExitUsage;

  const Geometry geometry = localp2_geometry(max_degree);
  const BpsReport report = compute_bps_table(geometry, max_degree, config.jobs);
  const std::vector<MartinRow> martin = martin_check(report);

  bool ok = report.integrality_failures.empty();
  for (const auto& row : martin) ok = ok && row.match;

  if (config.format == Format::Csv) {
    out << "d,n1,n1_tilde,chern,martin_predicted,match\n";
    for (int d = 1; d <= max_degree; ++d) {
      const auto& row = martin[d - 1];
      out << d << ',' << report.n1.at(d) << ',' << report.n1_tilde.at(d) << ',' << report.chern.at(d) << ','
          << row.predicted << ',' << (row.match ? "true" : "false") << '\n';
    }
  } else {
    json rows = json::array();
    for (int d = 1; d <= max_degree; ++d) {
      const auto& row = martin[d - 1];
      rows.push_back({{"d", d},
                      {"n1", to_json(report.n1.at(d))},
                      {"n1_tilde", to_json(report.n1_tilde.at(d))},
                      {"chern", to_json(report.chern.at(d))},
                      {"martin_predicted", to_json(row.predicted)},
                      {"match", row.match}});
    }
    json doc{{"command", "local-p2"},
             {"max_degree", max_degree},
             {"integrality_failures", report.integrality_failures},
             {"ok", ok},
             {"rows", rows}};
    out << doc.dump(2) << '\n';
  }

  if (!ok) {
    err << "verification failed: " << report.integrality_failures.size() << " non-integral degree(s)";
    int mismatches = 0;
    for (const auto& row : martin) mismatches += row.match ? 0 : 1;
    err << ", " << mismatches << " closed-form mismatch(es)\n";
    return kExitVerification;
  }
  return kExitOk;
}

int cmd_hypersurface(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ifstream file(config.input);
  if (!file) {
    err << "error: cannot open " << config.input.string() << "\n";
    return kExitUsage;
  }
  const GwInput input = parse_gw_input(file);
  const int max_degree = config.max_degree.value_or(input.max_degree());
  if (max_degree > input.max_degree()) {
    err << "error: " << config.input.string() << " covers degrees 1.." << input.max_degree() << ", but --max-degree is "
        << max_degree << "\n";
    return kExitUsage;
  }
  const int meeting = config.meeting_table;
  if (meeting > 0 && 2 * meeting > max_degree) {
    err << "error: --meeting-table " << meeting << " needs data through degree " << 2 * meeting << "\n";
    return kExitUsage;
  }

  const Geometry geometry = hypersurface_geometry(input, max_degree);
  const BpsReport report = compute_bps_table(geometry, max_degree, config.jobs);

  std::vector<std::vector<Rational>> table;
  if (meeting > 0) {
    Engine engine(geometry);
    const CohClass h = geometry.hyperplane_power(1);
    table.assign(meeting, std::vector<Rational>(meeting));
    for (int d1 = 1; d1 <= meeting; ++d1) {
      for (int d2 = 1; d2 <= meeting; ++d2) table[d1 - 1][d2 - 1] = engine.n2B(CurveClass(d1), CurveClass(d2), h);
    }
  }

  if (config.format == Format::Csv) {
    out << "d,n1\n";
    for (int d = 1; d <= max_degree; ++d) out << d << ',' << report.n1.at(d) << '\n';
    if (meeting > 0) {
      // Rows are d1, columns d2.
      out << "\nd1\\d2";
      for (int d2 = 1; d2 <= meeting; ++d2) out << ',' << d2;
      out << '\n';
      for (int d1 = 1; d1 <= meeting; ++d1) {
        out << d1;
        for (const auto& value : table[d1 - 1]) out << ',' << value;
        out << '\n';
      }
    }
  } else {
    json rows = json::array();
    for (int d = 1; d <= max_degree; ++d) rows.push_back({{"d", d}, {"n1", to_json(report.n1.at(d))}});
    json doc{{"command", "hypersurface"},
             {"max_degree", max_degree},
             {"integrality_failures", report.integrality_failures},
             {"rows", rows}};
    if (meeting > 0) {
      json matrix = json::array();
      for (const auto& row : table) {
        json line = json::array();
        for (const auto& value : row) line.push_back(to_json(value));
        matrix.push_back(line);
      }
      doc["meeting_table"] = matrix;
    }
    out << doc.dump(2) << '\n';
  }

  if (!report.integrality_failures.empty()) {
    err << "verification failed: n1 is not integral at degree " << report.integrality_failures.front() << "\n";
    return kExitVerification;
  }
  return kExitOk;
}

int cmd_verify_localization(const RunConfig& config, std::ostream& out, std::ostream& err) {
  constexpr int kTriplesPerDegree = 3;
  const int max_degree = require_max_degree(config, err);
  if (max_degree < 1) return kExitUsage;

  std::mt19937_64 rng(config.seed);
  bool all_ok = true;
  json rows = json::array();
  if (config.format == Format::Csv) out << "d,g0,g1,status\n";

  for (int d = 1; d <= max_degree; ++d) {
    const Rational want_g0 = localp2_genus0_gw(d);
    const Rational want_g1 = localp2_genus1_gw(d);
    bool ok = true;
    for (int t = 0; t < kTriplesPerDegree; ++t) {
      const WeightTriple w = random_weight_triple(rng, d);
      ok = ok && localization_g0(d, w) == want_g0;
      ok = ok && localization_g1(d, w) == want_g1;
      ok = ok && locus_factor_sum(w) == Rational(3);
      const Rational* ws[3] = {&w.a, &w.b, &w.c};
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          const Rational& z = *ws[3 - i - j];
          ok = ok && localization_g1_locus(d, *ws[i], *ws[j], z) == genus1_locus_closed_form(d, *ws[i], *ws[j], z);
        }
      }
    }
    all_ok = all_ok && ok;
    if (config.format == Format::Csv) {
      out << d << ',' << want_g0 << ',' << want_g1 << ',' << status(ok) << '\n';
    } else {
      rows.push_back({{"d", d}, {"g0", to_json(want_g0)}, {"g1", to_json(want_g1)}, {"status", status(ok)}});
    }
  }

  if (config.format == Format::Json) {
    json doc{{"command", "verify-localization"},
             {"max_degree", max_degree},
             {"seed", config.seed},
             {"ok", all_ok},
             {"rows", rows}};
    out << doc.dump(2) << '\n';
  }
  return all_ok ? kExitOk : kExitVerification;
}

int cmd_verify_martin(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const int max_degree = require_max_degree(config, err);
  if (max_degree < 1) return kExitUsage;

  const Geometry geometry = localp2_geometry(max_degree);
  const BpsReport report = compute_bps_table(geometry, max_degree, config.jobs);
  bool all_ok = true;
  json rows = json::array();
  if (config.format == Format::Csv) out << "d,n1,martin_predicted,status\n";
  for (const auto& row : martin_check(report)) {
    all_ok = all_ok && row.match;
    if (config.format == Format::Csv) {
      out << row.degree << ',' << row.computed << ',' << row.predicted << ',' << status(row.match) << '\n';
    } else {
      rows.push_back({{"d", row.degree},
                      {"n1", to_json(row.computed)},
                      {"martin_predicted", to_json(row.predicted)},
                      {"status", status(row.match)}});
    }
  }
  if (config.format == Format::Json) {
    out << json{{"command", "verify-martin"}, {"max_degree", max_degree}, {"ok", all_ok}, {"rows", rows}}.dump(2)
        << '\n';
  }
  return all_ok ? kExitOk : kExitVerification;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::LocalP2: return cmd_local_p2(config, out, err);
      case Command::Hypersurface: return cmd_hypersurface(config, out, err);
      case Command::VerifyLocalization: return cmd_verify_localization(config, out, err);
      case Command::VerifyMartin: return cmd_verify_martin(config, out, err);
    }
  } catch (const RecursionCycleError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const DeterminismError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  auto parsed = parse_args(argc, argv, out, err);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  const RunConfig& config = std::get<RunConfig>(parsed);

  if (config.output.empty()) return run(config, out, err);

  // Render into memory first so a failed run leaves no half-written file.
  std::ostringstream buffer;
  const int code = run(config, buffer, err);
  std::ofstream file(config.output);
  if (!file) {
    err << "error: cannot write " << config.output.string() << "\n";
    return kExitUsage;
  }
  file << buffer.str();
  return code;
}

}  // namespace cy5::cli
