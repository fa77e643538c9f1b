// acdlab: character tables, average-degree statistics and theorem audits.
// Exit codes: 0 consistent, 1 usage or engine error, 2 counterexample found.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "acdlab/audit.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact character tables and average character degree audits"};
  app.require_subcommand(1);

  std::string spec_text;
  std::string format = "json";
  auto* table = app.add_subcommand("table", "Print the character table of a group");
  table->add_option("spec", spec_text, "Group spec, e.g. S(4) or C(2)*S(3)")->required();
  table->add_option("--format", format, "json or degrees")->check(CLI::IsMember({"json", "degrees"}));

  std::string field_text;
  std::optional<std::uint64_t> p;
  std::optional<std::string> quotient;
  auto* stats = app.add_subcommand("stats", "Average degree of a restricted character set");
  stats->add_option("spec", spec_text, "Group spec")->required();
  stats->add_option("--field", field_text, "Q, R, C, Qp(p) or Q(zeta_m)")->required();
  stats->add_option("--p", p, "Keep only degrees prime to p");
  stats->add_option("--quotient", quotient,
                    "Normal subgroup N for G/N: derived, center, trivial, minnormal:i, ak:F, ncl:cycles");

  std::string theorem;
  std::string catalog_path;
  unsigned jobs = 1;
  std::string out_path;
  auto* audit = app.add_subcommand("audit", "Audit a theorem over a group catalog");
  audit->add_option("theorem", theorem, "first, second, third, fourth, main-1..main-5, acd-cent-k, abelian-3, "
                                        "nonabelian-3 or all")
      ->required();
  audit->add_option("--catalog", catalog_path, "One group spec per line; '#' comments");
  audit->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  audit->add_option("--out", out_path, "Write the JSON-lines report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*table) {
      std::cout << acdlab::cmd_table(spec_text, format);
      return 0;
    }
    if (*stats) {
      std::cout << acdlab::cmd_stats(spec_text, field_text, p, quotient);
      return 0;
    }
    std::vector<acdlab::GroupSpec> catalog;
    if (catalog_path.empty()) {
      catalog = acdlab::default_catalog();
    } else {
      std::ifstream in(catalog_path);
      if (!in) throw acdlab::InputError("cannot open catalog " + catalog_path);
      catalog = acdlab::parse_catalog(in);
    }
    const auto rows = acdlab::audit_theorem(theorem, catalog, jobs);
    const std::string report = acdlab::rows_to_jsonl(rows);
    if (out_path.empty()) {
      std::cout << report;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw acdlab::InputError("cannot write " + out_path);
      out << report;
    }
    std::size_t sharp = 0, bad = 0;
    for (const auto& r : rows) {
      sharp += r.verdict == acdlab::Verdict::SharpBoundary;
      bad += r.verdict == acdlab::Verdict::Counterexample;
    }
    std::cerr << rows.size() << " rows, " << sharp << " sharp-boundary, " << bad << " COUNTEREXAMPLE\n";
    return acdlab::audit_exit_code(rows);
  } catch (const std::exception& e) {
    std::cerr << "acdlab: " << e.what() << "\n";
    return 1;
  }
}
