#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "acdlab/constructions.hpp"
#include "acdlab/errors.hpp"
#include "acdlab/rational.hpp"

namespace acdlab {

enum class Verdict { Consistent, SharpBoundary, Counterexample };

std::string verdict_text(Verdict v);

/// One audited (group, p, field, clause) instance.
///
/// For the bound theorems (first .. fourth, main-*): acd is the restricted average,
/// bound the threshold, and the verdict is COUNTEREXAMPLE iff hypotheses && below_bound
/// && !p_nilpotent, sharp-boundary iff hypotheses && acd == bound && !p_nilpotent.
/// acd-cent-k rows carry the quotient average in acd and the average of G in bound.
/// abelian-3 rows carry the closed-form value (or 2) in bound.
struct AuditRow {
  std::string theorem;
  std::string clause;
  std::string spec;
  std::uint64_t order = 0;
  std::uint64_t p = 0;
  std::string field;
  Rational acd;
  Rational bound;
  bool below_bound = false;
  bool p_nilpotent = false;
  bool hypotheses = false;
  Verdict verdict = Verdict::Consistent;
  std::optional<std::string> sharpness;
  std::optional<std::string> note;
};

/// Audit names in report order: first, second, third, fourth, main-1 .. main-5,
/// acd-cent-k, abelian-3, nonabelian-3.
const std::vector<std::string>& theorem_names();

/// Audits `name` ("all" runs every theorem) over the catalog with `jobs` workers.
/// Rows are sorted by theorem, spec text, p, field, clause; the result does not
/// depend on jobs. Throws InputError on an unknown name.
std::vector<AuditRow> audit_theorem(const std::string& name, const std::vector<GroupSpec>& catalog,
                                    unsigned jobs = 1);

/// One JSON object per line, keys in a fixed order.
std::string row_to_json(const AuditRow& row);
std::string rows_to_jsonl(const std::vector<AuditRow>& rows);

/// 2 if any row is a counterexample, else 0.
int audit_exit_code(const std::vector<AuditRow>& rows);

/// One spec per line; '#' starts a comment. Throws InputError naming the line.
std::vector<GroupSpec> parse_catalog(std::istream& in);

/// `acdlab table`: the JSON table, or the degree list when format == "degrees".
std::string cmd_table(const std::string& spec_text, const std::string& format);

/// `acdlab stats`: "key: value" lines. quotient accepts derived, center, trivial,
/// minnormal:<i>, ak:<field>, ncl:<cycles>.
std::string cmd_stats(const std::string& spec_text, const std::string& field_text,
                      std::optional<std::uint64_t> p, const std::optional<std::string>& quotient);

}  // namespace acdlab
