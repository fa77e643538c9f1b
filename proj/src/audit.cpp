#include "acdlab/audit.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "acdlab/chartab.hpp"
#include "acdlab/errors.hpp"
#include "acdlab/fieldvals.hpp"
#include "acdlab/stats.hpp"
#include "json.hpp"

namespace acdlab {

namespace {

/// Everything the audits need about one catalog group, computed lazily once.
class GroupContext {
 public:
  explicit GroupContext(const GroupSpec& s)
      : text(to_string(s)), group(build(s)), table(character_table(group)), solvable(is_solvable(group)) {}

  bool p_nilpotent(std::uint64_t p) {
    auto it = pnil_.find(p);
    if (it == pnil_.end()) it = pnil_.emplace(p, is_p_nilpotent(group, p).p_nilpotent).first;
    return it->second;
  }

  Rational acd_of(const FieldSpec& k, std::optional<std::uint64_t> p) {
    const std::string key = k.to_string() + "|" + (p ? std::to_string(*p) : "-");
    auto it = acd_.find(key);
    if (it == acd_.end()) it = acd_.emplace(key, acd(table, AcdQuery{k, p, std::nullopt})).first;
    return it->second;
  }

  const std::optional<AffineStructure>& affine() {
    if (!affine_done_) {
      affine_ = affine_structure(group);
      affine_done_ = true;
    }
    return affine_;
  }

  std::string text;
  FiniteGroup group;
  CharacterTable table;
  bool solvable;

 private:
  std::map<std::uint64_t, bool> pnil_;
  std::map<std::string, Rational> acd_;
  std::optional<AffineStructure> affine_;
  bool affine_done_ = false;
};

bool odd_order(const GroupContext& c) { return c.group.order() % 2 == 1; }

std::vector<std::uint64_t> odd_primes(const GroupContext& c) {
  std::vector<std::uint64_t> out;
  for (auto p : prime_divisors(c.group.order()))
    if (p != 2) out.push_back(p);
  return out;
}

bool divides_order(const GroupContext& c, std::uint64_t p) { return c.group.order() % p == 0; }

Rational f_bound(std::uint64_t p) { return bound_f(p, 1); }

AuditRow base_row(GroupContext& c, const std::string& theorem, const std::string& clause, std::uint64_t p,
                  const FieldSpec& k) {
  AuditRow r;
  r.theorem = theorem;
  r.clause = clause;
  r.spec = c.text;
  r.order = c.group.order();
  r.p = p;
  r.field = k.to_string();
  r.p_nilpotent = c.p_nilpotent(p);
  return r;
}

/// Standard bound row: the theorem claims p-nilpotence whenever acd < bound.
void bound_row(std::vector<AuditRow>& out, GroupContext& c, const std::string& theorem, const std::string& clause,
               std::uint64_t p, const FieldSpec& k, bool filter, const Rational& bound, bool hypotheses,
               bool sharpness_unknown = false) {
  AuditRow r = base_row(c, theorem, clause, p, k);
  r.acd = c.acd_of(k, filter ? std::optional<std::uint64_t>(p) : std::nullopt);
  r.bound = bound;
  r.below_bound = r.acd < bound;
  r.hypotheses = hypotheses;
  if (hypotheses && r.below_bound && !r.p_nilpotent)
    r.verdict = Verdict::Counterexample;
  else if (hypotheses && r.acd == bound && !r.p_nilpotent)
    r.verdict = Verdict::SharpBoundary;
  if (sharpness_unknown) r.sharpness = "unknown";
  if (!hypotheses) r.note = c.solvable ? "hypotheses not met" : "not solvable";
  out.push_back(std::move(r));
}

void audit_first(GroupContext& c, std::vector<AuditRow>& out) {
  for (auto p : odd_primes(c))
    bound_row(out, c, "first", "first", p, FieldSpec::complexes(), true, f_bound(p), c.solvable);
}

void audit_second(GroupContext& c, std::vector<AuditRow>& out) {
  if (!divides_order(c, 2)) return;
  const auto q = FieldSpec::rationals();
  const auto r = FieldSpec::reals();
  bound_row(out, c, "second", "second-1", 2, q, true, Rational(2), c.solvable);
  bound_row(out, c, "second", "second-2", 2, q, false, Rational(2), c.solvable);
  bound_row(out, c, "second", "second-3", 2, r, true, Rational(2), c.solvable);
  bound_row(out, c, "second", "second-4", 2, r, false, Rational(2), c.solvable);
}

void audit_third(GroupContext& c, std::vector<AuditRow>& out) {
  for (auto p : odd_primes(c)) {
    bound_row(out, c, "third", "third-1", p, FieldSpec::qp(p), true, f_bound(p), c.solvable);
    bound_row(out, c, "third", "third-2", p, FieldSpec::qp(p), false, f_bound(p), c.solvable);
  }
}

void audit_fourth(GroupContext& c, std::vector<AuditRow>& out) {
  if (!odd_order(c)) return;
  for (auto p : odd_primes(c)) {
    if (p == 7)
      bound_row(out, c, "fourth", "fourth-1", p, FieldSpec::complexes(), true, Rational(9, 5), true);
    else
      bound_row(out, c, "fourth", "fourth-2", p, FieldSpec::complexes(), true, Rational(2), true, true);
    bound_row(out, c, "fourth", "fourth-3", p, FieldSpec::qp(p), true, Rational(2), true, true);
    bound_row(out, c, "fourth", "fourth-4", p, FieldSpec::qp(p), false, Rational(2), true, true);
  }
}

void audit_main(int clause, GroupContext& c, std::vector<AuditRow>& out) {
  const std::string name = "main-" + std::to_string(clause);
  switch (clause) {
    case 1:
      for (auto p : odd_primes(c))
        for (const auto& k : {FieldSpec::qp(p), FieldSpec::complexes()})
          bound_row(out, c, name, name, p, k, true, f_bound(p), c.solvable);
      break;
    case 2:
      if (divides_order(c, 2))
        bound_row(out, c, name, name, 2, FieldSpec::rationals(), true, Rational(2), c.solvable);
      break;
    case 3:
      if (odd_order(c) && divides_order(c, 7))
        for (const auto& k : {FieldSpec::cyclotomic(21), FieldSpec::complexes()})
          bound_row(out, c, name, name, 7, k, true, Rational(9, 5), true);
      break;
    case 4:
      if (odd_order(c) && divides_order(c, 7))
        bound_row(out, c, name, name, 7, FieldSpec::qp(7), true, Rational(2), true);
      break;
    case 5:
      if (odd_order(c))
        for (auto p : odd_primes(c))
          if (p != 7)
            for (const auto& k : {FieldSpec::qp(p), FieldSpec::complexes()})
              bound_row(out, c, name, name, p, k, true, Rational(2), true);
      break;
    default:
      break;
  }
}

std::vector<FieldSpec> dedupe(std::vector<FieldSpec> fs) {
  std::vector<FieldSpec> out;
  for (auto& f : fs)
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

/// Quotients G/K for minimal normal K with K meeting G' trivially.
void audit_cent(GroupContext& c, std::vector<AuditRow>& out) {
  if (c.group.order() == 1) return;
  const SubgroupHandle gp = derived_subgroup(c.group);
  const auto mins = minimal_normal_subgroups(c.group);
  for (std::size_t i = 0; i < mins.size(); ++i) {
    const auto& kn = mins[i];
    if (!subgroup_intersection(kn, gp).is_trivial()) continue;
    for (auto p : prime_divisors(c.group.order())) {
      std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::reals(), FieldSpec::complexes()};
      if (p != 2) fields.push_back(FieldSpec::qp(p));
      for (const auto& k : fields) {
        AuditRow r = base_row(c, "acd-cent-k", "acd-cent-k", p, k);
        const Rational whole = c.acd_of(k, p);
        const Rational quotient = acd(c.table, AcdQuery{k, p, kn});
        const bool splits = subgroup_intersection(kn, a_k_subgroup(c.table, k)).is_trivial();
        r.acd = quotient;
        r.bound = whole;
        r.below_bound = quotient < whole;
        r.hypotheses = whole <= Rational(2);
        const bool violated = (r.hypotheses && quotient > whole) || (splits && quotient != whole);
        if (violated)
          r.verdict = Verdict::Counterexample;
        else if (r.hypotheses && quotient == whole)
          r.verdict = Verdict::SharpBoundary;
        r.note = "K=minnormal:" + std::to_string(i) + " |K|=" + std::to_string(kn.order()) +
                 (splits ? " K&A^k=1" : " K<=A^k");
        out.push_back(std::move(r));
      }
    }
  }
}

struct ComplementInfo {
  FiniteGroup h;
  CharacterTable table;
};

ComplementInfo complement_info(GroupContext& c) {
  FiniteGroup h = as_group(c.group, c.affine()->complement);
  CharacterTable t = character_table(h);
  return {std::move(h), std::move(t)};
}

void audit_abelian(GroupContext& c, std::vector<AuditRow>& out) {
  const auto& aff = c.affine();
  if (!aff || aff->complement.is_trivial()) return;
  const ComplementInfo hi = complement_info(c);
  if (!is_abelian(hi.h)) return;
  const std::uint64_t p = aff->p, a = aff->a, d = hi.h.order(), q = aff->module.order();
  std::vector<FieldSpec> fields;
  for (auto m : divisors(d)) fields.push_back(FieldSpec::cyclotomic(p * m));
  fields.push_back(FieldSpec::complexes());
  for (const auto& k : dedupe(fields)) {
    const std::uint64_t index = d / a_k_subgroup(hi.table, k).order();
    const Rational formula = abelian3_formula(p, a, d, index);
    const Rational filtered = c.acd_of(k, p);
    const Rational all = c.acd_of(k, std::nullopt);
    const long ql = static_cast<long>(q);
    std::optional<Rational> exception;
    if (d == 2)
      exception = Rational(2 * (ql + 1), ql + 3);
    else if (d == 3 && index == 3 && q < 10)
      exception = Rational(3 * (ql + 2), ql + 8);
    else if (d == q - 1 && index == d)
      exception = Rational(2 * (ql - 1), ql);

    AuditRow r = base_row(c, "abelian-3", "abelian-3", p, k);
    r.acd = filtered;
    r.bound = exception.value_or(Rational(2));
    r.below_bound = r.acd < r.bound;
    r.hypotheses = true;
    const bool violated = filtered != formula || filtered != all || (exception && filtered != *exception) ||
                          (!exception && filtered < Rational(2));
    if (violated)
      r.verdict = Verdict::Counterexample;
    else if (r.acd == r.bound && !r.p_nilpotent)
      r.verdict = Verdict::SharpBoundary;
    r.note = "|H|=" + std::to_string(d) + " index=" + std::to_string(index) + " formula=" + formula.to_string() +
             (exception ? " exception" : "");
    out.push_back(std::move(r));

    AuditRow r4 = base_row(c, "abelian-3", "abelian-4", p, k);
    r4.acd = all;
    r4.bound = f_bound(p);
    r4.below_bound = all < r4.bound;
    r4.hypotheses = true;
    if (r4.below_bound)
      r4.verdict = Verdict::Counterexample;
    else if (all == r4.bound && !r4.p_nilpotent)
      r4.verdict = Verdict::SharpBoundary;
    out.push_back(std::move(r4));
  }
}

void audit_nonabelian(GroupContext& c, std::vector<AuditRow>& out) {
  const auto& aff = c.affine();
  if (!aff || aff->complement.is_trivial()) return;
  const ComplementInfo hi = complement_info(c);
  if (is_abelian(hi.h)) return;
  const std::uint64_t p = aff->p;
  std::vector<FieldSpec> fields;
  for (auto m : divisors(exponent(hi.h))) fields.push_back(FieldSpec::cyclotomic(p * m));
  fields.push_back(FieldSpec::complexes());
  for (const auto& k : dedupe(fields)) {
    AuditRow r = base_row(c, "nonabelian-3", "nonabelian-3", p, k);
    r.acd = c.acd_of(k, p);
    r.bound = Rational(2);
    r.below_bound = r.acd < r.bound;
    r.hypotheses = true;
    if (r.below_bound)
      r.verdict = Verdict::Counterexample;
    else if (r.acd == r.bound && !r.p_nilpotent)
      r.verdict = Verdict::SharpBoundary;
    r.note = "|H|=" + std::to_string(hi.h.order()) + " |V|=" + std::to_string(aff->module.order());
    out.push_back(std::move(r));
  }
}

void audit_one(const std::string& name, GroupContext& c, std::vector<AuditRow>& out) {
  if (name == "first") return audit_first(c, out);
  if (name == "second") return audit_second(c, out);
  if (name == "third") return audit_third(c, out);
  if (name == "fourth") return audit_fourth(c, out);
  if (name.rfind("main-", 0) == 0) return audit_main(name.back() - '0', c, out);
  if (name == "acd-cent-k") return audit_cent(c, out);
  if (name == "abelian-3") return audit_abelian(c, out);
  if (name == "nonabelian-3") return audit_nonabelian(c, out);
  throw InputError("unknown theorem '" + name + "'");
}

}  // namespace

std::string verdict_text(Verdict v) {
  switch (v) {
    case Verdict::Consistent:
      return "consistent";
    case Verdict::SharpBoundary:
      return "sharp-boundary";
    case Verdict::Counterexample:
      return "COUNTEREXAMPLE";
  }
  return "?";
}

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names{"first",  "second", "third",  "fourth",     "main-1",
                                              "main-2", "main-3", "main-4", "main-5",     "acd-cent-k",
                                              "abelian-3", "nonabelian-3"};
  return names;
}

std::vector<AuditRow> audit_theorem(const std::string& name, const std::vector<GroupSpec>& catalog, unsigned jobs) {
  std::vector<std::string> theorems;
  if (name == "all") {
    theorems = theorem_names();
  } else {
    const auto& all = theorem_names();
    if (std::find(all.begin(), all.end(), name) == all.end()) throw InputError("unknown theorem '" + name + "'");
    theorems.push_back(name);
  }

  std::vector<std::vector<AuditRow>> per_group(catalog.size());
  std::vector<std::exception_ptr> errors(catalog.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < catalog.size(); i = next++) {
      try {
        GroupContext ctx(catalog[i]);
        for (const auto& t : theorems) audit_one(t, ctx, per_group[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(catalog.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<AuditRow> rows;
  for (auto& g : per_group)
    for (auto& r : g) rows.push_back(std::move(r));
  std::map<std::string, std::size_t> rank;
  for (std::size_t i = 0; i < theorems.size(); ++i) rank[theorems[i]] = i;
  std::stable_sort(rows.begin(), rows.end(), [&](const AuditRow& a, const AuditRow& b) {
    return std::tie(rank[a.theorem], a.spec, a.p, a.field, a.clause) <
           std::tie(rank[b.theorem], b.spec, b.p, b.field, b.clause);
  });
  return rows;
}

std::string row_to_json(const AuditRow& r) {
  nlohmann::ordered_json j;
  j["theorem"] = r.theorem;
  j["clause"] = r.clause;
  j["spec"] = r.spec;
  j["order"] = r.order;
  j["p"] = r.p;
  j["field"] = r.field;
  j["acd"] = r.acd.to_string();
  j["bound"] = r.bound.to_string();
  j["below_bound"] = r.below_bound;
  j["p_nilpotent"] = r.p_nilpotent;
  j["hypotheses"] = r.hypotheses;
  j["verdict"] = verdict_text(r.verdict);
  if (r.sharpness) j["sharpness"] = *r.sharpness;
  if (r.note) j["note"] = *r.note;
  return j.dump();
}

std::string rows_to_jsonl(const std::vector<AuditRow>& rows) {
  std::string out;
  for (const auto& r : rows) {
    out += row_to_json(r);
    out += '\n';
  }
  return out;
}

int audit_exit_code(const std::vector<AuditRow>& rows) {
  const bool bad = std::any_of(rows.begin(), rows.end(),
                               [](const AuditRow& r) { return r.verdict == Verdict::Counterexample; });
  return bad ? 2 : 0;
}

std::vector<GroupSpec> parse_catalog(std::istream& in) {
  std::vector<GroupSpec> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_group_spec(line));
    } catch (const std::exception& e) {
      throw InputError("catalog line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

namespace {

std::string degree_list(const CharacterTable& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.degrees.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t.degrees[i]);
  }
  return s + "]";
}

SubgroupHandle resolve_quotient(const FiniteGroup& g, const CharacterTable& t, const std::string& text) {
  if (text == "derived") return derived_subgroup(g);
  if (text == "center") return center(g);
  if (text == "trivial") return trivial_subgroup(g);
  if (text.rfind("minnormal:", 0) == 0) {
    const std::string idx = text.substr(10);
    if (idx.empty() || idx.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("minnormal:<index> needs a non-negative integer");
    const auto mins = minimal_normal_subgroups(g);
    const std::size_t i = std::stoul(idx);
    if (i >= mins.size())
      throw InputError("group has only " + std::to_string(mins.size()) + " minimal normal subgroups");
    return mins[i];
  }
  if (text.rfind("ak:", 0) == 0) return a_k_subgroup(t, parse_field_spec(text.substr(3)));
  if (text.rfind("ncl:", 0) == 0) {
    const Perm x = Perm::parse_cycles(g.degree(), text.substr(4));
    const auto idx = g.index_of(x);
    if (!idx) throw InputError("permutation " + x.to_cycle_string() + " is not in the group");
    const ElementIndex seed[] = {*idx};
    return normal_closure(g, seed);
  }
  throw InputError("unknown quotient '" + text + "' (derived, center, trivial, minnormal:i, ak:F, ncl:cycles)");
}

}  // namespace

std::string cmd_table(const std::string& spec_text, const std::string& format) {
  if (format != "json" && format != "degrees") throw InputError("unknown format '" + format + "'");
  const GroupSpec s = parse_group_spec(spec_text);
  const CharacterTable t = character_table(build(s));
  if (format == "degrees") return degree_list(t) + "\n";
  return table_to_json(t, to_string(s));
}

std::string cmd_stats(const std::string& spec_text, const std::string& field_text, std::optional<std::uint64_t> p,
                      const std::optional<std::string>& quotient) {
  const GroupSpec s = parse_group_spec(spec_text);
  const FieldSpec k = parse_field_spec(field_text);
  if (p && !is_prime(*p)) throw InputError(std::to_string(*p) + " is not prime");
  const FiniteGroup g = build(s);
  const CharacterTable t = character_table(g);
  AcdQuery q{k, p, std::nullopt};
  if (quotient) q.quotient_by = resolve_quotient(g, t, *quotient);
  const auto rows = acd_rows(t, q);

  std::ostringstream os;
  os << "group: " << to_string(s) << "\n";
  os << "order: " << g.order() << "\n";
  os << "classes: " << t.size() << "\n";
  os << "degrees: " << degree_list(t) << "\n";
  os << "field: " << k.to_string() << "\n";
  if (p) os << "p: " << *p << "\n";
  if (q.quotient_by) os << "quotient: " << *quotient << " (order " << q.quotient_by->order() << ")\n";
  os << "characters: " << rows.size() << "\n";
  os << "acd: " << acd(t, q).to_string() << "\n";
  if (p) os << "p_nilpotent: " << (is_p_nilpotent(g, *p).p_nilpotent ? "true" : "false") << "\n";
  os << "solvable: " << (is_solvable(g) ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace acdlab
