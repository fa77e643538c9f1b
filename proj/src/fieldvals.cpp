#include "acdlab/fieldvals.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "acdlab/errors.hpp"

namespace acdlab {

FieldSpec FieldSpec::cyclotomic(std::uint64_t m) {
  if (m == 0) throw InputError("Q(zeta_0) is not a field spec");
  if (m % 4 == 2) m /= 2;
  return FieldSpec(Kind::Cyclotomic, m);
}

bool FieldSpec::contains_roots_of_unity(std::uint64_t n) const {
  switch (kind_) {
    case Kind::Complexes:
      return true;
    case Kind::Reals:
      return n <= 2;
    case Kind::Cyclotomic:
      // roots of unity in Q(zeta_m) are the lcm(2, m)-th ones
      return std::lcm<std::uint64_t>(2, m_) % n == 0;
  }
  return false;
}

std::string FieldSpec::to_string() const {
  switch (kind_) {
    case Kind::Complexes:
      return "C";
    case Kind::Reals:
      return "R";
    case Kind::Cyclotomic:
      if (m_ == 1) return "Q";
      if (m_ > 2 && is_prime(m_)) return "Qp(" + std::to_string(m_) + ")";
      return "Q(zeta_" + std::to_string(m_) + ")";
  }
  return "?";
}

FieldSpec parse_field_spec(const std::string& raw) {
  std::string text;
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (!std::isspace(static_cast<unsigned char>(raw[i]))) {
      text.push_back(raw[i]);
      pos.push_back(i);
    }
  auto at = [&](std::size_t i) { return i < pos.size() ? pos[i] : raw.size(); };
  if (text == "Q") return FieldSpec::rationals();
  if (text == "R") return FieldSpec::reals();
  if (text == "C") return FieldSpec::complexes();

  auto number = [&](std::size_t start, std::size_t& end) {
    end = start;
    std::uint64_t v = 0;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[end] - '0');
      if (v > (std::uint64_t{1} << 40)) throw ParseError("number too large", at(start));
      ++end;
    }
    if (end == start) throw ParseError("expected a positive integer", at(start));
    if (end >= text.size() || text[end] != ')') throw ParseError("expected ')'", at(end));
    if (end + 1 != text.size()) throw ParseError("trailing characters", at(end + 1));
    return v;
  };

  std::size_t end = 0;
  if (text.rfind("Qp(", 0) == 0) {
    const std::uint64_t p = number(3, end);
    if (!is_prime(p)) throw ParseError("Qp argument must be prime", at(3));
    return FieldSpec::qp(p);
  }
  if (text.rfind("Q(zeta_", 0) == 0) {
    const std::uint64_t m = number(7, end);
    if (m == 0) throw ParseError("zeta index must be positive", at(7));
    return FieldSpec::cyclotomic(m);
  }
  throw ParseError("unknown field spec '" + raw + "'", at(0));
}

bool has_values_in(const CharacterTable& t, std::size_t row, const FieldSpec& k) {
  if (row >= t.size()) throw InputError("character index out of range");
  switch (k.kind()) {
    case FieldSpec::Kind::Complexes:
      return true;
    case FieldSpec::Kind::Reals:
      return galois_conjugate(t, row, -1) == row;
    case FieldSpec::Kind::Cyclotomic:
      // fixed by every sigma_t with t = 1 (mod gcd(m, e)); generators suffice
      for (std::int64_t u : unit_subgroup_generators(t.exponent, k.m()))
        if (galois_conjugate(t, row, u) != row) return false;
      return true;
  }
  return false;
}

std::vector<std::size_t> irr_subset(const CharacterTable& t, const FieldSpec& k,
                                    std::optional<std::uint64_t> p) {
  if (p && !is_prime(*p)) throw InputError(std::to_string(*p) + " is not prime");
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (p && t.degrees[r] % *p == 0) continue;
    if (has_values_in(t, r, k)) out.push_back(r);
  }
  return out;
}

SubgroupHandle a_k_subgroup(const CharacterTable& t, const FieldSpec& k) {
  const std::size_t r = t.classes.num_classes;
  std::vector<bool> keep(r, true);
  for (std::size_t row = 0; row < t.size(); ++row) {
    if (!t.is_linear(row) || !has_values_in(t, row, k)) continue;
    for (std::size_t c = 0; c < r; ++c) {
      const auto v = t.rows[row][c].to_rational();
      if (!v || *v != Rational(1)) keep[c] = false;
    }
  }
  std::vector<ElementIndex> members;
  for (std::size_t c = 0; c < r; ++c)
    if (keep[c]) members.insert(members.end(), t.classes.members[c].begin(), t.classes.members[c].end());
  return subgroup_from_members(t.group, std::move(members));
}

}  // namespace acdlab
