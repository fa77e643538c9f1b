#include "acdlab/stats.hpp"

#include <string>

#include "acdlab/errors.hpp"

namespace acdlab {

Rational ave(std::span<const Rational> values) {
  if (values.empty()) throw DomainError("average of an empty list");
  Rational sum;
  for (const auto& v : values) sum += v;
  return sum / Rational(static_cast<long>(values.size()));
}

std::vector<std::size_t> acd_rows(const CharacterTable& t, const AcdQuery& q) {
  std::vector<std::size_t> classes_in_n;
  if (q.quotient_by) {
    if (!is_normal(t.group, *q.quotient_by)) throw InputError("quotient subgroup is not normal");
    for (std::size_t c = 0; c < t.classes.num_classes; ++c)
      if (q.quotient_by->contains(t.classes.reps[c])) classes_in_n.push_back(c);
  }
  std::vector<std::size_t> out;
  for (std::size_t row : irr_subset(t, q.field, q.p_filter)) {
    const Rational deg(static_cast<long>(t.degrees[row]));
    bool in_kernel = true;
    for (std::size_t c : classes_in_n) {
      const auto v = t.rows[row][c].to_rational();
      if (!v || *v != deg) {
        in_kernel = false;
        break;
      }
    }
    if (in_kernel) out.push_back(row);
  }
  return out;
}

Rational acd(const CharacterTable& t, const AcdQuery& q) {
  std::vector<Rational> degs;
  for (std::size_t row : acd_rows(t, q)) degs.emplace_back(static_cast<long>(t.degrees[row]));
  return ave(degs);
}

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) {
    if (r > (std::uint64_t{1} << 62) / b) throw InputError("prime power too large");
    r *= b;
  }
  return r;
}

}  // namespace

Rational bound_f(std::uint64_t p, long x) {
  if (p < 2) throw InputError("bound_f needs p >= 2");
  if (x < 1) throw DomainError("bound_f needs an exponent x >= 1");
  mpz_class px;
  mpz_ui_pow_ui(px.get_mpz_t(), p, static_cast<unsigned long>(x));
  return Rational(mpq_class(2 * (px + 1), px + 3));
}

Rational abelian3_formula(std::uint64_t p, std::uint64_t a, std::uint64_t d, std::uint64_t index) {
  if (p < 2 || a < 1 || d < 1 || index < 1) throw InputError("abelian3_formula parameters must be positive");
  const std::uint64_t v = ipow(p, a);
  if ((v - 1) % d != 0) throw InputError("d must divide p^a - 1");
  if (d % index != 0) throw InputError("index must divide d");
  const auto num = static_cast<long>(d * (index + v - 1));
  const auto den = static_cast<long>(d * index + v - 1);
  return Rational(num, den);
}

}  // namespace acdlab
