#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acdlab/chartab.hpp"

namespace acdlab {

/// An abelian subfield of C: Q(zeta_m), the reals, or C itself.
class FieldSpec {
 public:
  enum class Kind { Cyclotomic, Reals, Complexes };

  /// Q(zeta_m); m = 2 (mod 4) is normalized to m/2, so Cyclotomic(2) == Q.
  static FieldSpec cyclotomic(std::uint64_t m);
  static FieldSpec rationals() { return cyclotomic(1); }
  /// Q adjoined a primitive p-th root of unity.
  static FieldSpec qp(std::uint64_t p) { return cyclotomic(p); }
  static FieldSpec reals() { return FieldSpec(Kind::Reals, 0); }
  static FieldSpec complexes() { return FieldSpec(Kind::Complexes, 0); }

  Kind kind() const { return kind_; }
  /// Only meaningful for Cyclotomic.
  std::uint64_t m() const { return m_; }

  /// Whether the field contains a primitive n-th root of unity.
  bool contains_roots_of_unity(std::uint64_t n) const;

  /// CLI text: Q, R, C, Qp(p) for odd primes, Q(zeta_m) otherwise.
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind k, std::uint64_t m) : kind_(k), m_(m) {}
  Kind kind_;
  std::uint64_t m_;
};

/// Accepts Q, R, C, Qp(p), Q(zeta_m); whitespace ignored. Throws ParseError.
FieldSpec parse_field_spec(const std::string& text);

bool has_values_in(const CharacterTable& t, std::size_t row, const FieldSpec& k);

/// Rows with values in k (and degree prime to p when p is given), ascending.
std::vector<std::size_t> irr_subset(const CharacterTable& t, const FieldSpec& k,
                                    std::optional<std::uint64_t> p = std::nullopt);

/// Intersection of the kernels of the linear characters with values in k.
SubgroupHandle a_k_subgroup(const CharacterTable& t, const FieldSpec& k);

}  // namespace acdlab
