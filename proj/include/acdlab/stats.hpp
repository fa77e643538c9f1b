#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "acdlab/fieldvals.hpp"
#include "acdlab/rational.hpp"

namespace acdlab {

/// Exact mean; throws DomainError on an empty list.
Rational ave(std::span<const Rational> values);

/// Which characters enter an average: values in `field`, degree prime to
/// `p_filter` when set, and kernel containing `quotient_by` when set (that is,
/// the characters of G/N viewed inside Irr(G)).
struct AcdQuery {
  FieldSpec field = FieldSpec::complexes();
  std::optional<std::uint64_t> p_filter;
  std::optional<SubgroupHandle> quotient_by;
};

/// Rows selected by q, ascending. Throws InputError if quotient_by is not normal.
std::vector<std::size_t> acd_rows(const CharacterTable& t, const AcdQuery& q);

/// Average degree over acd_rows(t, q). Never empty: the trivial character passes every filter.
Rational acd(const CharacterTable& t, const AcdQuery& q);

/// 2 (p^x + 1) / (p^x + 3) for integer x >= 1; throws DomainError for x < 1, InputError for p < 2.
Rational bound_f(std::uint64_t p, long x);

/// Average of the k-valued degrees of V H for H cyclic of order d acting
/// fixed-point-freely on V of order p^a, with |H : A^k(H)| == index:
///   d (index + p^a - 1) / (d index + p^a - 1).
/// Throws InputError unless d | p^a - 1 and index | d.
Rational abelian3_formula(std::uint64_t p, std::uint64_t a, std::uint64_t d, std::uint64_t index);

}  // namespace acdlab
