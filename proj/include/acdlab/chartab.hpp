#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "acdlab/cyclotomic.hpp"
#include "acdlab/group.hpp"
#include "acdlab/modp.hpp"

namespace acdlab {

/// Irreducible characters of a finite group. Row 0 is the trivial character; the
/// remaining rows are sorted by degree, then lexicographically on canonical values.
/// The value at class c is stored over conductor rep_orders[c].
struct CharacterTable {
  FiniteGroup group;
  ClassData classes;
  std::uint64_t exponent = 1;
  std::vector<std::vector<CyclotomicValue>> rows;
  std::vector<std::uint64_t> degrees;

  std::size_t size() const { return rows.size(); }
  const CyclotomicValue& value(std::size_t row, std::size_t cls) const { return rows[row][cls]; }
  bool is_linear(std::size_t row) const { return degrees[row] == 1; }
  /// Index of the row equal to values, if any.
  std::optional<std::size_t> find_row(const std::vector<CyclotomicValue>& values) const;
};

/// Modular image of the table used by Dixon's method.
struct ModTable {
  std::uint64_t q = 0;
  /// Primitive exponent-th root of unity mod q that zeta_e is sent to.
  modp::Elem omega = 0;
  /// central[chi][c] = |C_c| chi(g_c) / chi(1) mod q
  std::vector<std::vector<modp::Elem>> central;
  /// values[chi][c] = chi(g_c) mod q
  std::vector<std::vector<modp::Elem>> values;
  std::vector<std::uint64_t> degrees;
};

/// Smallest prime q with q = 1 (mod e) and q > 2 sqrt(order).
std::uint64_t choose_conductor_prime(std::uint64_t e, std::uint64_t order);

/// Class multiplication coefficients: a[i][j][k] = #{(x, y) in C_i x C_j : x y = z}
/// for a fixed z in C_k. Cubic in the class count; intended for small groups and tests.
std::vector<std::vector<std::vector<std::uint64_t>>> class_coefficients(const FiniteGroup& g,
                                                                        const ClassData& c);
/// The single slice M[j][k] = a[i][j][k], reduced mod q.
modp::Mat class_matrix(const FiniteGroup& g, const ClassData& c, std::size_t i, const modp::Field& f);

/// Central characters from simultaneous eigenvectors of the class matrices over F_q,
/// then degrees and modular character values. Rows in discovery order.
ModTable modular_table(const FiniteGroup& g, const ClassData& c);

CharacterTable character_table(const FiniteGroup& g);
CharacterTable character_table(const FiniteGroup& g, const ClassData& c);

struct OrthogonalityFailure {
  enum class Kind { Shape, Integrality, Row, Column };
  Kind kind;
  std::size_t first;
  std::size_t second;
  std::string detail;
};

struct OrthogonalityReport {
  bool ok = true;
  std::vector<OrthogonalityFailure> failures;
};

/// Exact first and second orthogonality relations over every pair of rows and of
/// columns. Values must be algebraic integers in canonical form (integral
/// coefficients); anything else is reported as an Integrality failure.
OrthogonalityReport verify_orthogonality(const CharacterTable& t);

/// {g : chi(g) == chi(1)}
SubgroupHandle character_kernel(const CharacterTable& t, std::size_t row);

/// Row whose values are those of `row` with zeta_e -> zeta_e^k.
/// Throws InputError unless gcd(k, exponent) == 1.
std::size_t galois_conjugate(const CharacterTable& t, std::size_t row, std::int64_t k);

/// Units mod e congruent to 1 mod `modulus` (a subgroup of (Z/e)^*), given by a small
/// generating set. modulus == 1 gives generators of the whole unit group.
std::vector<std::int64_t> unit_subgroup_generators(std::uint64_t e, std::uint64_t modulus);

/// Versioned JSON serialization; byte-stable for a given group.
std::string table_to_json(const CharacterTable& t, const std::string& spec_text);

}  // namespace acdlab
