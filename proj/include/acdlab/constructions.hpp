#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "acdlab/group.hpp"

namespace acdlab {

struct GroupSpec;

namespace spec {

struct Cyclic {
  std::uint64_t n;
};
/// Dihedral group of the given order (2m).
struct Dihedral {
  std::uint64_t order;
};
struct Symmetric {
  std::uint64_t n;
};
struct Alternating {
  std::uint64_t n;
};
/// Dicyclic group of order 4m; Q(8) is the quaternion group.
struct Dicyclic {
  std::uint64_t order;
};
/// Additive group of F_{p^a} extended by the order-d subgroup of F_{p^a}^*.
struct FieldSemidirect {
  std::uint64_t p;
  std::uint64_t a;
  std::uint64_t d;
};
using Matrix = std::vector<std::vector<std::int64_t>>;
/// F_p^n extended by the matrix group generated by `matrices` (acting on row vectors).
struct MatrixSemidirect {
  std::uint64_t p;
  std::vector<Matrix> matrices;
};
struct DirectProduct {
  std::vector<GroupSpec> factors;
};

}  // namespace spec

struct GroupSpec {
  using Variant = std::variant<spec::Cyclic, spec::Dihedral, spec::Symmetric, spec::Alternating,
                               spec::Dicyclic, spec::FieldSemidirect, spec::MatrixSemidirect,
                               spec::DirectProduct>;
  Variant kind;

  static GroupSpec cyclic(std::uint64_t n) { return {spec::Cyclic{n}}; }
  static GroupSpec dihedral(std::uint64_t order) { return {spec::Dihedral{order}}; }
  static GroupSpec symmetric(std::uint64_t n) { return {spec::Symmetric{n}}; }
  static GroupSpec alternating(std::uint64_t n) { return {spec::Alternating{n}}; }
  static GroupSpec dicyclic(std::uint64_t order) { return {spec::Dicyclic{order}}; }
  static GroupSpec field_semidirect(std::uint64_t p, std::uint64_t a, std::uint64_t d) {
    return {spec::FieldSemidirect{p, a, d}};
  }
  static GroupSpec matrix_semidirect(std::uint64_t p, std::vector<spec::Matrix> ms) {
    return {spec::MatrixSemidirect{p, std::move(ms)}};
  }
  static GroupSpec direct_product(std::vector<GroupSpec> fs) { return {spec::DirectProduct{std::move(fs)}}; }
};

/// Canonical text in the spec grammar; parse_group_spec(to_string(s)) rebuilds s.
std::string to_string(const GroupSpec& s);
bool operator==(const GroupSpec& a, const GroupSpec& b);

/// Throws ConstructionError naming the first violated constraint.
void validate(const GroupSpec& s);

/// Validates, then builds the permutation group. Identical specs give identical element orders.
FiniteGroup build(const GroupSpec& s);

/// D_{2p} for an odd prime p; throws InputError otherwise.
FiniteGroup dihedral(std::uint64_t p);

/// The audit corpus, in a fixed order.
std::vector<GroupSpec> default_catalog();

/// Grammar (whitespace ignored):
///   spec   := factor ('*' factor)*
///   factor := C(n) | D(2m) | S(n) | A(n) | Q(4m) | F(p,d) | SD(p,a,d)
///           | MAT(p; matrix (',' matrix)*) | '(' spec ')'
///   matrix := '[' row (',' row)* ']'    row := '[' int (',' int)* ']'
/// Throws ParseError with the offending offset, or ConstructionError for a
/// well-formed spec with invalid parameters.
GroupSpec parse_group_spec(const std::string& text);

/// Multiplicative order of p modulo d (d >= 1; 1 when d == 1).
std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t d);

/// G = V H with V a minimal normal elementary abelian p-subgroup, H the stabilizer of
/// point 0 complementing V and acting faithfully (so V is an irreducible faithful H-module).
struct AffineStructure {
  std::uint64_t p = 0;
  std::uint64_t a = 0;
  SubgroupHandle module;
  SubgroupHandle complement;
};

/// Detects the structure above; nullopt when G is not of that shape.
std::optional<AffineStructure> affine_structure(const FiniteGroup& g);

}  // namespace acdlab
