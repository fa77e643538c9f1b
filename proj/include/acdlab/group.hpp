#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace acdlab {

using Point = std::uint16_t;
using ElementIndex = std::uint32_t;

/// A permutation of {0, ..., degree-1}, stored as its image list.
/// Products compose left to right: (a * b)[i] == b[a[i]].
class Perm {
 public:
  Perm() = default;
  /// Throws InputError unless images is a bijection on {0..size-1}.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);
  /// Cycle notation over 0-based points, e.g. {{0,1},{2,3}}.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles);
  /// Parses "(0 1)(2 3)" or "(0,1)(2,3)"; "()" is the identity.
  static Perm parse_cycles(std::size_t degree, const std::string& text);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;
  /// lcm of the cycle lengths.
  std::uint64_t order() const;
  std::string to_cycle_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

/// Closure order cap: $ACDLAB_ORDER_CAP when set, else 20000.
std::size_t default_order_cap();

/// A fully enumerated permutation group. Immutable and cheap to copy
/// (copies share the element store).
class FiniteGroup {
 public:
  FiniteGroup();

  std::size_t order() const;
  std::size_t degree() const;
  /// Element 0 is always the identity.
  static constexpr ElementIndex identity() { return 0; }
  const Perm& element(ElementIndex i) const;
  const std::vector<Perm>& elements() const;
  /// Generator element indices, in the canonical (sorted, deduplicated) order.
  const std::vector<ElementIndex>& generators() const;

  ElementIndex mul(ElementIndex a, ElementIndex b) const;
  ElementIndex inv(ElementIndex a) const;
  ElementIndex pow(ElementIndex a, long long k) const;
  /// b^-1 a b
  ElementIndex conj(ElementIndex a, ElementIndex b) const;
  std::optional<ElementIndex> index_of(const Perm& p) const;
  std::uint64_t element_order(ElementIndex a) const;
  /// Shortest-path word in generator positions reaching element i from the identity.
  std::vector<std::size_t> word(ElementIndex i) const;

  /// Process-unique token used to tie subgroup handles to their parent.
  std::uint64_t id() const;

  friend FiniteGroup generate_group(const std::vector<Perm>& gens, std::size_t degree,
                                    std::size_t cap);

 private:
  struct Data;
  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// Breadth-first closure of gens (sorted first). degree == 0 infers it from
/// the generators (1 for an empty list).
/// Throws InputError on degree mismatch, SizeLimitError past the cap.
FiniteGroup generate_group(const std::vector<Perm>& gens, std::size_t degree = 0,
                           std::size_t cap = default_order_cap());

/// A subgroup as a sorted set of element indices inside a parent group.
struct SubgroupHandle {
  std::uint64_t parent_id = 0;
  std::vector<ElementIndex> members;
  /// A small generating set (not canonical).
  std::vector<ElementIndex> generators;

  std::size_t order() const { return members.size(); }
  bool contains(ElementIndex i) const;
  bool is_trivial() const { return members.size() == 1; }

  friend bool operator==(const SubgroupHandle& a, const SubgroupHandle& b) {
    return a.parent_id == b.parent_id && a.members == b.members;
  }
};

struct ClassData {
  std::vector<ElementIndex> reps;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> class_of;
  std::size_t num_classes = 0;
  /// Element order of each representative.
  std::vector<std::uint64_t> rep_orders;
  /// Class of the inverse of each representative.
  std::vector<std::size_t> inverse_class;
  /// Members of each class, ascending.
  std::vector<std::vector<ElementIndex>> members;
};

std::uint64_t element_order(const FiniteGroup& g, ElementIndex a);
/// lcm of all element orders.
std::uint64_t exponent(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);

/// Identity class first, then classes in order of their minimal element index.
ClassData conjugacy_classes(const FiniteGroup& g);
/// class(g) -> class(g^k); k may be negative.
std::vector<std::size_t> power_map(const FiniteGroup& g, const ClassData& c, long long k);

SubgroupHandle whole_group(const FiniteGroup& g);
SubgroupHandle trivial_subgroup(const FiniteGroup& g);
SubgroupHandle subgroup_generated(const FiniteGroup& g, std::span<const ElementIndex> seed);
/// Wraps a member set already known to be a subgroup; throws InputError otherwise.
SubgroupHandle subgroup_from_members(const FiniteGroup& g, std::vector<ElementIndex> members);

SubgroupHandle derived_subgroup(const FiniteGroup& g);
/// Commutator subgroup of a subgroup h.
SubgroupHandle derived_subgroup(const FiniteGroup& g, const SubgroupHandle& h);
bool is_solvable(const FiniteGroup& g);
SubgroupHandle normal_closure(const FiniteGroup& g, std::span<const ElementIndex> seed);
/// Throws DomainError on the trivial group. Sorted by order, then members.
std::vector<SubgroupHandle> minimal_normal_subgroups(const FiniteGroup& g);
/// Throws InputError when the handles belong to different parents.
SubgroupHandle subgroup_intersection(const SubgroupHandle& a, const SubgroupHandle& b);
bool is_normal(const FiniteGroup& g, const SubgroupHandle& h);
bool is_subset(const SubgroupHandle& a, const SubgroupHandle& b);
SubgroupHandle center(const FiniteGroup& g);
SubgroupHandle point_stabilizer(const FiniteGroup& g, Point point);
/// The subgroup as a standalone permutation group on the same points.
FiniteGroup as_group(const FiniteGroup& g, const SubgroupHandle& h);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

struct PNilpotence {
  bool p_nilpotent = false;
  /// The normal p-complement when p_nilpotent.
  std::optional<SubgroupHandle> complement;
};

/// Normal p-complement test via the set of p'-elements: G is p-nilpotent iff
/// that set has the p'-part of |G| as its size and is closed under products.
/// Throws InputError when p is not prime.
PNilpotence is_p_nilpotent(const FiniteGroup& g, std::uint64_t p);

}  // namespace acdlab
