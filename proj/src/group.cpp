#include "acdlab/group.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>

#include "acdlab/errors.hpp"

namespace acdlab {

// ---------------------------------------------------------------- Perm

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw InputError("permutation images are not a bijection");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  Perm p;
  p.images_ = std::move(im);
  return p;
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const std::size_t from = cyc[i];
      const std::size_t to = cyc[(i + 1) % cyc.size()];
      if (from >= degree || to >= degree) throw InputError("cycle point out of range");
      if (used[from]) throw InputError("point repeated in cycle notation");
      used[from] = true;
      im[from] = static_cast<Point>(to);
    }
  }
  return Perm(std::move(im));
}

Perm Perm::parse_cycles(std::size_t degree, const std::string& text) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation", i);
    ++i;
    std::vector<std::size_t> cyc;
    for (;;) {
      skip();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("expected point number in cycle notation", i);
      }
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        ++i;
      }
      cyc.push_back(v);
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip();
  }
  return from_cycles(degree, cycles);
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw InputError("permutation degree mismatch");
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::uint64_t Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out << '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      if (j != i) out << ',';
      out << j;
      seen[j] = true;
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "()" : s;
}

// ---------------------------------------------------------------- FiniteGroup

std::size_t default_order_cap() {
  if (const char* env = std::getenv("ACDLAB_ORDER_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 20000;
}

namespace {

std::atomic<std::uint64_t> next_group_id{1};

std::uint64_t hash_points(const Point* p, std::size_t n) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ n;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return h;
}

constexpr ElementIndex kEmpty = ~ElementIndex{0};

}  // namespace

struct FiniteGroup::Data {
  std::size_t degree = 1;
  std::vector<Perm> elements;
  std::vector<ElementIndex> generators;
  std::vector<ElementIndex> inverses;
  std::vector<std::uint64_t> orders;
  std::vector<ElementIndex> parent;
  std::vector<std::uint32_t> parent_gen;
  std::vector<ElementIndex> slots;
  std::uint64_t id = 0;

  std::optional<ElementIndex> find(const Point* p) const {
    const std::size_t mask = slots.size() - 1;
    for (std::size_t s = hash_points(p, degree) & mask;; s = (s + 1) & mask) {
      const ElementIndex e = slots[s];
      if (e == kEmpty) return std::nullopt;
      if (std::equal(p, p + degree, elements[e].images().data())) return e;
    }
  }

  void insert_slot(ElementIndex e) {
    const std::size_t mask = slots.size() - 1;
    std::size_t s = hash_points(elements[e].images().data(), degree) & mask;
    while (slots[s] != kEmpty) s = (s + 1) & mask;
    slots[s] = e;
  }

  void add(Perm p) {
    elements.push_back(std::move(p));
    if (elements.size() * 2 > slots.size()) {
      slots.assign(slots.size() * 2, kEmpty);
      for (ElementIndex e = 0; e < elements.size(); ++e) insert_slot(e);
    } else {
      insert_slot(static_cast<ElementIndex>(elements.size() - 1));
    }
  }
};

FiniteGroup::FiniteGroup() : FiniteGroup(generate_group({}, 1)) {}

std::size_t FiniteGroup::order() const { return data_->elements.size(); }
std::size_t FiniteGroup::degree() const { return data_->degree; }
const Perm& FiniteGroup::element(ElementIndex i) const { return data_->elements.at(i); }
const std::vector<Perm>& FiniteGroup::elements() const { return data_->elements; }
const std::vector<ElementIndex>& FiniteGroup::generators() const { return data_->generators; }
ElementIndex FiniteGroup::inv(ElementIndex a) const { return data_->inverses[a]; }
std::uint64_t FiniteGroup::element_order(ElementIndex a) const { return data_->orders[a]; }
std::uint64_t FiniteGroup::id() const { return data_->id; }

ElementIndex FiniteGroup::mul(ElementIndex a, ElementIndex b) const {
  thread_local std::vector<Point> buf;
  const auto& x = data_->elements[a].images();
  const auto& y = data_->elements[b].images();
  buf.resize(data_->degree);
  for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = y[x[i]];
  return *data_->find(buf.data());
}

ElementIndex FiniteGroup::pow(ElementIndex a, long long k) const {
  const auto n = static_cast<long long>(data_->orders[a]);
  k %= n;
  if (k < 0) k += n;
  ElementIndex result = identity();
  ElementIndex base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

ElementIndex FiniteGroup::conj(ElementIndex a, ElementIndex b) const {
  return mul(mul(inv(b), a), b);
}

std::optional<ElementIndex> FiniteGroup::index_of(const Perm& p) const {
  if (p.degree() != data_->degree) return std::nullopt;
  return data_->find(p.images().data());
}

std::vector<std::size_t> FiniteGroup::word(ElementIndex i) const {
  std::vector<std::size_t> w;
  while (i != identity()) {
    w.push_back(data_->parent_gen[i]);
    i = data_->parent[i];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

FiniteGroup generate_group(const std::vector<Perm>& gens, std::size_t degree, std::size_t cap) {
  if (degree == 0) degree = gens.empty() ? 1 : gens.front().degree();
  if (degree > 0xffff) throw InputError("permutation degree too large");
  std::vector<Perm> sorted;
  for (const Perm& g : gens) {
    if (g.degree() != degree) throw InputError("generators do not share one degree");
    if (!g.is_identity()) sorted.push_back(g);
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  auto data = std::make_shared<FiniteGroup::Data>();
  data->degree = degree;
  data->id = next_group_id.fetch_add(1);
  data->slots.assign(16, kEmpty);
  data->add(Perm::identity(degree));
  data->parent.push_back(0);
  data->parent_gen.push_back(0);

  std::vector<Point> buf(degree);
  for (std::size_t i = 0; i < data->elements.size(); ++i) {
    for (std::uint32_t s = 0; s < sorted.size(); ++s) {
      const auto& x = data->elements[i].images();
      const auto& y = sorted[s].images();
      for (std::size_t j = 0; j < degree; ++j) buf[j] = y[x[j]];
      if (data->find(buf.data())) continue;
      if (data->elements.size() >= cap) {
        throw SizeLimitError("group order exceeds cap of " + std::to_string(cap));
      }
      Perm p;
      p = Perm(buf);
      data->add(std::move(p));
      data->parent.push_back(static_cast<ElementIndex>(i));
      data->parent_gen.push_back(s);
    }
  }

  const std::size_t n = data->elements.size();
  data->inverses.resize(n);
  data->orders.resize(n);
  for (ElementIndex i = 0; i < n; ++i) {
    const Perm inv = data->elements[i].inverse();
    data->inverses[i] = *data->find(inv.images().data());
    data->orders[i] = data->elements[i].order();
  }
  for (const Perm& g : sorted) data->generators.push_back(*data->find(g.images().data()));

  return FiniteGroup(std::shared_ptr<const FiniteGroup::Data>(std::move(data)));
}

// ---------------------------------------------------------------- structure

std::uint64_t element_order(const FiniteGroup& g, ElementIndex a) { return g.element_order(a); }

std::uint64_t exponent(const FiniteGroup& g) {
  std::uint64_t e = 1;
  for (ElementIndex i = 0; i < g.order(); ++i) e = std::lcm(e, g.element_order(i));
  return e;
}

bool is_abelian(const FiniteGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

ClassData conjugacy_classes(const FiniteGroup& g) {
  ClassData c;
  constexpr std::size_t kNone = ~std::size_t{0};
  c.class_of.assign(g.order(), kNone);
  const auto& gens = g.generators();
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (c.class_of[x] != kNone) continue;
    const std::size_t id = c.num_classes++;
    std::vector<ElementIndex> orbit{x};
    c.class_of[x] = id;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (ElementIndex s : gens) {
        const ElementIndex y = g.conj(orbit[k], s);
        if (c.class_of[y] == kNone) {
          c.class_of[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    c.reps.push_back(x);
    c.sizes.push_back(orbit.size());
    c.rep_orders.push_back(g.element_order(x));
    c.members.push_back(std::move(orbit));
  }
  c.inverse_class.resize(c.num_classes);
  for (std::size_t k = 0; k < c.num_classes; ++k) c.inverse_class[k] = c.class_of[g.inv(c.reps[k])];
  return c;
}

std::vector<std::size_t> power_map(const FiniteGroup& g, const ClassData& c, long long k) {
  std::vector<std::size_t> out(c.num_classes);
  for (std::size_t i = 0; i < c.num_classes; ++i) out[i] = c.class_of[g.pow(c.reps[i], k)];
  return out;
}

bool SubgroupHandle::contains(ElementIndex i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

namespace {

/// Closure of gens as a membership bitmap plus member list (BFS by right multiplication).
struct Closure {
  std::vector<char> in;
  std::vector<ElementIndex> list;
};

Closure close(const FiniteGroup& g, const std::vector<ElementIndex>& gens) {
  Closure c;
  c.in.assign(g.order(), 0);
  c.in[FiniteGroup::identity()] = 1;
  c.list.push_back(FiniteGroup::identity());
  for (std::size_t i = 0; i < c.list.size(); ++i) {
    for (ElementIndex s : gens) {
      const ElementIndex y = g.mul(c.list[i], s);
      if (!c.in[y]) {
        c.in[y] = 1;
        c.list.push_back(y);
      }
    }
  }
  return c;
}

SubgroupHandle to_handle(const FiniteGroup& g, Closure c, std::vector<ElementIndex> gens) {
  SubgroupHandle h;
  h.parent_id = g.id();
  h.members = std::move(c.list);
  std::sort(h.members.begin(), h.members.end());
  h.generators = std::move(gens);
  return h;
}

/// Smallest subgroup containing seed and normalized by every element of ambient.
SubgroupHandle normal_closure_under(const FiniteGroup& g, const std::vector<ElementIndex>& ambient,
                                    std::span<const ElementIndex> seed) {
  std::vector<ElementIndex> gens;
  Closure cl = close(g, gens);
  std::deque<ElementIndex> work(seed.begin(), seed.end());
  while (!work.empty()) {
    const ElementIndex x = work.front();
    work.pop_front();
    if (cl.in[x]) continue;
    gens.push_back(x);
    cl = close(g, gens);
    // every conjugate of a generator must stay inside
    for (ElementIndex s : gens)
      for (ElementIndex a : ambient) {
        const ElementIndex y = g.conj(s, a);
        if (!cl.in[y]) work.push_back(y);
      }
  }
  return to_handle(g, std::move(cl), std::move(gens));
}

}  // namespace

SubgroupHandle whole_group(const FiniteGroup& g) {
  return subgroup_generated(g, g.generators());
}

SubgroupHandle trivial_subgroup(const FiniteGroup& g) {
  SubgroupHandle h;
  h.parent_id = g.id();
  h.members = {FiniteGroup::identity()};
  return h;
}

SubgroupHandle subgroup_generated(const FiniteGroup& g, std::span<const ElementIndex> seed) {
  std::vector<ElementIndex> gens;
  Closure cl = close(g, gens);
  for (ElementIndex x : seed) {
    if (x >= g.order()) throw InputError("element index out of range");
    if (cl.in[x]) continue;
    gens.push_back(x);
    cl = close(g, gens);
  }
  return to_handle(g, std::move(cl), std::move(gens));
}

SubgroupHandle subgroup_from_members(const FiniteGroup& g, std::vector<ElementIndex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  SubgroupHandle h = subgroup_generated(g, members);
  if (h.members != members) throw InputError("member set is not a subgroup");
  return h;
}

SubgroupHandle derived_subgroup(const FiniteGroup& g, const SubgroupHandle& h) {
  std::vector<ElementIndex> comms;
  for (std::size_t i = 0; i < h.generators.size(); ++i)
    for (std::size_t j = i + 1; j < h.generators.size(); ++j) {
      const ElementIndex a = h.generators[i], b = h.generators[j];
      comms.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    }
  return normal_closure_under(g, h.generators, comms);
}

SubgroupHandle derived_subgroup(const FiniteGroup& g) { return derived_subgroup(g, whole_group(g)); }

bool is_solvable(const FiniteGroup& g) {
  SubgroupHandle h = whole_group(g);
  while (!h.is_trivial()) {
    SubgroupHandle d = derived_subgroup(g, h);
    if (d.order() == h.order()) return false;
    h = std::move(d);
  }
  return true;
}

SubgroupHandle normal_closure(const FiniteGroup& g, std::span<const ElementIndex> seed) {
  return normal_closure_under(g, g.generators(), seed);
}

bool is_subset(const SubgroupHandle& a, const SubgroupHandle& b) {
  return std::includes(b.members.begin(), b.members.end(), a.members.begin(), a.members.end());
}

std::vector<SubgroupHandle> minimal_normal_subgroups(const FiniteGroup& g) {
  if (g.order() == 1) throw DomainError("the trivial group has no minimal normal subgroups");
  const ClassData c = conjugacy_classes(g);
  std::vector<SubgroupHandle> cands;
  for (std::size_t k = 1; k < c.num_classes; ++k) {
    const ElementIndex rep = c.reps[k];
    SubgroupHandle n = normal_closure(g, std::span<const ElementIndex>(&rep, 1));
    if (std::find(cands.begin(), cands.end(), n) == cands.end()) cands.push_back(std::move(n));
  }
  std::vector<SubgroupHandle> out;
  for (const auto& n : cands) {
    bool minimal = true;
    for (const auto& m : cands)
      if (m.order() < n.order() && is_subset(m, n)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(n);
  }
  std::sort(out.begin(), out.end(), [](const SubgroupHandle& a, const SubgroupHandle& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.members < b.members;
  });
  return out;
}

SubgroupHandle subgroup_intersection(const SubgroupHandle& a, const SubgroupHandle& b) {
  if (a.parent_id != b.parent_id) throw InputError("subgroups belong to different parent groups");
  SubgroupHandle h;
  h.parent_id = a.parent_id;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(h.members));
  // generators are not derivable without the parent; members generate trivially
  for (ElementIndex x : h.members)
    if (x != FiniteGroup::identity()) h.generators.push_back(x);
  return h;
}

bool is_normal(const FiniteGroup& g, const SubgroupHandle& h) {
  if (h.parent_id != g.id()) throw InputError("subgroup belongs to a different group");
  for (ElementIndex x : h.generators.empty() ? h.members : h.generators)
    for (ElementIndex s : g.generators())
      if (!h.contains(g.conj(x, s))) return false;
  return true;
}

SubgroupHandle center(const FiniteGroup& g) {
  std::vector<ElementIndex> z;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    bool central = true;
    for (ElementIndex s : g.generators())
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return subgroup_from_members(g, std::move(z));
}

SubgroupHandle point_stabilizer(const FiniteGroup& g, Point point) {
  if (point >= g.degree()) throw InputError("point out of range");
  std::vector<ElementIndex> s;
  for (ElementIndex x = 0; x < g.order(); ++x)
    if (g.element(x)[point] == point) s.push_back(x);
  return subgroup_from_members(g, std::move(s));
}

FiniteGroup as_group(const FiniteGroup& g, const SubgroupHandle& h) {
  if (h.parent_id != g.id()) throw InputError("subgroup belongs to a different group");
  std::vector<Perm> gens;
  for (ElementIndex x : h.generators) gens.push_back(g.element(x));
  return generate_group(gens, g.degree(), std::max(g.order(), default_order_cap()));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

PNilpotence is_p_nilpotent(const FiniteGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  std::size_t p_prime_part = g.order();
  while (p_prime_part % p == 0) p_prime_part /= p;

  std::vector<ElementIndex> s;
  for (ElementIndex x = 0; x < g.order(); ++x)
    if (g.element_order(x) % p != 0) s.push_back(x);

  PNilpotence out;
  if (s.size() != p_prime_part) return out;
  // s is inverse- and conjugation-closed, so it is a subgroup iff <s> adds nothing
  SubgroupHandle h = subgroup_generated(g, s);
  if (h.members != s) return out;
  out.p_nilpotent = true;
  out.complement = std::move(h);
  return out;
}

}  // namespace acdlab
