#include "acdlab/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "acdlab/errors.hpp"
#include "acdlab/modp.hpp"

namespace acdlab {

namespace {

constexpr std::uint64_t kMaxDegree = 65535;
constexpr std::uint64_t kMaxSymmetric = 6;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

/// p^a, or nullopt past kMaxDegree.
std::optional<std::uint64_t> small_power(std::uint64_t p, std::uint64_t a) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < a; ++i) {
    v *= p;
    if (v > kMaxDegree) return std::nullopt;
  }
  return v;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConstructionError(what);
}

std::uint64_t matrix_dim(const spec::MatrixSemidirect& m) { return m.matrices.front().size(); }

// ---------------------------------------------------------------------------
// Text form

void write_spec(std::ostringstream& os, const GroupSpec& s, bool nested) {
  std::visit(Overloaded{
                 [&](const spec::Cyclic& c) { os << "C(" << c.n << ")"; },
                 [&](const spec::Dihedral& d) { os << "D(" << d.order << ")"; },
                 [&](const spec::Symmetric& x) { os << "S(" << x.n << ")"; },
                 [&](const spec::Alternating& x) { os << "A(" << x.n << ")"; },
                 [&](const spec::Dicyclic& x) { os << "Q(" << x.order << ")"; },
                 [&](const spec::FieldSemidirect& f) {
                   if (f.a == 1)
                     os << "F(" << f.p << "," << f.d << ")";
                   else
                     os << "SD(" << f.p << "," << f.a << "," << f.d << ")";
                 },
                 [&](const spec::MatrixSemidirect& m) {
                   os << "MAT(" << m.p << ";";
                   for (std::size_t i = 0; i < m.matrices.size(); ++i) {
                     if (i) os << ",";
                     os << "[";
                     for (std::size_t r = 0; r < m.matrices[i].size(); ++r) {
                       if (r) os << ",";
                       os << "[";
                       for (std::size_t c = 0; c < m.matrices[i][r].size(); ++c) {
                         if (c) os << ",";
                         os << m.matrices[i][r][c];
                       }
                       os << "]";
                     }
                     os << "]";
                   }
                   os << ")";
                 },
                 [&](const spec::DirectProduct& d) {
                   if (nested) os << "(";
                   for (std::size_t i = 0; i < d.factors.size(); ++i) {
                     if (i) os << "*";
                     write_spec(os, d.factors[i], true);
                   }
                   if (nested) os << ")";
                 },
             },
             s.kind);
}

// ---------------------------------------------------------------------------
// Permutation builders

Perm cycle_on(std::size_t degree, std::size_t from, std::size_t to) {
  std::vector<std::size_t> cyc;
  for (std::size_t i = from; i < to; ++i) cyc.push_back(i);
  return Perm::from_cycles(degree, {cyc});
}

std::vector<Perm> cyclic_gens(std::uint64_t n) {
  if (n == 1) return {};
  return {cycle_on(n, 0, n)};
}

std::vector<Perm> dihedral_gens(std::uint64_t order) {
  const std::uint64_t m = order / 2;
  if (m == 1) return {Perm::parse_cycles(2, "(0 1)")};
  if (m == 2) return {Perm::parse_cycles(4, "(0 1)"), Perm::parse_cycles(4, "(2 3)")};
  std::vector<Point> refl(m);
  for (std::uint64_t i = 0; i < m; ++i) refl[i] = static_cast<Point>((m - i) % m);
  return {cycle_on(m, 0, m), Perm(refl)};
}

std::vector<Perm> symmetric_gens(std::uint64_t n) {
  if (n <= 1) return {};
  if (n == 2) return {Perm::parse_cycles(2, "(0 1)")};
  return {Perm::from_cycles(n, {{0, 1}}), cycle_on(n, 0, n)};
}

std::vector<Perm> alternating_gens(std::uint64_t n) {
  if (n <= 2) return {};
  if (n == 3) return {cycle_on(3, 0, 3)};
  Perm three = cycle_on(n, 0, 3);
  if (n % 2 == 1) return {three, cycle_on(n, 0, n)};
  return {three, cycle_on(n, 1, n)};
}

/// Right regular action of <a, x | a^{2m}, x^2 = a^m, a^x = a^-1> on pairs (i, j) ~ a^i x^j.
std::vector<Perm> dicyclic_gens(std::uint64_t order) {
  const std::uint64_t m = order / 4;
  const std::uint64_t n = 2 * m;
  auto idx = [&](std::uint64_t i, std::uint64_t j) { return static_cast<Point>(j * n + i % n); };
  std::vector<Point> ra(order), rx(order);
  for (std::uint64_t i = 0; i < n; ++i) {
    ra[idx(i, 0)] = idx(i + 1, 0);
    ra[idx(i, 1)] = idx(i + n - 1, 1);
    rx[idx(i, 0)] = idx(i, 1);
    rx[idx(i, 1)] = idx(i + m, 0);
  }
  return {Perm(ra), Perm(rx)};
}

/// Affine group on F_p^n: translations by the unit vectors plus v -> v M for each M.
/// Vectors are encoded as sum v_i p^i.
std::vector<Perm> affine_gens(std::uint64_t p, std::size_t n, const std::vector<spec::Matrix>& mats) {
  const std::uint64_t size = *small_power(p, n);
  auto decode = [&](std::uint64_t code) {
    std::vector<std::int64_t> v(n);
    for (std::size_t i = 0; i < n; ++i, code /= p) v[i] = static_cast<std::int64_t>(code % p);
    return v;
  };
  auto encode = [&](const std::vector<std::int64_t>& v) {
    std::uint64_t code = 0;
    for (std::size_t i = n; i-- > 0;) {
      const std::int64_t r = ((v[i] % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                             static_cast<std::int64_t>(p);
      code = code * p + static_cast<std::uint64_t>(r);
    }
    return static_cast<Point>(code);
  };
  std::vector<Perm> gens;
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<Point> img(size);
    for (std::uint64_t c = 0; c < size; ++c) {
      auto v = decode(c);
      v[b] += 1;
      img[c] = encode(v);
    }
    gens.emplace_back(img);
  }
  for (const auto& m : mats) {
    std::vector<Point> img(size);
    for (std::uint64_t c = 0; c < size; ++c) {
      const auto v = decode(c);
      std::vector<std::int64_t> w(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[j] += v[i] * (m[i][j] % static_cast<std::int64_t>(p));
      img[c] = encode(w);
    }
    gens.emplace_back(img);
  }
  return gens;
}

// ---------------------------------------------------------------------------
// F_{p^a} as F_p[x]/(f), elements as coefficient vectors (low to high).

using FieldElem = std::vector<std::uint64_t>;

FieldElem poly_mul_mod(const FieldElem& u, const FieldElem& v, const FieldElem& f, std::uint64_t p) {
  const std::size_t a = f.size() - 1;
  std::vector<std::uint64_t> prod(2 * a, 0);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) prod[i + j] = (prod[i + j] + u[i] * v[j]) % p;
  for (std::size_t k = prod.size(); k-- > a;) {
    const std::uint64_t c = prod[k];
    if (!c) continue;
    for (std::size_t i = 0; i <= a; ++i) prod[k - a + i] = (prod[k - a + i] + (p - c) * f[i]) % p;
  }
  prod.resize(a);
  return prod;
}

bool divides_poly(const FieldElem& g, FieldElem f, std::uint64_t p) {
  const modp::Field fld{p};
  const std::size_t dg = g.size() - 1;
  for (std::size_t k = f.size(); k-- > dg;) {
    const std::uint64_t c = f[k];
    if (!c) continue;
    for (std::size_t i = 0; i <= dg; ++i)
      f[k - dg + i] = fld.sub(static_cast<modp::Elem>(f[k - dg + i]), fld.mul(static_cast<modp::Elem>(c),
                                                                              static_cast<modp::Elem>(g[i])));
  }
  return std::all_of(f.begin(), f.end(), [](std::uint64_t c) { return c == 0; });
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-p digits of code.
FieldElem monic_from_code(std::uint64_t code, std::size_t deg, std::uint64_t p) {
  FieldElem f(deg + 1, 0);
  for (std::size_t i = 0; i < deg; ++i, code /= p) f[i] = code % p;
  f[deg] = 1;
  return f;
}

/// Smallest monic irreducible of degree a, ordered by the code of its lower coefficients.
FieldElem smallest_irreducible(std::uint64_t p, std::size_t a) {
  const std::uint64_t count = *small_power(p, a);
  for (std::uint64_t code = 0; code < count; ++code) {
    const FieldElem f = monic_from_code(code, a, p);
    bool irreducible = true;
    for (std::size_t dg = 1; dg <= a / 2 && irreducible; ++dg) {
      const std::uint64_t gcount = *small_power(p, dg);
      for (std::uint64_t gc = 0; gc < gcount && irreducible; ++gc)
        if (divides_poly(monic_from_code(gc, dg, p), f, p)) irreducible = false;
    }
    if (irreducible) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

FieldElem field_pow(FieldElem b, std::uint64_t e, const FieldElem& f, std::uint64_t p) {
  FieldElem r(f.size() - 1, 0);
  r[0] = 1;
  while (e) {
    if (e & 1) r = poly_mul_mod(r, b, f, p);
    b = poly_mul_mod(b, b, f, p);
    e >>= 1;
  }
  return r;
}

/// Matrix of v -> v * h in the basis 1, x, ..., x^{a-1}.
spec::Matrix field_multiplier_matrix(std::uint64_t p, std::uint64_t a, std::uint64_t d) {
  const FieldElem f = smallest_irreducible(p, a);
  const std::uint64_t q = *small_power(p, a);
  const std::uint64_t n = q - 1;
  FieldElem one(a, 0);
  one[0] = 1;
  const auto primes = prime_divisors(n);
  FieldElem gamma;
  for (std::uint64_t code = 1; code < q; ++code) {
    FieldElem cand = monic_from_code(code, a, p);
    cand.pop_back();
    bool primitive = true;
    for (std::uint64_t r : primes)
      if (field_pow(cand, n / r, f, p) == one) {
        primitive = false;
        break;
      }
    if (primitive) {
      gamma = cand;
      break;
    }
  }
  const FieldElem h = field_pow(gamma, n / d, f, p);
  spec::Matrix m(a, std::vector<std::int64_t>(a, 0));
  FieldElem basis(a, 0);
  for (std::size_t i = 0; i < a; ++i) {
    std::fill(basis.begin(), basis.end(), 0);
    basis[i] = 1;
    const FieldElem row = poly_mul_mod(basis, h, f, p);
    for (std::size_t j = 0; j < a; ++j) m[i][j] = static_cast<std::int64_t>(row[j]);
  }
  return m;
}

std::vector<Perm> gens_of(const GroupSpec& s, std::size_t& degree);

std::vector<Perm> product_gens(const spec::DirectProduct& d, std::size_t& degree) {
  std::vector<std::vector<Perm>> parts;
  std::vector<std::size_t> degrees;
  std::size_t total = 0;
  for (const auto& f : d.factors) {
    std::size_t deg = 0;
    parts.push_back(gens_of(f, deg));
    degrees.push_back(deg);
    total += deg;
  }
  require(total <= kMaxDegree, "direct product degree exceeds " + std::to_string(kMaxDegree));
  std::vector<Perm> gens;
  std::size_t offset = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (const auto& g : parts[k]) {
      std::vector<Point> img(total);
      std::iota(img.begin(), img.end(), Point{0});
      for (std::size_t i = 0; i < degrees[k]; ++i) img[offset + i] = static_cast<Point>(offset + g[i]);
      gens.emplace_back(img);
    }
    offset += degrees[k];
  }
  degree = total;
  return gens;
}

std::vector<Perm> gens_of(const GroupSpec& s, std::size_t& degree) {
  return std::visit(
      Overloaded{
          [&](const spec::Cyclic& c) {
            degree = c.n;
            return cyclic_gens(c.n);
          },
          [&](const spec::Dihedral& d) {
            degree = d.order == 2 ? 2 : (d.order == 4 ? 4 : d.order / 2);
            return dihedral_gens(d.order);
          },
          [&](const spec::Symmetric& x) {
            degree = std::max<std::uint64_t>(x.n, 1);
            return symmetric_gens(x.n);
          },
          [&](const spec::Alternating& x) {
            degree = std::max<std::uint64_t>(x.n, 1);
            return alternating_gens(x.n);
          },
          [&](const spec::Dicyclic& x) {
            degree = x.order;
            return dicyclic_gens(x.order);
          },
          [&](const spec::FieldSemidirect& f) {
            degree = *small_power(f.p, f.a);
            std::vector<spec::Matrix> ms;
            if (f.d > 1) ms.push_back(field_multiplier_matrix(f.p, f.a, f.d));
            return affine_gens(f.p, f.a, ms);
          },
          [&](const spec::MatrixSemidirect& m) {
            degree = *small_power(m.p, matrix_dim(m));
            return affine_gens(m.p, matrix_dim(m), m.matrices);
          },
          [&](const spec::DirectProduct& d) { return product_gens(d, degree); },
      },
      s.kind);
}

}  // namespace

std::string to_string(const GroupSpec& s) {
  std::ostringstream os;
  write_spec(os, s, false);
  return os.str();
}

bool operator==(const GroupSpec& a, const GroupSpec& b) { return to_string(a) == to_string(b); }

std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t d) {
  if (d == 0) throw InputError("multiplicative order modulo 0");
  if (d == 1) return 1;
  if (std::gcd(p, d) != 1) throw InputError("p is not a unit modulo d");
  std::uint64_t x = p % d;
  std::uint64_t k = 1;
  while (x != 1) {
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * p % d);
    ++k;
  }
  return k;
}

void validate(const GroupSpec& s) {
  std::visit(
      Overloaded{
          [](const spec::Cyclic& c) {
            require(c.n >= 1, "C(n) requires n >= 1");
            require(c.n <= kMaxDegree, "C(n) requires n <= " + std::to_string(kMaxDegree));
          },
          [](const spec::Dihedral& d) {
            require(d.order >= 2 && d.order % 2 == 0, "D(2m) requires an even order >= 2");
            require(d.order / 2 <= kMaxDegree, "D(2m) order too large");
          },
          [](const spec::Symmetric& x) {
            require(x.n >= 1 && x.n <= kMaxSymmetric, "S(n) requires 1 <= n <= 6");
          },
          [](const spec::Alternating& x) {
            require(x.n >= 1 && x.n <= kMaxSymmetric, "A(n) requires 1 <= n <= 6");
          },
          [](const spec::Dicyclic& x) {
            require(x.order >= 4 && x.order % 4 == 0, "Q(4m) requires an order divisible by 4");
            require(x.order <= kMaxDegree, "Q(4m) order too large");
          },
          [](const spec::FieldSemidirect& f) {
            require(is_prime(f.p), "field semidirect requires p prime");
            require(f.a >= 1, "field semidirect requires a >= 1");
            require(f.d >= 1, "field semidirect requires d >= 1");
            const auto q = small_power(f.p, f.a);
            require(q.has_value(), "field semidirect requires p^a <= " + std::to_string(kMaxDegree));
            require((*q - 1) % f.d == 0, "field semidirect requires d | p^a - 1");
            require(f.d == 1 || multiplicative_order(f.p, f.d) == f.a,
                    "field semidirect requires the multiplicative order of p mod d to equal a");
          },
          [](const spec::MatrixSemidirect& m) {
            require(is_prime(m.p), "matrix semidirect requires p prime");
            require(!m.matrices.empty(), "matrix semidirect requires at least one matrix");
            const std::size_t n = matrix_dim(m);
            require(n >= 1, "matrix semidirect requires nonempty matrices");
            require(small_power(m.p, n).has_value(),
                    "matrix semidirect requires p^n <= " + std::to_string(kMaxDegree));
            const modp::Field fld{m.p};
            for (const auto& mat : m.matrices) {
              require(mat.size() == n, "matrix semidirect requires square matrices of one size");
              modp::Mat red(n, modp::Vec(n));
              for (std::size_t i = 0; i < n; ++i) {
                require(mat[i].size() == n, "matrix semidirect requires square matrices of one size");
                for (std::size_t j = 0; j < n; ++j) red[i][j] = fld.from_int(mat[i][j]);
              }
              require(modp::rref(fld, red).size() == n, "matrix semidirect requires invertible matrices");
            }
          },
          [](const spec::DirectProduct& d) {
            require(d.factors.size() >= 2, "direct product requires at least two factors");
            for (const auto& f : d.factors) validate(f);
          },
      },
      s.kind);
}

FiniteGroup build(const GroupSpec& s) {
  validate(s);
  std::size_t degree = 0;
  auto gens = gens_of(s, degree);
  return generate_group(gens, degree);
}

FiniteGroup dihedral(std::uint64_t p) {
  if (p % 2 == 0 || !is_prime(p)) throw InputError("dihedral(p) requires an odd prime, got " + std::to_string(p));
  return build(GroupSpec::dihedral(2 * p));
}

std::vector<GroupSpec> default_catalog() {
  std::vector<GroupSpec> out;
  for (std::uint64_t n = 1; n <= 60; ++n) out.push_back(GroupSpec::cyclic(n));
  for (std::uint64_t m = 3; m <= 25; ++m) out.push_back(GroupSpec::dihedral(2 * m));
  for (std::uint64_t n = 2; n <= 5; ++n) out.push_back(GroupSpec::symmetric(n));
  for (std::uint64_t n = 3; n <= 5; ++n) out.push_back(GroupSpec::alternating(n));
  for (std::uint64_t q = 2; q <= 125; ++q) {
    const auto pd = prime_divisors(q);
    if (pd.size() != 1) continue;
    const std::uint64_t p = pd.front();
    std::uint64_t a = 0;
    for (std::uint64_t t = q; t > 1; t /= p) ++a;
    for (std::uint64_t d = 1; d <= q - 1; ++d) {
      if ((q - 1) % d != 0) continue;
      if (d > 1 && multiplicative_order(p, d) != a) continue;
      out.push_back(GroupSpec::field_semidirect(p, a, d));
    }
  }
  using M = spec::Matrix;
  const M swap{{0, 1}, {1, 0}};
  const M rot3{{0, -1}, {1, -1}};
  out.push_back(GroupSpec::matrix_semidirect(5, {swap, rot3}));
  out.push_back(GroupSpec::matrix_semidirect(7, {swap, rot3}));
  out.push_back(GroupSpec::matrix_semidirect(2, {M{{0, 1}, {1, 1}}}));
  out.push_back(GroupSpec::matrix_semidirect(2, {swap, M{{0, 1}, {1, 1}}}));
  out.push_back(GroupSpec::matrix_semidirect(3, {M{{0, -1}, {1, 0}}, M{{1, 1}, {1, -1}}}));
  out.push_back(GroupSpec::matrix_semidirect(3, {swap, M{{-1, 0}, {0, 1}}}));
  out.push_back(GroupSpec::direct_product({GroupSpec::cyclic(2), GroupSpec::symmetric(3)}));
  out.push_back(GroupSpec::direct_product({GroupSpec::cyclic(3), GroupSpec::dihedral(10)}));
  out.push_back(GroupSpec::dicyclic(8));
  return out;
}

namespace {

bool elementary_abelian(const FiniteGroup& g, const SubgroupHandle& n, std::uint64_t& p, std::uint64_t& a) {
  const auto pd = prime_divisors(n.order());
  if (pd.size() != 1) return false;
  p = pd.front();
  a = 0;
  for (std::size_t t = n.order(); t > 1; t /= p) ++a;
  for (ElementIndex x : n.members)
    if (x != FiniteGroup::identity() && g.element_order(x) != p) return false;
  for (ElementIndex x : n.generators)
    for (ElementIndex y : n.generators)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

}  // namespace

std::optional<AffineStructure> affine_structure(const FiniteGroup& g) {
  if (g.order() == 1) return std::nullopt;
  const SubgroupHandle h = point_stabilizer(g, 0);
  for (const auto& n : minimal_normal_subgroups(g)) {
    std::uint64_t p = 0, a = 0;
    if (!elementary_abelian(g, n, p, a)) continue;
    if (n.order() * h.order() != g.order()) continue;
    if (!subgroup_intersection(n, h).is_trivial()) continue;
    bool faithful = true;
    for (ElementIndex x : h.members) {
      if (x == FiniteGroup::identity()) continue;
      const bool centralizes = std::all_of(n.generators.begin(), n.generators.end(),
                                           [&](ElementIndex y) { return g.mul(x, y) == g.mul(y, x); });
      if (centralizes) {
        faithful = false;
        break;
      }
    }
    if (!faithful) continue;
    return AffineStructure{p, a, n, h};
  }
  return std::nullopt;
}

}  // namespace acdlab
