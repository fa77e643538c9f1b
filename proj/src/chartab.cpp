#include "acdlab/chartab.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

#include "acdlab/errors.hpp"

namespace acdlab {

std::optional<std::size_t> CharacterTable::find_row(const std::vector<CyclotomicValue>& values) const {
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r] == values) return r;
  return std::nullopt;
}

std::uint64_t choose_conductor_prime(std::uint64_t e, std::uint64_t order) {
  if (e == 0 || order == 0) throw InputError("exponent and order must be positive");
  // q > 2 sqrt(order)  <=>  q^2 > 4 order
  for (std::uint64_t q = e + 1;; q += e)
    if (q * q > 4 * order && is_prime(q)) return q;
}

std::vector<std::vector<std::vector<std::uint64_t>>> class_coefficients(const FiniteGroup& g,
                                                                        const ClassData& c) {
  const std::size_t r = c.num_classes;
  std::vector a(r, std::vector(r, std::vector<std::uint64_t>(r, 0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      const ElementIndex z = c.reps[k];
      for (ElementIndex x : c.members[i]) ++a[i][c.class_of[g.mul(g.inv(x), z)]][k];
    }
  return a;
}

modp::Mat class_matrix(const FiniteGroup& g, const ClassData& c, std::size_t i, const modp::Field& f) {
  const std::size_t r = c.num_classes;
  std::vector<std::vector<std::uint64_t>> counts(r, std::vector<std::uint64_t>(r, 0));
  for (std::size_t k = 0; k < r; ++k) {
    const ElementIndex z = c.reps[k];
    for (ElementIndex x : c.members[i]) ++counts[c.class_of[g.mul(g.inv(x), z)]][k];
  }
  modp::Mat m(r, modp::Vec(r));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k) m[j][k] = static_cast<modp::Elem>(counts[j][k] % f.q);
  return m;
}

namespace {

struct Subspace {
  modp::Mat basis;  // RREF rows
  std::vector<std::size_t> pivots;
};

Subspace make_subspace(const modp::Field& f, modp::Mat vectors) {
  Subspace s;
  s.pivots = modp::rref(f, vectors);
  s.basis = std::move(vectors);
  return s;
}

/// Restriction of m (acting on column vectors) to the invariant subspace s, in the
/// coordinates given by the RREF basis: the coordinate of v in s is v[pivot].
modp::Mat restrict_to(const modp::Field& f, const modp::Mat& m, const Subspace& s) {
  const std::size_t d = s.basis.size();
  const std::size_t r = m.size();
  modp::Mat out(d, modp::Vec(d, 0));
  for (std::size_t a = 0; a < d; ++a) {
    const auto& row = m[s.pivots[a]];
    for (std::size_t b = 0; b < d; ++b) {
      std::uint64_t acc = 0;
      const auto& v = s.basis[b];
      for (std::size_t y = 0; y < r; ++y) {
        if (v[y] == 0 || row[y] == 0) continue;
        acc = (acc + std::uint64_t{row[y]} * v[y]) % f.q;
      }
      out[a][b] = static_cast<modp::Elem>(acc);
    }
  }
  return out;
}

bool is_scalar(const modp::Mat& m) {
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b)
      if (a == b ? m[a][b] != m[0][0] : m[a][b] != 0) return false;
  return true;
}

}  // namespace

ModTable modular_table(const FiniteGroup& g, const ClassData& c) {
  const std::size_t r = c.num_classes;
  const std::uint64_t order = g.order();
  const std::uint64_t e = exponent(g);
  ModTable t;
  t.q = choose_conductor_prime(e, order);
  const modp::Field f{t.q};
  t.omega = f.pow(modp::primitive_root(f), (t.q - 1) / e);

  modp::Mat ident(r, modp::Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i) ident[i][i] = 1;
  std::vector<Subspace> spaces{make_subspace(f, std::move(ident))};

  auto unresolved = [&] {
    return std::any_of(spaces.begin(), spaces.end(), [](const Subspace& s) { return s.basis.size() > 1; });
  };
  for (std::size_t i = 1; i < r && unresolved(); ++i) {
    const modp::Mat m = class_matrix(g, c, i, f);
    std::vector<Subspace> next;
    for (auto& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(std::move(s));
        continue;
      }
      const modp::Mat restricted = restrict_to(f, m, s);
      if (is_scalar(restricted)) {
        next.push_back(std::move(s));
        continue;
      }
      std::size_t total = 0;
      for (modp::Elem lambda : modp::distinct_roots(f, modp::charpoly(f, restricted))) {
        modp::Mat shifted = restricted;
        for (std::size_t a = 0; a < shifted.size(); ++a) shifted[a][a] = f.sub(shifted[a][a], lambda);
        modp::Mat vectors;
        for (const auto& coords : modp::nullspace(f, std::move(shifted))) {
          modp::Vec v(r, 0);
          for (std::size_t b = 0; b < coords.size(); ++b) {
            if (coords[b] == 0) continue;
            for (std::size_t y = 0; y < r; ++y) v[y] = f.add(v[y], f.mul(coords[b], s.basis[b][y]));
          }
          vectors.push_back(std::move(v));
        }
        total += vectors.size();
        next.push_back(make_subspace(f, std::move(vectors)));
      }
      if (total != s.basis.size()) throw std::logic_error("class matrix not diagonalizable mod q");
    }
    spaces = std::move(next);
  }
  if (unresolved() || spaces.size() != r) throw std::logic_error("eigenspace splitting failed");

  std::uint64_t max_degree = 1;
  while ((max_degree + 1) * (max_degree + 1) <= order) ++max_degree;

  for (const auto& s : spaces) {
    const modp::Vec& w = s.basis[0];
    if (s.pivots[0] != 0) throw std::logic_error("central character vanishes at the identity class");
    std::uint64_t norm = 0;
    for (std::size_t j = 0; j < r; ++j) {
      const modp::Elem term = f.mul(f.mul(w[j], w[c.inverse_class[j]]), f.inv(f.from_int(static_cast<long long>(c.sizes[j]))));
      norm = f.add(static_cast<modp::Elem>(norm), term);
    }
    const modp::Elem target = f.mul(f.from_int(static_cast<long long>(order)), f.inv(static_cast<modp::Elem>(norm)));
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= max_degree; ++d)
      if (d * d % t.q == target) {
        degree = d;
        break;
      }
    if (degree == 0) throw std::logic_error("no admissible character degree");
    modp::Vec vals(r);
    for (std::size_t j = 0; j < r; ++j)
      vals[j] = f.mul(f.mul(w[j], static_cast<modp::Elem>(degree)),
                      f.inv(f.from_int(static_cast<long long>(c.sizes[j]))));
    t.central.push_back(w);
    t.values.push_back(std::move(vals));
    t.degrees.push_back(degree);
  }
  return t;
}

namespace {

bool is_trivial_row(const std::vector<CyclotomicValue>& row) {
  return std::all_of(row.begin(), row.end(), [](const CyclotomicValue& v) {
    auto q = v.to_rational();
    return q && *q == Rational(1);
  });
}

}  // namespace

CharacterTable character_table(const FiniteGroup& g) { return character_table(g, conjugacy_classes(g)); }

CharacterTable character_table(const FiniteGroup& g, const ClassData& c) {
  const ModTable mt = modular_table(g, c);
  const modp::Field f{mt.q};
  const std::size_t r = c.num_classes;
  CharacterTable t;
  t.group = g;
  t.classes = c;
  t.exponent = exponent(g);

  // per class: classes of g^t and the powers of a primitive n-th root mod q
  struct ClassPowers {
    std::vector<std::size_t> power_class;
    std::vector<modp::Elem> root_powers;
    modp::Elem inv_n;
  };
  std::vector<ClassPowers> cp(r);
  for (std::size_t k = 0; k < r; ++k) {
    const std::uint64_t n = c.rep_orders[k];
    auto& p = cp[k];
    ElementIndex x = FiniteGroup::identity();
    for (std::uint64_t s = 0; s < n; ++s) {
      p.power_class.push_back(c.class_of[x]);
      x = g.mul(x, c.reps[k]);
    }
    const modp::Elem root = f.pow(mt.omega, t.exponent / n);
    modp::Elem acc = 1;
    for (std::uint64_t s = 0; s < n; ++s) {
      p.root_powers.push_back(acc);
      acc = f.mul(acc, root);
    }
    p.inv_n = f.inv(f.from_int(static_cast<long long>(n)));
  }

  std::vector<std::pair<std::uint64_t, std::vector<CyclotomicValue>>> rows;
  for (std::size_t chi = 0; chi < r; ++chi) {
    const auto& vals = mt.values[chi];
    const std::uint64_t degree = mt.degrees[chi];
    std::vector<CyclotomicValue> row;
    row.reserve(r);
    for (std::size_t k = 0; k < r; ++k) {
      const auto& p = cp[k];
      const std::size_t n = p.power_class.size();
      // eigenvalue multiplicities m_j = (1/n) sum_s chi(g^s) w^(-js), each in [0, degree]
      std::vector<std::int64_t> mult(n, 0);
      std::uint64_t total = 0;
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t s = 0; s < n; ++s) {
          const std::size_t idx = (n - (j * s) % n) % n;
          acc = (acc + std::uint64_t{vals[p.power_class[s]]} * p.root_powers[idx]) % f.q;
        }
        const std::uint64_t m = f.mul(static_cast<modp::Elem>(acc), p.inv_n);
        if (m > degree) throw std::logic_error("eigenvalue multiplicity out of range in lift");
        mult[j] = static_cast<std::int64_t>(m);
        total += m;
      }
      if (total != degree) throw std::logic_error("eigenvalue multiplicities do not sum to the degree");
      row.push_back(CyclotomicValue::from_exponent_sum(n, mult));
    }
    rows.emplace_back(degree, std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    const bool ta = is_trivial_row(a.second), tb = is_trivial_row(b.second);
    if (ta != tb) return ta;
    if (a.first != b.first) return a.first < b.first;
    for (std::size_t k = 0; k < a.second.size(); ++k) {
      const auto cmp = compare_canonical(a.second[k], b.second[k]);
      if (cmp != 0) return cmp < 0;
    }
    return false;
  });
  for (auto& [deg, row] : rows) {
    t.degrees.push_back(deg);
    t.rows.push_back(std::move(row));
  }
  return t;
}

OrthogonalityReport verify_orthogonality(const CharacterTable& t) {
  using Kind = OrthogonalityFailure::Kind;
  OrthogonalityReport rep;
  auto fail = [&](Kind k, std::size_t a, std::size_t b, std::string d) {
    rep.ok = false;
    rep.failures.push_back({k, a, b, std::move(d)});
  };
  const std::size_t r = t.classes.num_classes;
  const std::uint64_t e = t.exponent;
  const std::uint64_t order = t.group.order();
  if (t.rows.size() != r || t.degrees.size() != r) {
    fail(Kind::Shape, t.rows.size(), r, "row count differs from class count");
    return rep;
  }

  // sparse exponent-sum form of every value, exponents scaled to conductor e
  struct Term {
    std::uint64_t exp;
    std::int64_t coeff;
  };
  std::vector<std::vector<std::vector<Term>>> terms(r, std::vector<std::vector<Term>>(r));
  for (std::size_t a = 0; a < r; ++a) {
    if (t.rows[a].size() != r) {
      fail(Kind::Shape, a, r, "row length differs from class count");
      return rep;
    }
    const auto deg = t.rows[a][0].to_rational();
    if (!deg || *deg != Rational(static_cast<long>(t.degrees[a]))) fail(Kind::Shape, a, 0, "degree differs from value at identity");
    for (std::size_t k = 0; k < r; ++k) {
      const auto& v = t.rows[a][k];
      if (e % v.conductor() != 0) {
        fail(Kind::Shape, a, k, "value conductor does not divide the exponent");
        return rep;
      }
      if (!v.is_integral()) fail(Kind::Integrality, a, k, "value " + v.to_string() + " is not an algebraic integer");
      const std::uint64_t step = e / v.conductor();
      const auto nums = v.numerators();
      for (std::size_t j = 0; j < nums.size(); ++j)
        if (nums[j] != 0) terms[a][k].push_back({j * step, nums[j]});
    }
  }
  if (!rep.ok) return rep;

  std::vector<std::int64_t> acc;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b) {
      acc.assign(e, 0);
      for (std::size_t k = 0; k < r; ++k) {
        const auto size = static_cast<std::int64_t>(t.classes.sizes[k]);
        for (const auto& x : terms[a][k])
          for (const auto& y : terms[b][k]) acc[(x.exp + e - y.exp) % e] += size * x.coeff * y.coeff;
      }
      if (a == b) acc[0] -= static_cast<std::int64_t>(order);
      if (!vanishes_at_primitive_root(acc))
        fail(Kind::Row, a, b, a == b ? "row norm differs from |G|" : "rows not orthogonal");
    }

  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = k; l < r; ++l) {
      const std::uint64_t nk = t.classes.rep_orders[k], nl = t.classes.rep_orders[l];
      const std::uint64_t m = std::lcm(nk, nl);
      const std::uint64_t sk = e / m, sl = e / m;
      acc.assign(m, 0);
      for (std::size_t a = 0; a < r; ++a)
        for (const auto& x : terms[a][k])
          for (const auto& y : terms[a][l]) acc[(x.exp / sk + m - y.exp / sl) % m] += x.coeff * y.coeff;
      if (k == l) acc[0] -= static_cast<std::int64_t>(order / t.classes.sizes[k]);
      if (!vanishes_at_primitive_root(acc))
        fail(Kind::Column, k, l, k == l ? "column norm differs from centralizer order" : "columns not orthogonal");
    }
  return rep;
}

SubgroupHandle character_kernel(const CharacterTable& t, std::size_t row) {
  if (row >= t.rows.size()) throw InputError("character index out of range");
  const Rational deg(static_cast<long>(t.degrees[row]));
  std::vector<ElementIndex> members;
  for (std::size_t k = 0; k < t.classes.num_classes; ++k) {
    const auto v = t.rows[row][k].to_rational();
    if (v && *v == deg) members.insert(members.end(), t.classes.members[k].begin(), t.classes.members[k].end());
  }
  return subgroup_from_members(t.group, std::move(members));
}

std::size_t galois_conjugate(const CharacterTable& t, std::size_t row, std::int64_t k) {
  if (row >= t.rows.size()) throw InputError("character index out of range");
  const auto e = static_cast<std::int64_t>(t.exponent);
  if (std::gcd(((k % e) + e) % e, e) != 1 && e > 1) throw InputError("Galois exponent not coprime to the exponent");
  std::vector<CyclotomicValue> image;
  image.reserve(t.rows[row].size());
  for (const auto& v : t.rows[row]) image.push_back(v.galois(k));
  if (auto hit = t.find_row(image)) return *hit;
  throw std::logic_error("character table is not closed under the Galois action");
}

std::vector<std::int64_t> unit_subgroup_generators(std::uint64_t e, std::uint64_t modulus) {
  if (e <= 2) return {};
  const std::uint64_t g = std::gcd(modulus, e);
  std::vector<char> in(e + 1, 0);
  std::vector<std::uint64_t> closure{1};
  in[1] = 1;
  std::vector<std::int64_t> gens;
  for (std::uint64_t u = 2; u < e; ++u) {
    if (std::gcd(u, e) != 1 || u % g != 1 % g || in[u]) continue;
    gens.push_back(static_cast<std::int64_t>(u));
    for (std::size_t i = 0; i < closure.size(); ++i)
      for (auto s : gens) {
        const std::uint64_t y = closure[i] * static_cast<std::uint64_t>(s) % e;
        if (!in[y]) {
          in[y] = 1;
          closure.push_back(y);
        }
      }
  }
  return gens;
}

std::string table_to_json(const CharacterTable& t, const std::string& spec_text) {
  using json = nlohmann::ordered_json;
  json j;
  j["format"] = "acdlab-character-table";
  j["version"] = 1;
  j["spec"] = spec_text;
  j["order"] = t.group.order();
  j["exponent"] = t.exponent;
  json classes = json::array();
  for (std::size_t k = 0; k < t.classes.num_classes; ++k) {
    json c;
    c["size"] = t.classes.sizes[k];
    c["element_order"] = t.classes.rep_orders[k];
    c["representative"] = t.group.element(t.classes.reps[k]).to_cycle_string();
    c["word"] = t.group.word(t.classes.reps[k]);
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  j["degrees"] = t.degrees;
  json chars = json::array();
  for (const auto& row : t.rows) {
    json jr = json::array();
    for (const auto& v : row) {
      json coeffs = json::array();
      for (const auto& q : v.coeffs()) coeffs.push_back(q.to_string());
      jr.push_back(json{{"conductor", v.conductor()}, {"coeffs", std::move(coeffs)}});
    }
    chars.push_back(std::move(jr));
  }
  j["characters"] = std::move(chars);
  return j.dump(1) + "\n";
}

}  // namespace acdlab
