#include "acdlab/modp.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "acdlab/group.hpp"

namespace acdlab::modp {

Elem Field::pow(Elem a, std::uint64_t e) const {
  std::uint64_t r = 1 % q, b = a % q;
  while (e) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return static_cast<Elem>(r);
}

Elem Field::inv(Elem a) const {
  if (a % q == 0) throw std::domain_error("inverse of zero mod q");
  return pow(a, q - 2);
}

Elem primitive_root(const Field& f) {
  const auto primes = prime_divisors(f.q - 1);
  for (Elem g = 2; g < f.q; ++g) {
    bool ok = true;
    for (auto p : primes)
      if (f.pow(g, (f.q - 1) / p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;  // q == 2
}

std::vector<std::size_t> rref(const Field& f, Mat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Elem inv = f.inv(m[r][c]);
    for (auto& x : m[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Elem u = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(u, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

std::vector<Vec> nullspace(const Field& f, Mat m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  const auto pivots = rref(f, m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

Poly charpoly(const Field& f, Mat h) {
  const std::size_t n = h.size();
  // similarity-reduce to upper Hessenberg form
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t j = 0; j < n; ++j) std::swap(h[j][i], h[j][m]);
    }
    const Elem inv = f.inv(h[m][m - 1]);
    for (i = m + 1; i < n; ++i) {
      const Elem u = f.mul(h[i][m - 1], inv);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h[i][j] = f.sub(h[i][j], f.mul(u, h[m][j]));
      for (std::size_t j = 0; j < n; ++j) h[j][m] = f.add(h[j][m], f.mul(u, h[j][i]));
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (h_{k,k-1} ... h_{i+1,i}) p_{i-1}   (1-based)
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    Poly cur(k + 1, 0);
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      cur[d + 1] = f.add(cur[d + 1], p[k - 1][d]);
      cur[d] = f.sub(cur[d], f.mul(h[k - 1][k - 1], p[k - 1][d]));
    }
    Elem t = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      t = f.mul(t, h[i][i - 1]);
      const Elem coef = f.mul(h[i - 1][k - 1], t);
      if (coef != 0)
        for (std::size_t d = 0; d < p[i - 1].size(); ++d)
          cur[d] = f.sub(cur[d], f.mul(coef, p[i - 1][d]));
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly make_monic(const Field& f, Poly a) {
  trim(a);
  if (a.empty()) return a;
  const Elem inv = f.inv(a.back());
  for (auto& x : a) x = f.mul(x, inv);
  return a;
}

Poly poly_div_exact(const Field& f, Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  Poly quo(a.size() - db, 0);
  const Elem inv = f.inv(b.back());
  for (std::size_t i = a.size(); i-- > db;) {
    const Elem c = f.mul(a[i], inv);
    quo[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = f.sub(a[i - db + j], f.mul(c, b[j]));
  }
  return quo;
}

void split(const Field& f, const Poly& g, std::vector<Elem>& out) {
  const std::size_t deg = g.size() - 1;
  if (deg == 0) return;
  if (deg == 1) {
    out.push_back(f.neg(f.mul(g[0], f.inv(g[1]))));
    return;
  }
  for (Elem a = 0; a < f.q; ++a) {
    // gcd(g, (x + a)^((q-1)/2) - 1)
    Poly base{a % static_cast<Elem>(f.q), 1};
    Poly r{1};
    std::uint64_t e = (f.q - 1) / 2;
    base = poly_mod(f, base, g);
    while (e) {
      if (e & 1) r = poly_mulmod(f, r, base, g);
      base = poly_mulmod(f, base, base, g);
      e >>= 1;
    }
    if (r.empty()) r = {0};
    r[0] = f.sub(r[0], 1);
    Poly h = poly_gcd(f, g, r);
    if (h.size() > 1 && h.size() < g.size()) {
      split(f, h, out);
      split(f, make_monic(f, poly_div_exact(f, g, h)), out);
      return;
    }
  }
  throw std::logic_error("failed to split polynomial over F_q");
}

}  // namespace

Poly poly_mod(const Field& f, Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return a;
  const Elem inv = f.inv(b.back());
  for (std::size_t i = a.size(); i-- > db;) {
    const Elem c = f.mul(a[i], inv);
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = f.sub(a[i - db + j], f.mul(c, b[j]));
  }
  a.resize(db);
  trim(a);
  return a;
}

Poly poly_mulmod(const Field& f, const Poly& a, const Poly& b, const Poly& mod) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % f.q;
  }
  Poly prod(acc.begin(), acc.end());
  return poly_mod(f, std::move(prod), mod);
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(f, std::move(a));
}

Elem poly_eval(const Field& f, const Poly& a, Elem x) {
  Elem r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
  return r;
}

std::vector<Elem> distinct_roots(const Field& f, const Poly& p) {
  Poly g = make_monic(f, p);
  if (g.size() <= 1) return {};
  // x^q mod g, then gcd(g, x^q - x) keeps one copy of each root in F_q
  Poly xq{1};
  Poly base = poly_mod(f, Poly{0, 1}, g);
  std::uint64_t e = f.q;
  while (e) {
    if (e & 1) xq = poly_mulmod(f, xq, base, g);
    base = poly_mulmod(f, base, base, g);
    e >>= 1;
  }
  xq.resize(std::max<std::size_t>(xq.size(), 2), 0);
  xq[1] = f.sub(xq[1], 1);
  Poly sq = poly_gcd(f, g, xq);
  std::vector<Elem> roots;
  split(f, sq, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace acdlab::modp
