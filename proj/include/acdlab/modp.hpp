#pragma once

// Dense linear algebra and polynomial arithmetic over a prime field F_q, q < 2^31.

#include <cstdint>
#include <vector>

namespace acdlab::modp {

using Elem = std::uint32_t;
using Vec = std::vector<Elem>;
using Mat = std::vector<Vec>;
/// Coefficients low to high.
using Poly = std::vector<Elem>;

struct Field {
  std::uint64_t q;

  Elem add(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + b) % q); }
  Elem sub(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + q - b) % q); }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t{a} * b % q); }
  Elem neg(Elem a) const { return a == 0 ? 0 : static_cast<Elem>(q - a); }
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(q);
    return static_cast<Elem>(r < 0 ? r + static_cast<long long>(q) : r);
  }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem inv(Elem a) const;
};

/// Smallest generator of F_q^*.
Elem primitive_root(const Field& f);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const Field& f, Mat& m);
/// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(const Field& f, Mat m);

/// Monic characteristic polynomial det(xI - m) via Hessenberg reduction.
Poly charpoly(const Field& f, Mat m);

Poly poly_mod(const Field& f, Poly a, const Poly& b);
Poly poly_mulmod(const Field& f, const Poly& a, const Poly& b, const Poly& mod);
Poly poly_gcd(const Field& f, Poly a, Poly b);
Elem poly_eval(const Field& f, const Poly& a, Elem x);

/// Distinct roots in F_q, ascending. Deterministic.
std::vector<Elem> distinct_roots(const Field& f, const Poly& p);

}  // namespace acdlab::modp
