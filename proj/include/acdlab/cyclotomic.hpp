#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acdlab/rational.hpp"

namespace acdlab {

std::size_t euler_phi(std::size_t n);

/// Coefficients of the n-th cyclotomic polynomial, low to high (monic, degree phi(n)).
/// Cached; safe to call from several threads.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::size_t n);

/// True iff sum_j a[j] * zeta_n^j == 0 where n == a.size().
/// Multiplies by prod_{p | n} (p - sum_i x^{i n/p}), which kills every component of
/// Q[x]/(x^n - 1) except Q(zeta_n) and is injective there.
bool vanishes_at_primitive_root(std::span<const std::int64_t> a);

/// An element of Q(zeta_n) in canonical form: the remainder of its power-basis
/// expansion modulo Phi_n, written as integer numerators over one positive
/// common denominator (gcd of all of them is 1). Canonical forms are unique for a
/// fixed conductor, so equality of values is equality of representations.
/// Coefficient arithmetic is int64 and throws std::overflow_error if it would wrap.
class CyclotomicValue {
 public:
  CyclotomicValue() : CyclotomicValue(1) {}
  /// Zero of Q(zeta_n).
  explicit CyclotomicValue(std::size_t conductor);

  static CyclotomicValue integer(std::int64_t v, std::size_t conductor = 1);
  static CyclotomicValue fraction(std::int64_t num, std::int64_t den, std::size_t conductor = 1);
  static CyclotomicValue root_of_unity(std::size_t conductor, std::int64_t j);
  /// (1/den) * sum_j coeffs[j] zeta_n^j, indices taken mod n, then reduced.
  static CyclotomicValue from_exponent_sum(std::size_t conductor, std::span<const std::int64_t> coeffs,
                                           std::int64_t den = 1);

  std::size_t conductor() const { return n_; }
  /// Number of stored coefficients, phi(conductor).
  std::size_t basis_size() const { return num_.size(); }
  Rational coeff(std::size_t j) const;
  std::vector<Rational> coeffs() const;
  std::span<const std::int64_t> numerators() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool is_zero() const;
  bool is_integral() const { return den_ == 1; }
  std::optional<Rational> to_rational() const;
  bool is_rational() const { return to_rational().has_value(); }

  /// zeta_n -> zeta_n^k; throws InputError unless gcd(k, n) == 1.
  CyclotomicValue galois(std::int64_t k) const;
  CyclotomicValue conj() const { return galois(-1); }
  /// Same value written over conductor m (a multiple of the current one).
  CyclotomicValue lift(std::size_t m) const;

  friend CyclotomicValue operator+(const CyclotomicValue& a, const CyclotomicValue& b);
  friend CyclotomicValue operator-(const CyclotomicValue& a, const CyclotomicValue& b);
  friend CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b);
  friend CyclotomicValue operator-(const CyclotomicValue& a);
  /// Value equality (lifts to a common conductor when needed).
  friend bool operator==(const CyclotomicValue& a, const CyclotomicValue& b);

  /// Lexicographic on (conductor, coefficient sequence as rationals). A total order
  /// on representations, used for deterministic sorting.
  friend std::strong_ordering compare_canonical(const CyclotomicValue& a, const CyclotomicValue& b);

  /// e.g. "-1", "-1 - z5^2 - z5^3", "1/2*z8 - 3*z8^3".
  std::string to_string() const;

 private:
  std::size_t n_ = 1;
  std::vector<std::int64_t> num_;
  std::int64_t den_ = 1;

  void normalize();
  static CyclotomicValue reduce(std::size_t n, std::vector<__int128> buf, std::int64_t den);
};

}  // namespace acdlab
