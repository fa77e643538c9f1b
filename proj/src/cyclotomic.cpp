#include "acdlab/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "acdlab/errors.hpp"
#include "acdlab/group.hpp"

namespace acdlab {

namespace {

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("cyclotomic coefficient overflow");
  return static_cast<std::int64_t>(v);
}

int mobius(std::size_t n) {
  int mu = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

struct SparseTerm {
  std::size_t power;
  std::int64_t coeff;
};

struct PolyCache {
  std::mutex mu;
  std::map<std::size_t, std::shared_ptr<const std::vector<std::int64_t>>> dense;
  std::map<std::size_t, std::shared_ptr<const std::vector<SparseTerm>>> sparse;
};

PolyCache& cache() {
  static PolyCache c;
  return c;
}

std::vector<std::int64_t> compute_cyclotomic(std::size_t n) {
  // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}: multiply the + factors, then divide out the - ones
  std::vector<std::size_t> up, down;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    const int mu = mobius(n / d);
    if (mu == 1) up.push_back(d);
    if (mu == -1) down.push_back(d);
  }
  std::vector<__int128> p{1};
  for (std::size_t d : up) {
    std::vector<__int128> next(p.size() + d, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + d] += p[i];
      next[i] -= p[i];
    }
    p = std::move(next);
  }
  for (std::size_t d : down) {
    // exact division by x^d - 1: q_i = q_{i-d} - p_i, processed low to high
    std::vector<__int128> q(p.size() - d, 0);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = (i >= d ? q[i - d] : 0) - p[i];
    p = std::move(q);
  }
  std::vector<std::int64_t> out;
  out.reserve(p.size());
  for (auto c : p) out.push_back(checked(c));
  return out;
}

const std::vector<SparseTerm>& sparse_cyclotomic(std::size_t n) {
  auto& c = cache();
  {
    std::lock_guard lock(c.mu);
    if (auto it = c.sparse.find(n); it != c.sparse.end()) return *it->second;
  }
  const auto& dense = cyclotomic_polynomial(n);
  auto terms = std::make_shared<std::vector<SparseTerm>>();
  for (std::size_t k = 0; k + 1 < dense.size(); ++k)
    if (dense[k] != 0) terms->push_back({k, dense[k]});
  std::lock_guard lock(c.mu);
  auto [it, inserted] = c.sparse.emplace(n, std::move(terms));
  return *it->second;
}

}  // namespace

std::size_t euler_phi(std::size_t n) {
  std::size_t result = n;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::size_t n) {
  if (n == 0) throw InputError("cyclotomic polynomial of index 0");
  auto& c = cache();
  {
    std::lock_guard lock(c.mu);
    if (auto it = c.dense.find(n); it != c.dense.end()) return *it->second;
  }
  auto poly = std::make_shared<const std::vector<std::int64_t>>(compute_cyclotomic(n));
  std::lock_guard lock(c.mu);
  auto [it, inserted] = c.dense.emplace(n, std::move(poly));
  return *it->second;
}

bool vanishes_at_primitive_root(std::span<const std::int64_t> a) {
  const std::size_t n = a.size();
  if (n == 0) throw InputError("empty group-ring vector");
  std::vector<__int128> v(a.begin(), a.end());
  for (std::uint64_t p : prime_divisors(n)) {
    const std::size_t stride = n / p;
    std::vector<__int128> sums(stride, 0);
    for (std::size_t j = 0; j < n; ++j) sums[j % stride] += v[j];
    for (std::size_t j = 0; j < n; ++j) v[j] = static_cast<__int128>(p) * v[j] - sums[j % stride];
  }
  return std::all_of(v.begin(), v.end(), [](__int128 x) { return x == 0; });
}

// ---------------------------------------------------------------- CyclotomicValue

CyclotomicValue::CyclotomicValue(std::size_t conductor) : n_(conductor) {
  if (conductor == 0) throw InputError("conductor must be positive");
  num_.assign(euler_phi(conductor), 0);
}

CyclotomicValue CyclotomicValue::integer(std::int64_t v, std::size_t conductor) {
  CyclotomicValue out(conductor);
  out.num_[0] = v;
  return out;
}

CyclotomicValue CyclotomicValue::fraction(std::int64_t num, std::int64_t den, std::size_t conductor) {
  if (den == 0) throw DomainError("zero denominator");
  CyclotomicValue out(conductor);
  out.num_[0] = num;
  out.den_ = den;
  out.normalize();
  return out;
}

CyclotomicValue CyclotomicValue::root_of_unity(std::size_t conductor, std::int64_t j) {
  const std::int64_t c = 1;
  std::vector<std::int64_t> buf(conductor, 0);
  const auto n = static_cast<std::int64_t>(conductor);
  buf[static_cast<std::size_t>(((j % n) + n) % n)] = c;
  return from_exponent_sum(conductor, buf);
}

CyclotomicValue CyclotomicValue::from_exponent_sum(std::size_t conductor,
                                                   std::span<const std::int64_t> coeffs,
                                                   std::int64_t den) {
  if (conductor == 0) throw InputError("conductor must be positive");
  if (den == 0) throw DomainError("zero denominator");
  std::vector<__int128> buf(conductor, 0);
  for (std::size_t j = 0; j < coeffs.size(); ++j) buf[j % conductor] += coeffs[j];
  return reduce(conductor, std::move(buf), den);
}

CyclotomicValue CyclotomicValue::reduce(std::size_t n, std::vector<__int128> buf, std::int64_t den) {
  const std::size_t phi = euler_phi(n);
  const auto& terms = sparse_cyclotomic(n);
  // x^i = x^(i - phi) * (x^phi) and x^phi == -(Phi_n - x^phi)
  for (std::size_t i = n; i-- > phi;) {
    const __int128 c = buf[i];
    if (c == 0) continue;
    buf[i] = 0;
    for (const auto& t : terms) buf[i - phi + t.power] -= c * t.coeff;
  }
  CyclotomicValue out(n);
  for (std::size_t j = 0; j < phi; ++j) out.num_[j] = checked(buf[j]);
  out.den_ = den;
  out.normalize();
  return out;
}

void CyclotomicValue::normalize() {
  if (den_ < 0) {
    den_ = checked(-static_cast<__int128>(den_));
    for (auto& x : num_) x = checked(-static_cast<__int128>(x));
  }
  std::int64_t g = den_;
  for (auto x : num_) g = std::gcd(g, x);
  if (g > 1) {
    den_ /= g;
    for (auto& x : num_) x /= g;
  }
  if (is_zero()) den_ = 1;
}

Rational CyclotomicValue::coeff(std::size_t j) const {
  return Rational(num_.at(j), den_);
}

std::vector<Rational> CyclotomicValue::coeffs() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (auto x : num_) out.emplace_back(x, den_);
  return out;
}

bool CyclotomicValue::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](std::int64_t x) { return x == 0; });
}

std::optional<Rational> CyclotomicValue::to_rational() const {
  for (std::size_t j = 1; j < num_.size(); ++j)
    if (num_[j] != 0) return std::nullopt;
  return Rational(num_[0], den_);
}

CyclotomicValue CyclotomicValue::galois(std::int64_t k) const {
  const auto n = static_cast<std::int64_t>(n_);
  const std::int64_t kk = ((k % n) + n) % n;
  if (std::gcd(kk, n) != 1 && n > 1) throw InputError("Galois exponent not coprime to conductor");
  std::vector<__int128> buf(n_, 0);
  for (std::size_t j = 0; j < num_.size(); ++j)
    if (num_[j] != 0) buf[static_cast<std::size_t>(static_cast<std::int64_t>(j) * kk % n)] += num_[j];
  return reduce(n_, std::move(buf), den_);
}

CyclotomicValue CyclotomicValue::lift(std::size_t m) const {
  if (m == 0 || m % n_ != 0) throw InputError("lift target is not a multiple of the conductor");
  if (m == n_) return *this;
  const std::size_t step = m / n_;
  std::vector<__int128> buf(m, 0);
  for (std::size_t j = 0; j < num_.size(); ++j) buf[j * step] = num_[j];
  return reduce(m, std::move(buf), den_);
}

namespace {

std::pair<CyclotomicValue, CyclotomicValue> common(const CyclotomicValue& a, const CyclotomicValue& b) {
  const std::size_t m = std::lcm(a.conductor(), b.conductor());
  return {a.lift(m), b.lift(m)};
}

}  // namespace

CyclotomicValue operator+(const CyclotomicValue& a0, const CyclotomicValue& b0) {
  auto [a, b] = common(a0, b0);
  const std::int64_t den = checked(static_cast<__int128>(std::lcm(a.den_, b.den_)));
  const std::int64_t fa = den / a.den_, fb = den / b.den_;
  CyclotomicValue out(a.n_);
  for (std::size_t j = 0; j < out.num_.size(); ++j)
    out.num_[j] = checked(static_cast<__int128>(a.num_[j]) * fa + static_cast<__int128>(b.num_[j]) * fb);
  out.den_ = den;
  out.normalize();
  return out;
}

CyclotomicValue operator-(const CyclotomicValue& a) {
  CyclotomicValue out = a;
  for (auto& x : out.num_) x = checked(-static_cast<__int128>(x));
  return out;
}

CyclotomicValue operator-(const CyclotomicValue& a, const CyclotomicValue& b) { return a + (-b); }

CyclotomicValue operator*(const CyclotomicValue& a0, const CyclotomicValue& b0) {
  auto [a, b] = common(a0, b0);
  const std::size_t n = a.n_;
  std::vector<__int128> buf(n, 0);
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < b.num_.size(); ++j)
      if (b.num_[j] != 0) buf[(i + j) % n] += static_cast<__int128>(a.num_[i]) * b.num_[j];
  }
  return CyclotomicValue::reduce(n, std::move(buf),
                                 checked(static_cast<__int128>(a.den_) * b.den_));
}

bool operator==(const CyclotomicValue& a, const CyclotomicValue& b) {
  if (a.n_ == b.n_) return a.den_ == b.den_ && a.num_ == b.num_;
  auto [x, y] = common(a, b);
  return x.den_ == y.den_ && x.num_ == y.num_;
}

std::strong_ordering compare_canonical(const CyclotomicValue& a, const CyclotomicValue& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (std::size_t j = 0; j < a.num_.size(); ++j) {
    const __int128 x = static_cast<__int128>(a.num_[j]) * b.den_;
    const __int128 y = static_cast<__int128>(b.num_[j]) * a.den_;
    if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string CyclotomicValue::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) continue;
    const Rational c(num_[j], den_);
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (first) {
      if (neg) out << '-';
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    const std::string mag_text = mag.is_integer() ? mag.numerator().get_str() : mag.to_string();
    if (j == 0) {
      out << mag_text;
      continue;
    }
    if (mag != Rational(1)) out << mag_text << '*';
    out << 'z' << n_;
    if (j > 1) out << '^' << j;
  }
  return first ? "0" : out.str();
}

}  // namespace acdlab
