#include "acdlab/rational.hpp"

#include "acdlab/errors.hpp"

namespace acdlab {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(mpz_class(num), mpz_class(den));
  q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw InputError("not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return Rational(q);
}

std::string Rational::to_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

}  // namespace acdlab
