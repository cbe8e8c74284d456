#include "s3cover/rational.hpp"

#include <ostream>

namespace s3cover {

namespace {

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty())
    throw ArithmeticError("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size())
    throw ArithmeticError("malformed integer literal '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9')
      throw ArithmeticError("malformed integer literal '" + s + "'");
  if (s[0] == '+')
    s.erase(0, 1);
  return mpz_class(s, 10);
}

} // namespace

Rational::Rational(std::int64_t n) {
  // mpz has no int64 constructor on every platform; go through the string path
  // only when long is narrower than int64.
  if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
    value_ = mpq_class(mpz_class(static_cast<long>(n)));
  } else {
    value_ = mpq_class(mpz_class(std::to_string(n), 10));
  }
}

Rational Rational::make(const mpz_class &num, const mpz_class &den) {
  if (den == 0)
    throw ArithmeticError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  return make(Rational(num).numerator(), Rational(den).numerator());
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return make(parse_integer(text), mpz_class(1));
  return make(parse_integer(text.substr(0, slash)),
              parse_integer(text.substr(slash + 1)));
}

std::string Rational::str() const {
  if (is_integer())
    return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational &Rational::operator+=(const Rational &rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational &Rational::operator-=(const Rational &rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational &Rational::operator*=(const Rational &rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational &Rational::operator/=(const Rational &rhs) {
  if (rhs.is_zero())
    throw ArithmeticError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

} // namespace s3cover
