#include "orelab/rational.hpp"

#include <cctype>
#include <ostream>

#include "orelab/errors.hpp"

namespace orelab {

Rational::Rational(long num, long den) {
  if (den == 0) throw MathError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw MathError("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  mpq_class q;
  // mpq_class accepts "p" and "p/q"; reject whitespace and other noise first.
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/')) {
      throw ParseError("bad rational literal: '" + std::string(text) + "'");
    }
  }
  if (q.set_str(std::string(text), 10) != 0) {
    throw ParseError("bad rational literal: '" + std::string(text) + "'");
  }
  if (sgn(q.get_den()) == 0) {
    throw ParseError("zero denominator in rational literal: '" + std::string(text) + "'");
  }
  q.canonicalize();
  return Rational(q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational inverse_factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  mpq_class q(1, 1);
  q /= f;
  return Rational(q);
}

}  // namespace orelab
