#include "ctk/rational.hpp"

namespace ctk {

namespace {

// Nearest integer to num/den, ties away from zero. den > 0.
Integer div_round(const Integer& num, const Integer& den) {
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Integer twice = 2 * abs(r);
  if (twice >= den) q += (num < 0) ? -1 : 1;
  return q;
}

}  // namespace

std::string decimal_str(const Rational& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer scaled = div_round(q.get_num() * scale, q.get_den());
  bool neg = scaled < 0;
  std::string body = Integer(abs(scaled)).get_str();
  if (body.size() <= static_cast<size_t>(digits))
    body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
  body.insert(body.size() - static_cast<size_t>(digits), ".");
  return neg ? "-" + body : body;
}

Rational round_decimal(const Rational& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational r(div_round(q.get_num() * scale, q.get_den()), scale);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Rational q{Integer(text)};
      return q;
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

}  // namespace ctk
