#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ctk/rational.hpp"

namespace ctk {

// An exact element of a cyclotomic field Q(zeta_n), held in a canonical
// integral basis of the smallest field containing it.  The stored order is
// the conductor of the value (1 for rationals) and is never congruent to
// 2 mod 4.  Values are immutable; all operations return fresh objects.
//
// Basis convention per prime power p^v dividing the order: exponents with
// p-local part in [p^(v-1), p^v) for odd p, and in [0, 2^(v-1)) for p = 2.
// This is a Zumbroich-style basis: representations are unique and the
// subfield Q(zeta_{n/p}) splits off by inspection of local digits.
class Cyclotomic {
 public:
  using Term = std::pair<int64_t, Rational>;  // (basis exponent, coefficient)

  Cyclotomic() = default;  // zero
  static Cyclotomic zero() { return Cyclotomic(); }
  static Cyclotomic one() { return from_rational(1); }
  static Cyclotomic from_rational(Rational q);
  static Cyclotomic from_rational(long n) { return from_rational(Rational(n)); }

  // zeta_n^k.  n >= 1; k arbitrary (taken mod n).
  static Cyclotomic root_of_unity(int64_t n, int64_t k);

  // Raw constructor: terms (exponent mod n, coefficient) in Q(zeta_n), not
  // necessarily in basis form; fully canonicalizes.
  static Cyclotomic from_terms(int64_t n, const std::vector<Term>& terms);

  int64_t order() const { return order_; }  // == conductor
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return order_ == 1; }
  Rational rational_value() const;  // 0 when zero; requires is_rational()

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  Cyclotomic pow(uint64_t k) const;

  // Galois automorphism zeta_n -> zeta_n^k; requires gcd(k, order) == 1.
  Cyclotomic galois(int64_t k) const;
  Cyclotomic conj() const;  // complex conjugation (k = -1)

  // Mean over all Galois automorphisms sigma of |sigma(a)|^2; a nonnegative
  // rational, equal to 1 exactly on roots of unity.
  Rational galois_mean() const;

  // Least k with a in Q(zeta_k); equals order() by canonicality.
  int64_t conductor() const { return order_; }

  // True iff a is +-zeta^k, decided by exact exponentiation to lcm(2, order).
  bool is_root_of_unity() const;

  std::complex<double> embed() const;  // zeta_n -> e^(2*pi*i/n)

  std::string str() const;

 private:
  int64_t order_ = 1;
  std::vector<Term> terms_;  // sorted by exponent, coefficients nonzero
};

enum class ValueKind { Zero, RootOfUnity, Other };

// Classification of a single value per the zero / root-of-unity / other
// trichotomy, together with its Galois mean.
struct ValueClass {
  ValueKind kind = ValueKind::Zero;
  Rational mean;
};

ValueClass classify_value(const Cyclotomic& a);

Cyclotomic parse_cyc(const std::string& text);
inline std::string render_cyc(const Cyclotomic& a) { return a.str(); }

struct CycParseError : std::runtime_error {
  size_t pos;
  CycParseError(size_t pos_, const std::string& what)
      : std::runtime_error(what), pos(pos_) {}
};

}  // namespace ctk
