#pragma once

#include <complex>
#include <numeric>
#include <random>

#include "ctk/cyclotomic.hpp"

namespace testsupport {

inline constexpr double kTau = 6.283185307179586476925286766559;

// A random cyclotomic value with a handful of terms.  Deterministic given the
// caller's seeded engine.
inline ctk::Cyclotomic random_value(std::mt19937_64& rng, int64_t max_order = 24,
                                    bool integer_coeffs = false) {
  std::uniform_int_distribution<int64_t> ord(1, max_order);
  int64_t n = ord(rng);
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<int64_t> expo(0, n - 1);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
  std::vector<ctk::Cyclotomic::Term> terms;
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    long d = integer_coeffs ? 1 : den(rng);
    terms.emplace_back(expo(rng), ctk::make_rational(num(rng), d));
  }
  return ctk::Cyclotomic::from_terms(n, terms);
}

// Numeric Galois mean straight from the stored representation: averages
// |sum_e c_e exp(2 pi i k e / n)|^2 over k coprime to n using doubles only.
// Independent of the exact galois/conj/mul machinery.
inline double numeric_mean(const ctk::Cyclotomic& a) {
  if (a.is_zero()) return 0.0;
  int64_t n = a.order();
  double total = 0.0;
  int count = 0;
  for (int64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    std::complex<double> z = 0.0;
    for (const auto& [e, c] : a.terms()) {
      double arg = kTau * static_cast<double>(k * e % n) / static_cast<double>(n);
      z += c.get_d() * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    total += std::norm(z);
    ++count;
  }
  return total / count;
}

}  // namespace testsupport
