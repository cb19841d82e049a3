#include "ctk/numtheory.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace ctk {

bool is_prime(int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<PrimePower> factorize(int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<PrimePower> out;
  for (int64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p) continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.e;
      pp.pe *= p;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

int64_t euler_phi(int64_t n) {
  int64_t phi = 1;
  for (const auto& pp : factorize(n)) phi *= pp.pe / pp.p * (pp.p - 1);
  return phi;
}

int num_distinct_primes(int64_t n) {
  return static_cast<int>(factorize(n).size());
}

bool is_prime_power(int64_t n, int64_t* p_out, int* e_out) {
  if (n < 2) return false;
  auto f = factorize(n);
  if (f.size() != 1) return false;
  if (p_out) *p_out = f[0].p;
  if (e_out) *e_out = f[0].e;
  return true;
}

std::vector<int64_t> primes_upto(int64_t n) {
  std::vector<bool> sieve(static_cast<size_t>(n < 0 ? 0 : n) + 1, true);
  std::vector<int64_t> out;
  for (int64_t i = 2; i <= n; ++i) {
    if (!sieve[static_cast<size_t>(i)]) continue;
    out.push_back(i);
    for (int64_t j = i * i; j <= n; j += i) sieve[static_cast<size_t>(j)] = false;
  }
  return out;
}

std::vector<int64_t> prime_powers_in(int64_t lo, int64_t hi) {
  std::vector<int64_t> out;
  for (int64_t p : primes_upto(hi)) {
    for (int64_t q = p; q <= hi; ) {
      if (q >= lo) out.push_back(q);
      if (q > hi / p) break;
      q *= p;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int64_t pow_mod(int64_t base, int64_t exp, int64_t mod) {
  assert(exp >= 0 && mod > 0);
  int64_t r = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return r;
}

int64_t inv_mod(int64_t a, int64_t mod) {
  int64_t t = 0, nt = 1, r = mod, nr = a % mod;
  if (nr < 0) nr += mod;
  while (nr != 0) {
    int64_t q = r / nr;
    t -= q * nt; std::swap(t, nt);
    r -= q * nr; std::swap(r, nr);
  }
  if (r != 1) throw std::invalid_argument("inv_mod: not invertible");
  return t < 0 ? t + mod : t;
}

int64_t isqrt(int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative");
  int64_t r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace ctk
