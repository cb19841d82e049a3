#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace ctk {

struct PrimePower {
  int64_t p;
  int e;
  int64_t pe;  // p^e
};

bool is_prime(int64_t n);

// Prime factorization by trial division, ascending primes. n >= 1.
std::vector<PrimePower> factorize(int64_t n);

int64_t euler_phi(int64_t n);

// Number of distinct prime divisors.
int num_distinct_primes(int64_t n);

// true iff n = p^e with e >= 1; fills p and e.
bool is_prime_power(int64_t n, int64_t* p_out = nullptr, int* e_out = nullptr);

std::vector<int64_t> primes_upto(int64_t n);

// Prime powers q with lo <= q <= hi, ascending.
std::vector<int64_t> prime_powers_in(int64_t lo, int64_t hi);

int64_t pow_mod(int64_t base, int64_t exp, int64_t mod);
int64_t inv_mod(int64_t a, int64_t mod);  // gcd(a, mod) must be 1

inline int64_t mul_mod(int64_t a, int64_t b, int64_t mod) {
  return static_cast<int64_t>(static_cast<__int128>(a) * b % mod);
}

int64_t isqrt(int64_t n);

}  // namespace ctk
