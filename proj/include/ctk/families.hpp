#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ctk/analysis.hpp"
#include "ctk/chartab.hpp"
#include "ctk/rational.hpp"

namespace ctk {

// Closed-form statistics for three infinite families: the Suzuki groups
// Suz(q), the projective groups L2(q), and the alternating groups A_n.  For
// Suz and L2 nothing is enumerated; the results come from exact arithmetic
// on the known class/character census, so they reach parameters far beyond
// what the table engine could touch.  A_n is small enough to compute
// directly and doubles as an end-to-end check of the engine.

// ---------------------------------------------------------------------------
// Suz(q), q = 2^e with e odd >= 3.

struct SuzData {
  int64_t q = 0;          // field size 2^e, e odd
  int64_t r = 0;          // 2^((e+1)/2), so r^2 = 2q
  Integer group_order;    // q^2 (q-1) (q^2+1)
  std::array<int64_t, 3> a_orders{};   // |A_0|, |A_1|, |A_2|
  std::array<Integer, 3> fused_sizes{};  // |G_0|, |G_1|, |G_2|
  int64_t class_count = 0;  // q + 3
};

// Validates q and fills in the census.  Throws std::invalid_argument unless
// q = 2^e with e odd and >= 3.
SuzData suz_data(int64_t q);

// theta(Suz(q)) = 1/2 + (q+1)(q^2+2) / (2 q^2 (q^2+1)), exactly.
Rational suz_theta(int64_t q);

// theta'(Suz(q)) = 1/2 + 5 / (2(q+3)), exactly.
Rational suz_theta_prime(int64_t q);

// Cross-checks the closed forms against the census: the fused sets plus the
// three small classes fill the group, (|G| - |G_0| - 1)/|G| reproduces
// suz_theta, (q/2 + 4)/(q+3) reproduces suz_theta_prime, and elements of
// G_0 have centralizer order q-1 below the class count q+3.
std::vector<Verdict> suz_consistency(int64_t q);

// The minimizing character row takes the values gamma_s = zeta^s + zeta^-s
// (zeta of order q-1) on G_0.  Certifies that no gamma_s is zero or a root
// of unity: by exact cyclotomic classification for q <= 32, and for every q
// by the supporting congruences, which are unsolvable because q-1 is odd
// and q-1 == 1 (mod 3).
std::vector<Verdict> suz_gamma_classification(int64_t q);

// ---------------------------------------------------------------------------
// L2(q), q = p^n >= 4.  (L2(2) and L2(3) are solvable and out of scope.)

struct L2Census {
  Integer group_order;
  int64_t class_count = 0;
  Integer g0;  // elements fused into the split torus, identity excluded
  Integer g1;  // elements fused into the nonsplit torus
};

struct L2Bounds {
  Rational lb_theta;        // certified lower bound on theta
  Rational lb_theta_prime;  // certified lower bound on theta'
  L2Census census;
};

// Lower bounds from the vanishing patterns of the classical table: every
// character is root-or-zero on one of a few named element sets whose sizes
// the census supplies, and every above-average class meets all but a
// bounded block of characters in a root or a zero.  Both bounds exceed 1/2
// for every valid q.  Throws std::invalid_argument unless q >= 4 is a
// prime power.
L2Bounds l2_bounds(int64_t q);

// Checks every prime power q in [lo, hi]; returns the q whose bounds fail
// to exceed 1/2 (expected empty).  The parallel variant splits over q.
std::vector<int64_t> l2_scan(int64_t lo, int64_t hi);
std::vector<int64_t> l2_scan_parallel(int64_t lo, int64_t hi);

// ---------------------------------------------------------------------------
// A_n, 5 <= n <= 9 (enumeration-bound).

// The character table of A_n, computed from the standard generating pair.
CharacterTable alt_table(int n);

// Sorted list of the admissible values 4*m(alpha) = 1 + l_1 l_2 ... over
// partitions of n into distinct odd parts l_1 > l_2 > ...
std::vector<int64_t> alt_mean_targets(int n);

// Computes the table and certifies: theta and theta' exceed 1/2 (3/4 for
// n = 9), and every irrational value obeys the distinct-odd-partition law
// above.
std::vector<Verdict> alt_verify(int n);

}  // namespace ctk
