#include "ctk/families.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "ctk/cyclotomic.hpp"
#include "ctk/dixon.hpp"
#include "ctk/numtheory.hpp"
#include "ctk/permgroup.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ctk {

namespace {

Rational frac(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

void check(std::vector<Verdict>& out, const std::string& name, bool ok,
           const std::string& fail_detail) {
  Verdict v;
  v.name = name;
  v.pass = ok;
  if (!ok) v.detail = fail_detail;
  out.push_back(std::move(v));
}

}  // namespace

// ---------------------------------------------------------------------------
// Suz(q)

SuzData suz_data(int64_t q) {
  int64_t p = 0;
  int e = 0;
  if (q < 8 || !is_prime_power(q, &p, &e) || p != 2 || e % 2 == 0)
    throw std::invalid_argument("Suz parameter must be 2^e with odd e >= 3");
  SuzData d;
  d.q = q;
  d.r = int64_t{1} << ((e + 1) / 2);
  Integer qz(static_cast<long>(q));
  d.group_order = qz * qz * (qz - 1) * (qz * qz + 1);
  d.a_orders = {q - 1, q + d.r + 1, q - d.r + 1};
  const int64_t l[3] = {2, 4, 4};
  for (int i = 0; i < 3; ++i) {
    Integer ai(static_cast<long>(d.a_orders[i]));
    d.fused_sizes[i] = (ai - 1) / l[i] * (d.group_order / ai);
  }
  d.class_count = q + 3;
  return d;
}

Rational suz_theta(int64_t q) {
  suz_data(q);  // validate
  Integer qz(static_cast<long>(q));
  Integer q2 = qz * qz;
  return make_rational(1, 2) + frac((qz + 1) * (q2 + 2), 2 * q2 * (q2 + 1));
}

Rational suz_theta_prime(int64_t q) {
  suz_data(q);  // validate
  return make_rational(1, 2) + make_rational(5, 2 * (q + 3));
}

std::vector<Verdict> suz_consistency(int64_t q) {
  SuzData d = suz_data(q);
  std::vector<Verdict> out;
  Integer qz(static_cast<long>(q));

  // |G| factors as q^2 (q-1) (q-r+1) (q+r+1) since (q+1)^2 - r^2 = q^2 + 1.
  Integer alt = qz * qz * (qz - 1) * (qz - d.r + 1) * (qz + d.r + 1);
  check(out, "suz-order-factorization", alt == d.group_order,
        "q^2(q-1)(q-r+1)(q+r+1) != q^2(q-1)(q^2+1)");

  // The fused sets plus the identity leave room for the three small classes.
  Integer covered = 1 + d.fused_sizes[0] + d.fused_sizes[1] + d.fused_sizes[2];
  check(out, "suz-census-residue", covered < d.group_order,
        "fused sets already fill the group");

  // Row count: the minimizing row is root-or-zero off G_0 and the identity.
  Rational row = frac(d.group_order - d.fused_sizes[0] - 1, d.group_order);
  check(out, "suz-theta-census", row == suz_theta(q),
        "(|G|-|G_0|-1)/|G| != closed form, q=" + std::to_string(q));

  // Column count: a G_0 column is root-or-zero in q/2 + 4 of q+3 rows.
  Rational col = make_rational(q / 2 + 4, q + 3);
  check(out, "suz-theta-prime-census", col == suz_theta_prime(q),
        "(q/2+4)/(q+3) != closed form, q=" + std::to_string(q));

  // G_0 columns qualify: their centralizer order stays below the class count.
  check(out, "suz-centralizer-count", q - 1 < d.class_count,
        "centralizer order q-1 reaches the class count");
  return out;
}

std::vector<Verdict> suz_gamma_classification(int64_t q) {
  suz_data(q);  // validate
  std::vector<Verdict> out;
  const int64_t m = q - 1;

  // gamma_s = 0 would need 4s == +-m (mod 2m), impossible with m odd; scan
  // one full period as well while that stays cheap.
  bool zero_free = (m % 2 == 1);
  for (int64_t s = 0; zero_free && 2 * m <= 300000 && s < 2 * m; ++s)
    if ((4 * s + m) % (2 * m) == 0 || (4 * s - m) % (2 * m) == 0)
      zero_free = false;
  check(out, "gamma-zero-criterion", zero_free,
        "4s = +-(q-1) mod 2(q-1) has a solution");

  // |gamma_s| = 1 would need 6s == +-m (mod 3m), impossible since 3 | 6s
  // but m == 1 (mod 3).
  bool root_free = (m % 3 == 1);
  for (int64_t s = 0; root_free && 3 * m <= 300000 && s < 3 * m; ++s)
    if ((6 * s + m) % (3 * m) == 0 || (6 * s - m) % (3 * m) == 0)
      root_free = false;
  check(out, "gamma-root-criterion", root_free,
        "6s = +-(q-1) mod 3(q-1) has a solution");

  if (q <= 32) {
    bool all_other = true;
    std::string detail;
    for (int64_t s = 1; s < m && all_other; ++s) {
      Cyclotomic g =
          Cyclotomic::root_of_unity(m, s) + Cyclotomic::root_of_unity(m, -s);
      ValueClass c = classify_value(g);
      if (c.kind != ValueKind::Other || c.mean < make_rational(3, 2)) {
        all_other = false;
        detail = "gamma_" + std::to_string(s) + " classifies as " +
                 (c.kind == ValueKind::Zero ? "zero" : "a root of unity");
      }
    }
    check(out, "gamma-exact-values", all_other, detail);
  }
  return out;
}

// ---------------------------------------------------------------------------
// L2(q)

L2Bounds l2_bounds(int64_t q) {
  int64_t p = 0;
  int e = 0;
  if (q < 4 || !is_prime_power(q, &p, &e))
    throw std::invalid_argument("L2 parameter must be a prime power >= 4");
  Integer qz(static_cast<long>(q));
  L2Bounds b;
  if (p != 2) {
    b.census.group_order = qz * (qz * qz - 1) / 2;
    b.census.class_count = (q + 5) / 2;
    b.census.g0 = qz * (qz + 1) * (qz - 3) / 4;
    b.census.g1 = b.census.g0 + qz;
    // Two further classes a, b of centralizer order q; every character is
    // root-or-zero on G_0 u G_1, or on a^G u b^G plus one of G_0, G_1.
    Integer ab = 2 * (b.census.group_order / qz);
    b.lb_theta = std::min(frac(b.census.g0 + b.census.g1, b.census.group_order),
                          frac(ab + b.census.g0, b.census.group_order));
    // Columns: a and b meet (q+1)/2 of the (q+5)/2 rows in a root or zero;
    // G_0 misses at most the (q-3)/4 rows of degree q+1, G_1 at most the
    // (q-1)/4 rows of degree q-1.
    b.lb_theta_prime =
        std::min({make_rational(q + 1, q + 5),
                  Rational(1 - make_rational(q - 3, 2 * (q + 5))),
                  Rational(1 - make_rational(q - 1, 2 * (q + 5)))});
  } else {
    b.census.group_order = qz * (qz * qz - 1);
    b.census.class_count = q + 1;
    b.census.g0 = qz * (qz + 1) * (qz - 2) / 2;
    b.census.g1 = qz * qz * (qz - 1) / 2;
    // One further class a of size q^2 - 1.  The q/2 characters of degree
    // q-1 vanish on all of G_0 and are root-or-zero on a^G.
    Integer a = qz * qz - 1;
    b.lb_theta = frac(b.census.g0 + a, b.census.group_order);
    // The worst column is in G_1, root-or-zero in q/2 + 1 of q + 1 rows.
    b.lb_theta_prime = make_rational(q + 2, 2 * (q + 1));
  }
  return b;
}

namespace {

bool l2_ok(int64_t q) {
  L2Bounds b = l2_bounds(q);
  Rational half = make_rational(1, 2);
  return b.lb_theta > half && b.lb_theta_prime > half;
}

}  // namespace

std::vector<int64_t> l2_scan(int64_t lo, int64_t hi) {
  std::vector<int64_t> bad;
  for (int64_t q : prime_powers_in(std::max<int64_t>(lo, 4), hi))
    if (!l2_ok(q)) bad.push_back(q);
  return bad;
}

std::vector<int64_t> l2_scan_parallel(int64_t lo, int64_t hi) {
  std::vector<int64_t> qs = prime_powers_in(std::max<int64_t>(lo, 4), hi);
  std::vector<int64_t> bad;
#pragma omp parallel
  {
    std::vector<int64_t> local;
#pragma omp for schedule(dynamic, 64) nowait
    for (int64_t i = 0; i < static_cast<int64_t>(qs.size()); ++i)
      if (!l2_ok(qs[i])) local.push_back(qs[i]);
#pragma omp critical
    bad.insert(bad.end(), local.begin(), local.end());
  }
  std::sort(bad.begin(), bad.end());
  return bad;
}

// ---------------------------------------------------------------------------
// A_n

CharacterTable alt_table(int n) {
  if (n < 5 || n > 9)
    throw std::invalid_argument("alternating degree must be in [5, 9]");
  // 3-cycle plus a long cycle: an n-cycle for odd n, an (n-1)-cycle fixing
  // the first point for even n.
  std::string text = "domain: " + std::to_string(n) + "\n(0 1 2)\n(";
  for (int i = (n % 2 == 1 ? 0 : 1); i < n; ++i)
    text += std::to_string(i) + (i + 1 < n ? " " : ")");
  GroupData g = enumerate(parse_gens(text).generators);
  int64_t half_factorial = 1;
  for (int i = 3; i <= n; ++i) half_factorial *= i;
  if (g.order() != half_factorial)
    throw std::logic_error("generators did not produce the alternating group");
  return character_table(g, "a" + std::to_string(n));
}

namespace {

void odd_products(int remaining, int max_part, int64_t prod,
                  std::vector<int64_t>& out) {
  if (remaining == 0) {
    out.push_back(1 + prod);
    return;
  }
  int start = std::min(max_part, remaining);
  if (start % 2 == 0) --start;  // parts are odd
  for (int part = start; part >= 1; part -= 2)
    odd_products(remaining - part, part - 2, prod * part, out);
}

}  // namespace

std::vector<int64_t> alt_mean_targets(int n) {
  std::vector<int64_t> out;
  odd_products(n, n, 1, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Verdict> alt_verify(int n) {
  CharacterTable t = alt_table(n);
  std::vector<Verdict> out;
  Rational cut = n < 9 ? make_rational(1, 2) : make_rational(3, 4);
  std::string bound = n < 9 ? "1/2" : "3/4";
  check(out, "alt-theta", theta(t) > cut,
        "theta(A_n) fails to exceed " + bound);
  check(out, "alt-theta-prime", theta_prime(t) > cut,
        "theta'(A_n) fails to exceed " + bound);

  // Away from rational integers, 4 m(alpha) = 1 + product of a partition
  // of n into distinct odd parts.
  std::vector<int64_t> targets = alt_mean_targets(n);
  bool law = true;
  std::string detail;
  for (const auto& row : t.values)
    for (const Cyclotomic& v : row) {
      if (v.is_rational()) continue;
      Rational four_mean = 4 * v.galois_mean();
      bool hit = false;
      for (int64_t target : targets)
        if (four_mean == target) hit = true;
      if (!hit && law) {
        law = false;
        detail = "4 m(" + v.str() + ") = " + rational_str(four_mean) +
                 " is not in the partition law set";
      }
    }
  check(out, "alt-irrational-law", law, detail);
  return out;
}

}  // namespace ctk
