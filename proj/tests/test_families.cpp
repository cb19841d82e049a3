#include <string>
#include <vector>

#include "ctk/dixon.hpp"
#include "ctk/families.hpp"
#include "ctk/permgroup.hpp"
#include "doctest.h"

using namespace ctk;

namespace {

bool all_pass(const std::vector<Verdict>& v) {
  for (const auto& x : v)
    if (!x.pass) return false;
  return true;
}

CharacterTable fixture_table(const std::string& name) {
  GenSet gs = load_gens(std::string(FIXTURES_DIR) + "/" + name + ".gens");
  return character_table(enumerate(gs.generators), name);
}

}  // namespace

TEST_CASE("Suzuki census") {
  SuzData d = suz_data(8);
  CHECK(d.r == 4);
  CHECK(d.group_order == 29120);
  CHECK(d.a_orders[0] == 7);
  CHECK(d.a_orders[1] == 13);
  CHECK(d.a_orders[2] == 5);
  CHECK(d.fused_sizes[0] == 12480);
  CHECK(d.fused_sizes[1] == 6720);
  CHECK(d.fused_sizes[2] == 5824);
  CHECK(d.class_count == 11);
  // what remains is the identity plus three classes with centralizer
  // orders q^2, 2q, 2q
  Integer residue =
      d.group_order - 1 - d.fused_sizes[0] - d.fused_sizes[1] - d.fused_sizes[2];
  CHECK(residue == 4095);
  CHECK(residue == d.group_order * (d.q + 1) / (d.q * d.q));

  SuzData d32 = suz_data(32);
  CHECK(d32.r == 8);
  CHECK(d32.group_order == 32537600);
  Integer residue32 = d32.group_order - 1 - d32.fused_sizes[0] -
                      d32.fused_sizes[1] - d32.fused_sizes[2];
  CHECK(residue32 == d32.group_order * 33 / 1024);

  for (int64_t bad : {2, 4, 7, 12, 16, 64, 100})
    CHECK_THROWS_AS(suz_data(bad), std::invalid_argument);
}

TEST_CASE("Suzuki statistics") {
  SUBCASE("closed forms at small q") {
    CHECK(suz_theta(8) == make_rational(1, 2) + make_rational(594, 8320));
    CHECK(decimal_str(suz_theta(8), 6) == "0.571394");
    CHECK(suz_theta_prime(8) == make_rational(8, 11));
    CHECK(suz_theta(32) ==
          make_rational(1, 2) + make_rational(33 * 1026, 2 * 1024 * 1025));
    CHECK(decimal_str(suz_theta(32), 6) == "0.516129");
    CHECK(suz_theta_prime(32) == make_rational(4, 7));
    CHECK(decimal_str(suz_theta_prime(32), 6) == "0.571429");
  }
  SUBCASE("both statistics decrease strictly toward 1/2") {
    Rational half = make_rational(1, 2);
    Rational last_t = 1, last_tp = 1;
    for (int e = 3; e <= 21; e += 2) {
      int64_t q = int64_t{1} << e;
      Rational t = suz_theta(q), tp = suz_theta_prime(q);
      CHECK(t > half);
      CHECK(tp > half);
      CHECK(t < last_t);
      CHECK(tp < last_tp);
      last_t = t;
      last_tp = tp;
    }
    CHECK(last_t - half < make_rational(1, 100000));
    CHECK(last_tp - half < make_rational(1, 100000));
  }
  SUBCASE("census reproduces the closed forms") {
    for (int64_t q : {8, 32, 128})
      CHECK(all_pass(suz_consistency(q)));
  }
}

TEST_CASE("Suzuki gamma values") {
  SUBCASE("exact classification at q = 8 and 32") {
    CHECK(all_pass(suz_gamma_classification(8)));
    CHECK(all_pass(suz_gamma_classification(32)));
    // gamma_1 in Q(zeta_7): conjugates 2cos(2 pi k/7), sum of squares 10
    Cyclotomic g1 =
        Cyclotomic::root_of_unity(7, 1) + Cyclotomic::root_of_unity(7, -1);
    CHECK(g1.galois_mean() == make_rational(5, 3));
    CHECK(g1.galois_mean() >= make_rational(3, 2));
  }
  SUBCASE("congruence criteria scale to large q") {
    CHECK(all_pass(suz_gamma_classification(int64_t{1} << 15)));
    CHECK(all_pass(suz_gamma_classification(int64_t{1} << 21)));
  }
}

TEST_CASE("L2 bounds and census") {
  SUBCASE("q = 4") {
    L2Bounds b = l2_bounds(4);
    CHECK(b.census.group_order == 60);
    CHECK(b.census.class_count == 5);
    CHECK(b.census.g0 == 20);
    CHECK(b.census.g1 == 24);
    CHECK(b.lb_theta == make_rational(7, 12));
    CHECK(b.lb_theta_prime == make_rational(3, 5));
  }
  SUBCASE("q = 5") {
    L2Bounds b = l2_bounds(5);
    CHECK(b.census.group_order == 60);
    CHECK(b.census.class_count == 5);
    CHECK(b.census.g0 == 15);
    CHECK(b.census.g1 == 20);
    CHECK(b.lb_theta == make_rational(7, 12));
    CHECK(b.lb_theta_prime == make_rational(3, 5));
  }
  SUBCASE("q = 7 and q = 8") {
    L2Bounds b7 = l2_bounds(7);
    CHECK(b7.census.group_order == 168);
    CHECK(b7.census.class_count == 6);
    CHECK(b7.lb_theta == make_rational(13, 21));
    CHECK(b7.lb_theta_prime == make_rational(2, 3));
    L2Bounds b8 = l2_bounds(8);
    CHECK(b8.census.group_order == 504);
    CHECK(b8.census.class_count == 9);
    CHECK(b8.census.g0 == 216);
    CHECK(b8.census.g1 == 224);
  }
  SUBCASE("classes outside both tori cover q^2 - 1 elements") {
    for (int64_t q : {4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 81, 128})
      CHECK(l2_bounds(q).census.group_order - 1 - l2_bounds(q).census.g0 -
                l2_bounds(q).census.g1 ==
            Integer(static_cast<long>(q)) * q - 1);
  }
  SUBCASE("invalid parameters") {
    for (int64_t bad : {1, 2, 3, 6, 10, 12, 100})
      CHECK_THROWS_AS(l2_bounds(bad), std::invalid_argument);
  }
}

TEST_CASE("L2 bounds are true lower bounds on computed tables") {
  // L2(4) = L2(5) = A5 and L2(9) = A6, so the engine's exact statistics
  // must dominate the bounds; for A5 both hold with equality.
  CharacterTable a5 = fixture_table("a5");
  CHECK(theta(a5) == make_rational(7, 12));
  CHECK(theta_prime(a5) == make_rational(3, 5));
  CHECK(theta(a5) >= l2_bounds(4).lb_theta);
  CHECK(theta(a5) >= l2_bounds(5).lb_theta);
  CHECK(theta_prime(a5) >= l2_bounds(4).lb_theta_prime);
  CHECK(theta_prime(a5) >= l2_bounds(5).lb_theta_prime);

  CharacterTable a6 = fixture_table("a6");
  CHECK(theta(a6) >= l2_bounds(9).lb_theta);
  CHECK(theta_prime(a6) >= l2_bounds(9).lb_theta_prime);

  // L2(7) acting on the projective line over F_7: x -> x+1 and x -> -1/x
  GroupData l27 = enumerate(
      parse_gens("domain: 8\n(0 1 2 3 4 5 6)\n(0 7)(1 6)(2 3)(4 5)\n")
          .generators);
  REQUIRE(l27.order() == 168);
  CharacterTable t = character_table(l27, "l2_7");
  CHECK(theta(t) >= l2_bounds(7).lb_theta);
  CHECK(theta_prime(t) >= l2_bounds(7).lb_theta_prime);
}

TEST_CASE("L2 sweep") {
  std::vector<int64_t> bad = l2_scan(4, 10000);
  CHECK(bad.empty());
  CHECK(l2_scan_parallel(4, 10000) == bad);
  CHECK(l2_scan(4, 500) == l2_scan_parallel(4, 500));
}

TEST_CASE("alternating partition law targets") {
  CHECK(alt_mean_targets(5) == std::vector<int64_t>{6});
  CHECK(alt_mean_targets(6) == std::vector<int64_t>{6});
  CHECK(alt_mean_targets(7) == std::vector<int64_t>{8});
  CHECK(alt_mean_targets(8) == std::vector<int64_t>{8, 16});
  CHECK(alt_mean_targets(9) == std::vector<int64_t>{10, 16});
}

TEST_CASE("alternating tables and verification") {
  SUBCASE("A5 table from the built-in generators") {
    CharacterTable t = alt_table(5);
    CHECK(t.group_order == 60);
    REQUIRE(t.num_classes() == 5);
    std::vector<int64_t> degrees;
    for (size_t r = 0; r < 5; ++r) degrees.push_back(t.degree(r));
    CHECK(degrees == std::vector<int64_t>{1, 3, 3, 4, 5});
    CHECK(validate(t).empty());
    CHECK_THROWS_AS(alt_table(4), std::invalid_argument);
    CHECK_THROWS_AS(alt_table(10), std::invalid_argument);
  }
  SUBCASE("theorem verification for n = 5..8") {
    for (int n = 5; n <= 8; ++n) {
      auto v = alt_verify(n);
      CHECK(all_pass(v));
    }
  }
  SUBCASE("A9 crosses the 3/4 threshold") {
    auto v = alt_verify(9);
    CHECK(all_pass(v));
  }
}
