#include <random>
#include <string>
#include <vector>

#include "ctk/analysis.hpp"
#include "ctk/dixon.hpp"
#include "ctk/permgroup.hpp"
#include "doctest.h"

using namespace ctk;

namespace {

CharacterTable table_of(const std::string& name) {
  GenSet gs = load_gens(std::string(FIXTURES_DIR) + "/" + name + ".gens");
  return character_table(enumerate(gs.generators), name);
}

bool all_pass(const std::vector<Verdict>& v) {
  for (const auto& x : v)
    if (!x.pass) return false;
  return true;
}

const Verdict& find_verdict(const std::vector<Verdict>& v,
                            const std::string& name) {
  for (const auto& x : v)
    if (x.name == name) return x;
  throw std::logic_error("no verdict named " + name);
}

}  // namespace

TEST_CASE("value classification across a table") {
  CharacterTable s3 = table_of("s3");
  auto cls = classify_table(s3);
  // degree-2 row (2, -1, 0): Other / RootOfUnity / Zero
  CHECK(cls[2][0].kind == ValueKind::Other);
  CHECK(cls[2][0].mean == 4);
  CHECK(cls[2][1].kind == ValueKind::RootOfUnity);
  CHECK(cls[2][2].kind == ValueKind::Zero);
  CHECK(cls[2][2].mean == 0);

  for (const char* name : {"q8", "es27", "m11"}) {
    CharacterTable t = table_of(name);
    auto serial = classify_table(t);
    auto parallel = classify_table_parallel(t);
    REQUIRE(serial.size() == parallel.size());
    for (size_t r = 0; r < serial.size(); ++r)
      for (size_t j = 0; j < serial[r].size(); ++j) {
        CHECK(serial[r][j].kind == parallel[r][j].kind);
        CHECK(serial[r][j].mean == parallel[r][j].mean);
      }
  }
}

TEST_CASE("theta and theta-prime") {
  SUBCASE("abelian tables give 1") {
    CHECK(theta(table_of("c6")) == 1);
    CHECK(theta_prime(table_of("c6")) == 1);
    CHECK(theta(table_of("c12")) == 1);
  }
  SUBCASE("Q8") {
    CharacterTable q8 = table_of("q8");
    CHECK(theta(q8) == make_rational(3, 4));
    CHECK(theta_prime(q8) == 1);
  }
  SUBCASE("S3") {
    CharacterTable s3 = table_of("s3");
    // degree-2 row is root-or-zero away from the identity: 5/6
    CHECK(theta(s3) == make_rational(5, 6));
    CHECK(theta_prime(s3) == 1);
  }
  SUBCASE("M11 matches the published rounding") {
    CharacterTable m11 = table_of("m11");
    Rational th = theta(m11);
    CHECK(decimal_str(th, 4) == "0.7290");
    CHECK(theta_prime(m11) == make_rational(4, 5));
    CHECK(decimal_str(theta_prime(m11), 4) == "0.8000");
  }
}

TEST_CASE("omega and root orders") {
  CHECK(omega(1) == 0);
  CHECK(omega(12) == 2);
  CHECK(omega(30) == 3);
  CHECK(omega(16) == 1);
  CHECK_THROWS_AS(omega(0), std::invalid_argument);

  CHECK(root_order(Cyclotomic::one()) == 1);
  CHECK(root_order(Cyclotomic::from_rational(-1)) == 2);
  CHECK(root_order(Cyclotomic::root_of_unity(4, 1)) == 4);
  CHECK(root_order(Cyclotomic::root_of_unity(3, 1)) == 3);
  CHECK(root_order(Cyclotomic::from_rational(-1) *
                   Cyclotomic::root_of_unity(3, 1)) == 6);
  CHECK(root_order(Cyclotomic::root_of_unity(8, 5)) == 8);
  CHECK_THROWS_AS(root_order(Cyclotomic::zero()), std::invalid_argument);
}

TEST_CASE("galois mean identities") {
  SUBCASE("Q8 column at a size-2 class") {
    CharacterTable q8 = table_of("q8");
    auto cls = classify_table(q8);
    Rational col_sum = 0;
    for (size_t r = 0; r < 5; ++r) col_sum += cls[r][2].mean;
    CHECK(col_sum == 4);  // 1+1+1+1+0 = |C(g)|
  }
  SUBCASE("identities hold exactly on computed tables") {
    for (const char* name :
         {"c4", "c6", "s3", "s4", "d4", "q8", "es27", "m16", "a5", "m11"})
      CHECK(all_pass(verify_galois_mean_identities(table_of(name))));
  }
}

TEST_CASE("classical bounds") {
  SUBCASE("hold on real tables") {
    for (const char* name : {"c6", "s3", "s4", "q8", "es27", "a5", "m11"})
      CHECK(all_pass(verify_classical_bounds(table_of(name))));
  }
  SUBCASE("violations are detected") {
    // a synthetic 3x3 value matrix with a shallow non-root value
    CharacterTable fake;
    fake.name = "fake";
    fake.group_order = 3;
    fake.class_sizes = {1, 1, 1};
    fake.element_orders = {1, 3, 3};
    fake.values = {{parse_cyc("1"), parse_cyc("1/2+1/2*E(3)"),
                    parse_cyc("1/2+1/2*E(3)")},
                   {parse_cyc("1"), parse_cyc("1"), parse_cyc("1")},
                   {parse_cyc("1"), parse_cyc("E(3)"), parse_cyc("E(3)^2")}};
    auto v = verify_classical_bounds(fake);
    CHECK_FALSE(find_verdict(v, "siegel-three-halves").pass);
    CHECK_FALSE(find_verdict(v, "theta-above-third").pass);

    CharacterTable fake2;
    fake2.name = "fake2";
    fake2.group_order = 4;
    fake2.class_sizes = {1, 1, 2};
    fake2.element_orders = {1, 2, 4};
    fake2.values = {{parse_cyc("1"), parse_cyc("1"), parse_cyc("1")},
                    {parse_cyc("1"), parse_cyc("-1"), parse_cyc("-1")},
                    {parse_cyc("2"), parse_cyc("1"), parse_cyc("-1")}};
    auto v2 = verify_classical_bounds(fake2);
    CHECK_FALSE(find_verdict(v2, "burnside-row-zero").pass);
    CHECK_FALSE(find_verdict(v2, "large-class-zero").pass);
  }
}

TEST_CASE("nilpotent theorems") {
  SUBCASE("pass on nilpotent fixtures") {
    for (const char* name : {"c12", "d4", "q8", "es27", "m16"}) {
      GenSet gs = load_gens(std::string(FIXTURES_DIR) + "/" + name + ".gens");
      GroupData g = enumerate(gs.generators);
      REQUIRE(is_nilpotent(g));
      CHECK(all_pass(verify_nilpotent_theorems(character_table(g, name), true)));
    }
  }
  SUBCASE("pass on Kronecker products of nilpotent factors") {
    CharacterTable t = direct_product(table_of("d4"), table_of("c3"));
    CHECK(all_pass(verify_nilpotent_theorems(t, true)));
    CharacterTable u = direct_product(table_of("q8"), table_of("es27"));
    CHECK(all_pass(verify_nilpotent_theorems(u, true)));
  }
  SUBCASE("rejects tables not flagged nilpotent") {
    CHECK_THROWS_AS(verify_nilpotent_theorems(table_of("s3"), false),
                    std::invalid_argument);
  }
  SUBCASE("extraspecial 27 vanishes on 24 of 27 elements") {
    AnalysisReport r = analyze(table_of("es27"), true);
    int deg3_rows = 0;
    for (const auto& c : r.per_character)
      if (c.degree == 3) {
        ++deg3_rows;
        CHECK(c.zero_elements == 24);
        CHECK(c.zero_fraction == make_rational(24, 27));
      }
    CHECK(deg3_rows == 2);
  }
}

TEST_CASE("prime power lemmas") {
  for (const char* name : {"c6", "d4", "q8", "es27", "m16", "s4", "a5"})
    CHECK(all_pass(verify_prime_power_lemmas(table_of(name))));
}

TEST_CASE("root sum congruence") {
  auto root = [](int64_t n, int64_t k) {
    return Cyclotomic::root_of_unity(n, k);
  };
  SUBCASE("textbook identities") {
    // 1 + i + i^2 + i^3 = 0: coefficient sums 4 and 0 agree mod 2
    CHECK(root_sum_congruence({1, 1, 1, 1},
                              {root(1, 0), root(4, 1), root(4, 2), root(4, 3)},
                              {}, {}, 2) == CongruenceOutcome::Holds);
    // zeta_3 + zeta_3^2 = -1: sums 2 and -1 agree mod 3
    CHECK(root_sum_congruence({1, 1}, {root(3, 1), root(3, 2)}, {-1},
                              {root(1, 0)}, 3) == CongruenceOutcome::Holds);
  }
  SUBCASE("unequal combinations are not applicable") {
    CHECK(root_sum_congruence({1}, {root(1, 0)}, {}, {}, 2) ==
          CongruenceOutcome::NotApplicable);
    CHECK(root_sum_congruence({1, 1}, {root(5, 1), root(5, 4)}, {1},
                              {root(5, 2)}, 5) ==
          CongruenceOutcome::NotApplicable);
  }
  SUBCASE("mixed root orders are rejected") {
    CHECK_THROWS_AS(root_sum_congruence({1}, {root(6, 1)}, {}, {}, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(root_sum_congruence({1}, {root(5, 1)}, {1}, {root(2, 1)},
                                        2),
                    std::invalid_argument);
  }
  SUBCASE("randomized equal pairs always satisfy the congruence") {
    std::mt19937 rng(20260822);
    for (int iter = 0; iter < 300; ++iter) {
      int64_t ps[] = {2, 3, 5};
      int64_t p = ps[rng() % 3];
      int n = 1 + static_cast<int>(rng() % 3);
      int64_t pe = 1;
      for (int i = 0; i < n; ++i) pe *= p;
      std::vector<int64_t> ca, cb;
      std::vector<Cyclotomic> ra, rb;
      // a random base combination, copied to both sides
      int base = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < base; ++i) {
        int64_t c = static_cast<int64_t>(rng() % 9) - 4;
        int64_t e = static_cast<int64_t>(rng() % pe);
        ca.push_back(c);
        ra.push_back(Cyclotomic::root_of_unity(pe, e));
        cb.push_back(c);
        rb.push_back(Cyclotomic::root_of_unity(pe, e));
      }
      // plus vanishing blocks sum_b zeta_{pe}^{e0 + b pe/p} on side b
      int blocks = 1 + static_cast<int>(rng() % 2);
      for (int i = 0; i < blocks; ++i) {
        int64_t c = static_cast<int64_t>(rng() % 7) - 3;
        int64_t e0 = static_cast<int64_t>(rng() % pe);
        for (int64_t b = 0; b < p; ++b) {
          cb.push_back(c);
          rb.push_back(Cyclotomic::root_of_unity(pe, e0 + b * (pe / p)));
        }
      }
      CAPTURE(p);
      CAPTURE(pe);
      CHECK(root_sum_congruence(ca, ra, cb, rb, p) ==
            CongruenceOutcome::Holds);
    }
  }
}

TEST_CASE("classification is Galois invariant") {
  CharacterTable m11 = table_of("m11");
  auto cls = classify_table(m11);
  for (size_t r = 0; r < m11.values.size(); ++r)
    for (size_t j = 0; j < m11.values[r].size(); ++j) {
      const Cyclotomic& v = m11.values[r][j];
      Cyclotomic w = v.galois(7);  // 7 is coprime to the exponent 1320
      ValueClass c = classify_value(w);
      CHECK(c.kind == cls[r][j].kind);
      CHECK(c.mean == cls[r][j].mean);
    }
}

TEST_CASE("analysis report and JSON") {
  SUBCASE("Q8 summary data") {
    AnalysisReport r = analyze(table_of("q8"), true);
    CHECK(r.theta == make_rational(3, 4));
    CHECK(r.theta_prime == 1);
    CHECK(r.per_character.size() == 5);
    CHECK(r.per_character[4].degree == 2);
    CHECK(r.per_character[4].omega == 1);
    CHECK(r.per_character[4].zero_elements == 6);
    CHECK(r.per_character[4].root_elements == 0);  // 2 and -2 are Other
    CHECK(r.per_class.size() == 3);
    for (const auto& c : r.per_class) {
      CHECK(c.size == 2);
      CHECK(c.root_or_zero_rows == 5);
    }
    CHECK(all_pass(r.verdicts));
  }
  SUBCASE("M11 report") {
    AnalysisReport r = analyze(table_of("m11"), false);
    CHECK(decimal_str(r.theta, 4) == "0.7290");
    CHECK(decimal_str(r.theta_prime, 4) == "0.8000");
    CHECK(all_pass(r.verdicts));
    // no nilpotent verdicts when the flag is off
    for (const auto& v : r.verdicts)
      CHECK(v.name.find("nilpotent") == std::string::npos);
  }
  SUBCASE("JSON mirrors the report deterministically") {
    AnalysisReport r = analyze(table_of("q8"), true);
    auto j = report_json(r);
    CHECK(j["name"] == "q8");
    CHECK(j["order"] == 8);
    CHECK(j["nilpotent"] == true);
    CHECK(j["theta"]["rational"] == "3/4");
    CHECK(j["theta"]["decimal"] == "0.7500000000");
    CHECK(j["theta_prime"]["rational"] == "1");
    CHECK(j["characters"].size() == 5);
    CHECK(j["classes"].size() == 3);
    for (const auto& v : j["verdicts"]) CHECK(v["pass"] == true);
    CHECK(report_json(r).dump() == j.dump());
  }
}
