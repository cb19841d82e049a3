#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ctk/chartab.hpp"
#include "json.hpp"

namespace ctk {

// Classification of every table value; rows and columns as in the table.
std::vector<std::vector<ValueClass>> classify_table(const CharacterTable& t);
std::vector<std::vector<ValueClass>> classify_table_parallel(
    const CharacterTable& t);

// theta: minimum over characters of the measure of elements where the
// character is a root of unity or zero.
Rational theta(const CharacterTable& t);

// theta': minimum over classes of at-least-average size of the fraction of
// characters taking a root-of-unity-or-zero value there.
Rational theta_prime(const CharacterTable& t);

// Number of distinct primes dividing a character degree.
int omega(int64_t degree);

// Multiplicative order of a root of unity.
int64_t root_order(const Cyclotomic& a);

struct Verdict {
  std::string name;
  bool pass = true;
  std::string detail;  // empty when the check passes
};

// Row identity sum_g m(chi(g)) = |G| and column identity
// sum_chi m(chi(g)) = |C_G(g)|, both exact.
std::vector<Verdict> verify_galois_mean_identities(const CharacterTable& t);

// Classical facts: nonlinear rows vanish somewhere, above-average classes
// meet a zero, theta and theta' exceed 1/3, and non-root non-zero values
// have conjugate mean at least 3/2.
std::vector<Verdict> verify_classical_bounds(const CharacterTable& t);

// The nilpotent theorems: zero measure above 1/2 per nonlinear row with the
// omega-refined lower bound, column majorities by class size, theta and
// theta' above 1/2, and the 2^omega mean lemma.  The caller supplies the
// nilpotency flag; a table not flagged nilpotent is rejected.
std::vector<Verdict> verify_nilpotent_theorems(const CharacterTable& t,
                                               bool nilpotent);

// Prime-power element lemmas, hypotheses checked pairwise, plus the p-group
// specialization.
std::vector<Verdict> verify_prime_power_lemmas(const CharacterTable& t);

enum class CongruenceOutcome { Holds, Fails, NotApplicable };

// For two integer combinations of roots of unity of p-power order: when the
// combinations are equal, reports whether the coefficient sums agree mod p;
// unequal combinations are NotApplicable.  Roots of mixed prime order are
// rejected.
CongruenceOutcome root_sum_congruence(const std::vector<int64_t>& coeff_a,
                                      const std::vector<Cyclotomic>& roots_a,
                                      const std::vector<int64_t>& coeff_b,
                                      const std::vector<Cyclotomic>& roots_b,
                                      int64_t p);

// Randomized exercise of the congruence: builds `count` pairs of equal
// combinations (a base combination plus vanishing blocks of p-th roots)
// over p cycling through {2, 3, 5} and returns how many failed to Hold
// (expected 0).  Deterministic for a fixed seed.
int64_t congruence_suite(int64_t count, uint64_t seed);

struct CharacterSummary {
  int64_t degree = 0;
  int omega = 0;
  int64_t zero_elements = 0;  // elements where the character vanishes
  int64_t root_elements = 0;  // elements where it is a root of unity
  Rational zero_fraction;
};

struct ClassSummary {
  int index = 0;
  int64_t size = 0;
  int64_t root_or_zero_rows = 0;
  Rational fraction;
};

struct AnalysisReport {
  std::string name;
  int64_t group_order = 0;
  bool nilpotent = false;
  Rational theta;
  Rational theta_prime;
  std::vector<CharacterSummary> per_character;
  std::vector<ClassSummary> per_class;  // at-least-average classes only
  std::vector<Verdict> verdicts;
};

// Full analysis: fractions, summaries, and all applicable verdicts.
AnalysisReport analyze(const CharacterTable& t, bool nilpotent);

// JSON document mirroring the report; rationals appear as "num/den" with a
// 10-digit decimal rendering.
nlohmann::ordered_json report_json(const AnalysisReport& r);

}  // namespace ctk
