#include "ctk/analysis.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "ctk/numtheory.hpp"

namespace ctk {

std::vector<std::vector<ValueClass>> classify_table(const CharacterTable& t) {
  std::vector<std::vector<ValueClass>> out(t.values.size());
  for (size_t r = 0; r < t.values.size(); ++r) {
    out[r].reserve(t.values[r].size());
    for (const auto& v : t.values[r]) out[r].push_back(classify_value(v));
  }
  return out;
}

std::vector<std::vector<ValueClass>> classify_table_parallel(
    const CharacterTable& t) {
  const int n = static_cast<int>(t.values.size());
  std::vector<std::vector<ValueClass>> out(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < n; ++r) {
    const auto& row = t.values[static_cast<size_t>(r)];
    std::vector<ValueClass> c;
    c.reserve(row.size());
    for (const auto& v : row) c.push_back(classify_value(v));
    out[static_cast<size_t>(r)] = std::move(c);
  }
  return out;
}

namespace {

using Classification = std::vector<std::vector<ValueClass>>;

bool root_or_zero(const ValueClass& c) { return c.kind != ValueKind::Other; }

Rational theta_from(const CharacterTable& t, const Classification& cls) {
  if (t.values.empty()) throw std::invalid_argument("empty table");
  Rational best;
  bool first = true;
  for (size_t r = 0; r < t.values.size(); ++r) {
    int64_t measure = 0;
    for (size_t j = 0; j < t.values[r].size(); ++j)
      if (root_or_zero(cls[r][j])) measure += t.class_sizes[j];
    Rational f = make_rational(measure, t.group_order);
    if (first || f < best) {
      best = f;
      first = false;
    }
  }
  return best;
}

Rational theta_prime_from(const CharacterTable& t, const Classification& cls) {
  const int64_t k = static_cast<int64_t>(t.class_sizes.size());
  Rational best;
  bool first = true;
  for (size_t j = 0; j < t.class_sizes.size(); ++j) {
    if (t.class_sizes[j] * k < t.group_order) continue;
    int64_t count = 0;
    for (size_t r = 0; r < t.values.size(); ++r)
      if (root_or_zero(cls[r][j])) ++count;
    Rational f = make_rational(count, k);
    if (first || f < best) {
      best = f;
      first = false;
    }
  }
  if (first)
    throw std::logic_error(
        "no class of at-least-average size; the largest class always "
        "qualifies");
  return best;
}

}  // namespace

Rational theta(const CharacterTable& t) {
  return theta_from(t, classify_table_parallel(t));
}

Rational theta_prime(const CharacterTable& t) {
  return theta_prime_from(t, classify_table_parallel(t));
}

int omega(int64_t degree) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  return num_distinct_primes(degree);
}

int64_t root_order(const Cyclotomic& a) {
  if (!a.is_root_of_unity())
    throw std::invalid_argument("not a root of unity");
  int64_t f = a.order();
  if (a.pow(static_cast<uint64_t>(f)) == Cyclotomic::one()) return f;
  return 2 * f;
}

std::vector<Verdict> verify_galois_mean_identities(const CharacterTable& t) {
  Classification cls = classify_table_parallel(t);
  Verdict row{"mean-row-identity"};
  Verdict col{"mean-column-identity"};
  for (size_t r = 0; r < t.values.size(); ++r) {
    Rational sum = 0;
    for (size_t j = 0; j < t.values[r].size(); ++j)
      sum += Rational(t.class_sizes[j]) * cls[r][j].mean;
    if (sum != t.group_order && row.pass) {
      row.pass = false;
      row.detail = "row " + std::to_string(r) + ": sum of means is " +
                   rational_str(sum) + ", group order is " +
                   std::to_string(t.group_order);
    }
  }
  for (size_t j = 0; j < t.class_sizes.size(); ++j) {
    Rational sum = 0;
    for (size_t r = 0; r < t.values.size(); ++r) sum += cls[r][j].mean;
    Rational want = make_rational(t.group_order, t.class_sizes[j]);
    if (sum != want && col.pass) {
      col.pass = false;
      col.detail = "column " + std::to_string(j) + ": sum of means is " +
                   rational_str(sum) + ", centralizer order is " +
                   rational_str(want);
    }
  }
  return {row, col};
}

std::vector<Verdict> verify_classical_bounds(const CharacterTable& t) {
  Classification cls = classify_table_parallel(t);
  const int64_t k = static_cast<int64_t>(t.class_sizes.size());
  Verdict burnside{"burnside-row-zero"};
  Verdict bigclass{"large-class-zero"};
  Verdict th{"theta-above-third"};
  Verdict thp{"theta-prime-above-third"};
  Verdict siegel{"siegel-three-halves"};

  for (size_t r = 0; r < t.values.size(); ++r) {
    if (t.degree(static_cast<int>(r)) == 1) continue;
    bool has_zero = false;
    for (size_t j = 0; j < t.values[r].size(); ++j)
      if (cls[r][j].kind == ValueKind::Zero) {
        has_zero = true;
        break;
      }
    if (!has_zero && burnside.pass) {
      burnside.pass = false;
      burnside.detail = "nonlinear row " + std::to_string(r) + " never vanishes";
    }
  }

  for (size_t j = 0; j < t.class_sizes.size(); ++j) {
    if (t.class_sizes[j] * k <= t.group_order) continue;
    bool has_zero = false;
    for (size_t r = 0; r < t.values.size(); ++r)
      if (cls[r][j].kind == ValueKind::Zero) {
        has_zero = true;
        break;
      }
    if (!has_zero && bigclass.pass) {
      bigclass.pass = false;
      bigclass.detail =
          "above-average class " + std::to_string(j) + " meets no zero";
    }
  }

  Rational third = make_rational(1, 3);
  Rational tv = theta_from(t, cls);
  if (!(tv > third)) {
    th.pass = false;
    th.detail = "theta = " + rational_str(tv);
  }
  Rational tpv = theta_prime_from(t, cls);
  if (!(tpv > third)) {
    thp.pass = false;
    thp.detail = "theta' = " + rational_str(tpv);
  }

  Rational three_halves = make_rational(3, 2);
  for (size_t r = 0; r < t.values.size(); ++r)
    for (size_t j = 0; j < t.values[r].size(); ++j)
      if (cls[r][j].kind == ValueKind::Other &&
          cls[r][j].mean < three_halves && siegel.pass) {
        siegel.pass = false;
        siegel.detail = "value at row " + std::to_string(r) + ", class " +
                        std::to_string(j) + " has mean " +
                        rational_str(cls[r][j].mean);
      }

  return {burnside, bigclass, th, thp, siegel};
}

std::vector<Verdict> verify_nilpotent_theorems(const CharacterTable& t,
                                               bool nilpotent) {
  if (!nilpotent)
    throw std::invalid_argument(
        "nilpotent theorem checks require a table flagged nilpotent");
  Classification cls = classify_table_parallel(t);
  const int64_t k = static_cast<int64_t>(t.class_sizes.size());
  const int64_t G = t.group_order;

  Verdict zm{"nilpotent-zero-measure"};
  Verdict ob{"nilpotent-omega-bound"};
  Verdict cmaj{"nilpotent-column-majority"};
  Verdict chalf{"nilpotent-column-half"};
  Verdict tv{"nilpotent-theta-half"};
  Verdict tpv{"nilpotent-theta-prime-half"};
  Verdict mp{"nilpotent-mean-power"};

  std::vector<size_t> nonlinear;
  for (size_t r = 0; r < t.values.size(); ++r)
    if (t.degree(static_cast<int>(r)) > 1) nonlinear.push_back(r);

  for (size_t r : nonlinear) {
    int64_t zeros = 0;
    for (size_t j = 0; j < t.values[r].size(); ++j)
      if (cls[r][j].kind == ValueKind::Zero) zeros += t.class_sizes[j];
    if (2 * zeros <= G && zm.pass) {
      zm.pass = false;
      zm.detail = "row " + std::to_string(r) + ": zero measure " +
                  std::to_string(zeros) + "/" + std::to_string(G);
    }
    int64_t d = t.degree(static_cast<int>(r));
    int64_t pw = int64_t{1} << omega(d);
    // zeros/G >= 1 - (G - d^2 + 2^w) / (2^w * G), cross-multiplied
    if (zeros * pw < (pw - 1) * G + d * d - pw && ob.pass) {
      ob.pass = false;
      ob.detail = "row " + std::to_string(r) + ": zero measure " +
                  std::to_string(zeros) + "/" + std::to_string(G) +
                  " misses the omega bound";
    }
  }

  const int64_t n = static_cast<int64_t>(nonlinear.size());
  for (size_t j = 0; j < t.class_sizes.size(); ++j) {
    int64_t zn = 0;
    for (size_t r : nonlinear)
      if (cls[r][j].kind == ValueKind::Zero) ++zn;
    int64_t lhs = t.class_sizes[j] * k;
    if (lhs > G && 2 * zn <= n && cmaj.pass) {
      cmaj.pass = false;
      cmaj.detail = "above-average class " + std::to_string(j) +
                    ": zeros in " + std::to_string(zn) + " of " +
                    std::to_string(n) + " nonlinear rows";
    }
    if (lhs == G && 2 * zn < n && chalf.pass) {
      chalf.pass = false;
      chalf.detail = "average-size class " + std::to_string(j) +
                     ": zeros in " + std::to_string(zn) + " of " +
                     std::to_string(n) + " nonlinear rows";
    }
  }

  Rational half = make_rational(1, 2);
  Rational th = theta_from(t, cls);
  if (!(th > half)) {
    tv.pass = false;
    tv.detail = "theta = " + rational_str(th);
  }
  Rational thp = theta_prime_from(t, cls);
  if (!(thp > half)) {
    tpv.pass = false;
    tpv.detail = "theta' = " + rational_str(thp);
  }

  for (size_t r = 0; r < t.values.size(); ++r) {
    Rational floor{int64_t{1} << omega(t.degree(static_cast<int>(r)))};
    for (size_t j = 0; j < t.values[r].size(); ++j)
      if (cls[r][j].kind != ValueKind::Zero && cls[r][j].mean < floor &&
          mp.pass) {
        mp.pass = false;
        mp.detail = "row " + std::to_string(r) + ", class " +
                    std::to_string(j) + ": mean " +
                    rational_str(cls[r][j].mean) + " below " +
                    rational_str(floor);
      }
  }

  return {zm, ob, cmaj, chalf, tv, tpv, mp};
}

std::vector<Verdict> verify_prime_power_lemmas(const CharacterTable& t) {
  Classification cls = classify_table_parallel(t);
  Verdict pm{"prime-power-mean"};
  Verdict nr{"prime-power-nonroot"};
  Verdict pg{"p-group-mean"};
  Rational two{2};

  for (size_t j = 0; j < t.class_sizes.size(); ++j) {
    int64_t p = 0;
    int e = 0;
    if (!is_prime_power(t.element_orders[j], &p, &e)) continue;
    for (size_t r = 0; r < t.values.size(); ++r) {
      int64_t d = t.degree(static_cast<int>(r));
      int64_t dm = d % p;
      bool not_pm_two = dm != 2 % p && dm != (p - 2) % p;
      if ((p == 2 || not_pm_two) && cls[r][j].kind == ValueKind::Other &&
          cls[r][j].mean < two && pm.pass) {
        pm.pass = false;
        pm.detail = "row " + std::to_string(r) + ", class " +
                    std::to_string(j) + " (order " +
                    std::to_string(t.element_orders[j]) + "): mean " +
                    rational_str(cls[r][j].mean);
      }
      bool not_pm_one = dm != 1 % p && dm != (p - 1) % p;
      if (not_pm_one && cls[r][j].kind == ValueKind::RootOfUnity && nr.pass) {
        nr.pass = false;
        nr.detail = "row " + std::to_string(r) + ", class " +
                    std::to_string(j) +
                    ": root of unity despite degree " + std::to_string(d);
      }
    }
  }

  if (is_prime_power(t.group_order)) {
    for (size_t r = 0; r < t.values.size(); ++r) {
      if (t.degree(static_cast<int>(r)) == 1) continue;
      for (size_t j = 0; j < t.values[r].size(); ++j)
        if (cls[r][j].kind != ValueKind::Zero && cls[r][j].mean < two &&
            pg.pass) {
          pg.pass = false;
          pg.detail = "row " + std::to_string(r) + ", class " +
                      std::to_string(j) + ": mean " +
                      rational_str(cls[r][j].mean);
        }
    }
  }

  return {pm, nr, pg};
}

CongruenceOutcome root_sum_congruence(const std::vector<int64_t>& coeff_a,
                                      const std::vector<Cyclotomic>& roots_a,
                                      const std::vector<int64_t>& coeff_b,
                                      const std::vector<Cyclotomic>& roots_b,
                                      int64_t p) {
  if (coeff_a.size() != roots_a.size() || coeff_b.size() != roots_b.size())
    throw std::invalid_argument("coefficient and root lists differ in length");
  if (p < 2) throw std::invalid_argument("modulus must be a prime");
  auto check = [&](const std::vector<Cyclotomic>& roots) {
    for (const auto& root : roots) {
      int64_t m = root_order(root);
      while (m % p == 0) m /= p;
      if (m != 1)
        throw std::invalid_argument(
            "root order is not a power of the given prime");
    }
  };
  check(roots_a);
  check(roots_b);

  Cyclotomic sa, sb;
  for (size_t i = 0; i < roots_a.size(); ++i)
    sa = sa + Cyclotomic::from_rational(coeff_a[i]) * roots_a[i];
  for (size_t i = 0; i < roots_b.size(); ++i)
    sb = sb + Cyclotomic::from_rational(coeff_b[i]) * roots_b[i];
  if (!(sa == sb)) return CongruenceOutcome::NotApplicable;

  int64_t ta = 0, tb = 0;
  for (int64_t c : coeff_a) ta += c;
  for (int64_t c : coeff_b) tb += c;
  return ((ta - tb) % p + p) % p == 0 ? CongruenceOutcome::Holds
                                      : CongruenceOutcome::Fails;
}

int64_t congruence_suite(int64_t count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  int64_t failures = 0;
  const int64_t ps[3] = {2, 3, 5};
  for (int64_t i = 0; i < count; ++i) {
    int64_t p = ps[i % 3];
    int n = 1 + static_cast<int>(rng() % 3);
    int64_t pe = 1;
    for (int j = 0; j < n; ++j) pe *= p;
    std::vector<int64_t> ca, cb;
    std::vector<Cyclotomic> ra, rb;
    int base = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < base; ++j) {
      int64_t c = static_cast<int64_t>(rng() % 9) - 4;
      int64_t e = static_cast<int64_t>(rng() % pe);
      ca.push_back(c);
      ra.push_back(Cyclotomic::root_of_unity(pe, e));
      cb.push_back(c);
      rb.push_back(Cyclotomic::root_of_unity(pe, e));
    }
    // vanishing blocks c * sum_b zeta_pe^(e0 + b pe/p) keep the sides equal
    int blocks = 1 + static_cast<int>(rng() % 2);
    for (int j = 0; j < blocks; ++j) {
      int64_t c = static_cast<int64_t>(rng() % 7) - 3;
      int64_t e0 = static_cast<int64_t>(rng() % pe);
      for (int64_t b = 0; b < p; ++b) {
        cb.push_back(c);
        rb.push_back(Cyclotomic::root_of_unity(pe, e0 + b * (pe / p)));
      }
    }
    if (root_sum_congruence(ca, ra, cb, rb, p) != CongruenceOutcome::Holds)
      ++failures;
  }
  return failures;
}

AnalysisReport analyze(const CharacterTable& t, bool nilpotent) {
  AnalysisReport r;
  r.name = t.name;
  r.group_order = t.group_order;
  r.nilpotent = nilpotent;

  Classification cls = classify_table_parallel(t);
  r.theta = theta_from(t, cls);
  r.theta_prime = theta_prime_from(t, cls);

  for (size_t row = 0; row < t.values.size(); ++row) {
    CharacterSummary cs;
    cs.degree = t.degree(static_cast<int>(row));
    cs.omega = omega(cs.degree);
    for (size_t j = 0; j < t.values[row].size(); ++j) {
      if (cls[row][j].kind == ValueKind::Zero)
        cs.zero_elements += t.class_sizes[j];
      else if (cls[row][j].kind == ValueKind::RootOfUnity)
        cs.root_elements += t.class_sizes[j];
    }
    cs.zero_fraction = make_rational(cs.zero_elements, t.group_order);
    r.per_character.push_back(std::move(cs));
  }

  const int64_t k = static_cast<int64_t>(t.class_sizes.size());
  for (size_t j = 0; j < t.class_sizes.size(); ++j) {
    if (t.class_sizes[j] * k < t.group_order) continue;
    ClassSummary s;
    s.index = static_cast<int>(j);
    s.size = t.class_sizes[j];
    for (size_t row = 0; row < t.values.size(); ++row)
      if (root_or_zero(cls[row][j])) ++s.root_or_zero_rows;
    s.fraction = make_rational(s.root_or_zero_rows, k);
    r.per_class.push_back(std::move(s));
  }

  auto append = [&](std::vector<Verdict> v) {
    for (auto& x : v) r.verdicts.push_back(std::move(x));
  };
  append(verify_galois_mean_identities(t));
  append(verify_classical_bounds(t));
  append(verify_prime_power_lemmas(t));
  if (nilpotent) append(verify_nilpotent_theorems(t, true));
  return r;
}

namespace {

nlohmann::ordered_json rational_json(const Rational& q) {
  return nlohmann::ordered_json{{"rational", rational_str(q)},
                                {"decimal", decimal_str(q, 10)}};
}

}  // namespace

nlohmann::ordered_json report_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["order"] = r.group_order;
  j["nilpotent"] = r.nilpotent;
  j["theta"] = rational_json(r.theta);
  j["theta_prime"] = rational_json(r.theta_prime);
  j["characters"] = nlohmann::ordered_json::array();
  for (const auto& c : r.per_character)
    j["characters"].push_back(nlohmann::ordered_json{
        {"degree", c.degree},
        {"omega", c.omega},
        {"zero_elements", c.zero_elements},
        {"root_elements", c.root_elements},
        {"zero_fraction", rational_json(c.zero_fraction)}});
  j["classes"] = nlohmann::ordered_json::array();
  for (const auto& c : r.per_class)
    j["classes"].push_back(nlohmann::ordered_json{
        {"index", c.index},
        {"size", c.size},
        {"root_or_zero_rows", c.root_or_zero_rows},
        {"fraction", rational_json(c.fraction)}});
  j["verdicts"] = nlohmann::ordered_json::array();
  for (const auto& v : r.verdicts)
    j["verdicts"].push_back(nlohmann::ordered_json{
        {"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
  return j;
}

}  // namespace ctk
