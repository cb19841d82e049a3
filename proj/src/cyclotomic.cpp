#include "ctk/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "ctk/numtheory.hpp"

namespace ctk {
namespace {

// Per-prime data for the ambient order n.  The local digit of an exponent e
// is the exponent of zeta_{p^v} in the tensor decomposition of zeta_n^e.
struct LocalPrime {
  int64_t p;
  int v;
  int64_t pv;    // p^v
  int64_t lead;  // p^(v-1)
  int64_t tp;    // inverse of n/p^v mod p^v
};

struct OrderInfo {
  int64_t n = 1;
  std::vector<LocalPrime> primes;
};

OrderInfo order_info(int64_t n) {
  OrderInfo info;
  info.n = n;
  for (const auto& f : factorize(n)) {
    if (f.p == 1) continue;
    LocalPrime lp;
    lp.p = f.p;
    lp.v = f.e;
    lp.pv = f.pe;
    lp.lead = f.pe / f.p;
    lp.tp = inv_mod((n / f.pe) % f.pe, f.pe);
    info.primes.push_back(lp);
  }
  return info;
}

int64_t local_digit(const LocalPrime& lp, int64_t e) {
  return mul_mod(lp.tp, e % lp.pv, lp.pv);
}

using TermMap = std::map<int64_t, Rational>;

void add_term(TermMap& m, int64_t e, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = m.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

// Rewrites a single monomial c * zeta_n^e into the basis: for each prime
// whose local digit falls outside the basis window, apply the cyclotomic
// relation once.  The expansions for different primes commute because each
// only shifts its own digit.
void expand_monomial(const OrderInfo& info, int64_t e0, const Rational& c,
                     TermMap& out) {
  std::vector<int64_t> exps{e0 % info.n};
  int sign = 1;
  for (const auto& lp : info.primes) {
    int64_t d = local_digit(lp, e0 % info.n);
    if (lp.p == 2) {
      if (d >= lp.pv / 2) {
        int64_t half = info.n / 2;
        for (auto& e : exps) e = (e + half) % info.n;
        sign = -sign;
      }
    } else if (d < lp.lead) {
      std::vector<int64_t> next;
      next.reserve(exps.size() * static_cast<size_t>(lp.p - 1));
      int64_t step = info.n / lp.p;
      for (int64_t b = 1; b < lp.p; ++b) {
        int64_t off = mul_mod(step % info.n, b, info.n);
        for (int64_t e : exps) next.push_back((e + off) % info.n);
      }
      exps = std::move(next);
      sign = -sign;
    }
  }
  Rational signed_c = sign > 0 ? c : Rational(-c);
  for (int64_t e : exps) add_term(out, e, signed_c);
}

// One descent step: if every term lies in the basis image of a proper
// subfield, rewrite at the smaller order.  Returns true if the order shrank.
bool descend_once(int64_t& n, TermMap& terms) {
  if (n == 1 || terms.empty()) return false;
  OrderInfo info = order_info(n);
  for (const auto& lp : info.primes) {
    if (lp.p == 2) {
      if (lp.v >= 3) {
        bool all_even = true;
        for (const auto& [e, c] : terms)
          if (local_digit(lp, e) % 2 != 0) { all_even = false; break; }
        if (all_even) {
          TermMap next;
          for (const auto& [e, c] : terms) next.emplace(e / 2, c);
          n /= 2;
          terms = std::move(next);
          return true;
        }
      } else {  // v == 2: drop the factor 4 when no term involves i
        bool all_zero = true;
        for (const auto& [e, c] : terms)
          if (local_digit(lp, e) != 0) { all_zero = false; break; }
        if (all_zero) {
          TermMap next;
          for (const auto& [e, c] : terms) next.emplace(e / 4, c);
          n /= 4;
          terms = std::move(next);
          return true;
        }
      }
    } else if (lp.v >= 2) {
      bool all_div = true;
      for (const auto& [e, c] : terms)
        if (local_digit(lp, e) % lp.p != 0) { all_div = false; break; }
      if (all_div) {
        TermMap next;
        for (const auto& [e, c] : terms) next.emplace(e / lp.p, c);
        n /= lp.p;
        terms = std::move(next);
        return true;
      }
    } else {
      // v == 1: the subfield drops p entirely.  Group terms sharing every
      // other digit; membership needs each group to carry all p-1 digits
      // with one common coefficient c, and rewrites to -c.
      int64_t m = n / lp.p;
      std::map<int64_t, std::pair<int64_t, const Rational*>> buckets;
      bool ok = true;
      for (const auto& [e, c] : terms) {
        auto [it, fresh] = buckets.emplace(e % m, std::make_pair(int64_t{1}, &c));
        if (!fresh) {
          ++it->second.first;
          if (*it->second.second != c) { ok = false; break; }
        }
      }
      if (ok)
        for (const auto& [r, grp] : buckets)
          if (grp.first != lp.p - 1) { ok = false; break; }
      if (ok) {
        int64_t ipn = inv_mod(lp.p % m, m);
        TermMap next;
        for (const auto& [r, grp] : buckets)
          next.emplace(mul_mod(r % m, ipn, m), Rational(-*grp.second));
        n = m;
        terms = std::move(next);
        return true;
      }
    }
  }
  return false;
}

}  // namespace

Cyclotomic Cyclotomic::from_rational(Rational q) {
  Cyclotomic a;
  q.canonicalize();
  if (q != 0) a.terms_.emplace_back(0, std::move(q));
  return a;
}

Cyclotomic Cyclotomic::from_terms(int64_t n, const std::vector<Term>& terms) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  // Fold an order congruent to 2 mod 4 onto its odd part first:
  // zeta_{2m}^k = (-1)^k * zeta_m^{k(m+1)/2}.
  if (n % 4 == 2) {
    int64_t m = n / 2;
    int64_t h = (m + 1) / 2;
    std::vector<Term> folded;
    folded.reserve(terms.size());
    for (const auto& [e, c] : terms) {
      int64_t k = e % n;
      if (k < 0) k += n;
      Rational cc = (k % 2 == 0) ? c : Rational(-c);
      folded.emplace_back(mul_mod(k % m, h % m, m), std::move(cc));
    }
    return from_terms(m, folded);
  }

  OrderInfo info = order_info(n);
  TermMap basis;
  for (const auto& [e, c] : terms) {
    int64_t k = e % n;
    if (k < 0) k += n;
    expand_monomial(info, k, c, basis);
  }
  while (descend_once(n, basis)) {
  }
  Cyclotomic a;
  if (basis.empty()) return a;
  a.order_ = n;
  a.terms_.assign(basis.begin(), basis.end());
  return a;
}

Cyclotomic Cyclotomic::root_of_unity(int64_t n, int64_t k) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  k %= n;
  if (k < 0) k += n;
  int64_t g = std::gcd(k, n);
  if (g == 0) g = n;  // k == 0
  return from_terms(n / g, {{k / g, Rational(1)}});
}

Rational Cyclotomic::rational_value() const {
  if (is_zero()) return Rational(0);
  if (order_ != 1) throw std::logic_error("rational_value on irrational value");
  return terms_[0].second;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  int64_t n = std::lcm(order_, o.order_);
  std::vector<Term> raw;
  raw.reserve(terms_.size() + o.terms_.size());
  int64_t s = n / order_;
  for (const auto& [e, c] : terms_) raw.emplace_back(e * s, c);
  int64_t t = n / o.order_;
  for (const auto& [e, c] : o.terms_) raw.emplace_back(e * t, c);
  return from_terms(n, raw);
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  return *this + (-o);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic a;
  a.order_ = order_;
  a.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) a.terms_.emplace_back(e, Rational(-c));
  return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (is_zero() || o.is_zero()) return Cyclotomic();
  int64_t n = std::lcm(order_, o.order_);
  int64_t s = n / order_, t = n / o.order_;
  std::vector<Term> raw;
  raw.reserve(terms_.size() * o.terms_.size());
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_)
      raw.emplace_back((e1 * s + e2 * t) % n, Rational(c1 * c2));
  return from_terms(n, raw);
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  return order_ == o.order_ && terms_ == o.terms_;
}

Cyclotomic Cyclotomic::pow(uint64_t k) const {
  Cyclotomic r = one();
  Cyclotomic b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

Cyclotomic Cyclotomic::galois(int64_t k) const {
  int64_t n = order_;
  int64_t kk = k % n;
  if (kk < 0) kk += n;
  if (std::gcd(kk == 0 ? n : kk, n) != 1)
    throw std::invalid_argument("galois: k not coprime to order");
  if (n == 1) return *this;
  std::vector<Term> raw;
  raw.reserve(terms_.size());
  for (const auto& [e, c] : terms_) raw.emplace_back(mul_mod(e, kk, n), c);
  return from_terms(n, raw);
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Rational Cyclotomic::galois_mean() const {
  if (is_zero()) return Rational(0);
  Cyclotomic b = *this * conj();
  int64_t n = order_;
  Cyclotomic sum;
  for (int64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    sum = sum + b.galois(k);
  }
  Rational mean = sum.rational_value() / euler_phi(n);
  mean.canonicalize();
  return mean;
}

bool Cyclotomic::is_root_of_unity() const {
  if (is_zero()) return false;
  if (order_ == 1) {
    const Rational& q = terms_[0].second;
    return q == 1 || q == -1;
  }
  // |a|^2 != 1 settles most values without exponentiation.
  if (!(*this * conj() == one())) return false;
  auto l = static_cast<uint64_t>(std::lcm<int64_t>(2, order_));
  return pow(l) == one();
}

std::complex<double> Cyclotomic::embed() const {
  std::complex<double> z = 0;
  const double tau = 6.283185307179586476925286766559;
  for (const auto& [e, c] : terms_) {
    double arg = tau * static_cast<double>(e) / static_cast<double>(order_);
    z += c.get_d() * std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return z;
}

std::string Cyclotomic::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool neg = c < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? '-' : '+');
    }
    first = false;
    Rational mag = neg ? Rational(-c) : c;
    if (e == 0) {
      os << rational_str(mag);
    } else {
      if (mag != 1) os << rational_str(mag) << '*';
      os << "E(" << order_ << ')';
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

namespace {

// Recursive-descent reader for the literal grammar; positions are byte
// offsets into the input.
struct CycReader {
  const std::string& s;
  size_t i = 0;

  explicit CycReader(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool peek(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++i;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw CycParseError(i, what);
  }

  int64_t read_int() {
    skip_ws();
    size_t start = i;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      fail("expected integer");
    int64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      int d = s[i] - '0';
      if (v > (INT64_MAX - d) / 10) { i = start; fail("integer overflow"); }
      v = v * 10 + d;
      ++i;
    }
    return neg ? -v : v;
  }

  Rational read_rational() {
    int64_t num = read_int();
    if (eat('/')) {
      size_t den_pos = i;
      int64_t den = read_int();
      if (den == 0) { i = den_pos; fail("zero denominator"); }
      Rational q(static_cast<long>(num), static_cast<long>(den));
      q.canonicalize();
      return q;
    }
    return Rational(static_cast<long>(num));
  }

  // atom := 'E(' int ')' ['^' int] | rational
  Cyclotomic read_atom() {
    skip_ws();
    if (i < s.size() && s[i] == 'E') {
      ++i;
      if (!eat('(')) fail("expected '(' after E");
      size_t ord_pos = i;
      int64_t n = read_int();
      if (n < 1) { i = ord_pos; fail("root order must be positive"); }
      if (!eat(')')) fail("expected ')'");
      int64_t k = 1;
      if (eat('^')) k = read_int();
      return Cyclotomic::root_of_unity(n, k);
    }
    if (i < s.size() &&
        (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '-' ||
         s[i] == '+'))
      return Cyclotomic::from_rational(read_rational());
    fail("expected 'E(' or rational");
  }

  // term := [sign] [rational '*'] atom
  Cyclotomic read_term() {
    skip_ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    skip_ws();
    Cyclotomic value;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      Rational coef = read_rational();
      if (eat('*'))
        value = Cyclotomic::from_rational(coef) * read_atom();
      else
        value = Cyclotomic::from_rational(coef);
    } else {
      value = read_atom();
    }
    return neg ? -value : value;
  }

  Cyclotomic read_expr() {
    Cyclotomic acc = read_term();
    for (;;) {
      skip_ws();
      if (i >= s.size()) break;
      if (s[i] == '+' || s[i] == '-') {
        bool sub = s[i] == '-';
        ++i;
        Cyclotomic t = read_term();
        acc = sub ? acc - t : acc + t;
      } else {
        fail("unexpected trailing input");
      }
    }
    return acc;
  }
};

}  // namespace

Cyclotomic parse_cyc(const std::string& text) {
  CycReader r(text);
  r.skip_ws();
  if (r.i >= text.size()) r.fail("empty value");
  return r.read_expr();
}

ValueClass classify_value(const Cyclotomic& a) {
  ValueClass vc;
  vc.mean = a.galois_mean();
  if (a.is_zero())
    vc.kind = ValueKind::Zero;
  else if (a.is_root_of_unity())
    vc.kind = ValueKind::RootOfUnity;
  else
    vc.kind = ValueKind::Other;
  return vc;
}

}  // namespace ctk
