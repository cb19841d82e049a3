#include "ctk/dixon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "ctk/numtheory.hpp"

namespace ctk {

namespace {

std::vector<int> inverse_indices(const GroupData& g) {
  std::vector<int> inv(static_cast<size_t>(g.order()));
  for (int64_t x = 0; x < g.order(); ++x)
    inv[static_cast<size_t>(x)] =
        g.elem_index(g.elements[static_cast<size_t>(x)].inverse());
  return inv;
}

// Tallies a_{i,*,t} by walking the members of C_i against z_t.  Distinct
// (i, t) pairs write to disjoint slices, so pairs can run concurrently.
void fill_pair(const GroupData& g, const std::vector<int>& inv_elem, int i,
               int t, ClassCoeffs& out) {
  const int k = out.k;
  const Permutation& zt = g.class_rep(t);
  for (int x : g.classes[static_cast<size_t>(i)].members) {
    int j = g.elem_class[static_cast<size_t>(g.elem_index(
        g.elements[static_cast<size_t>(inv_elem[static_cast<size_t>(x)])] *
        zt))];
    ++out.a[(static_cast<size_t>(i) * k + j) * k + t];
  }
}

}  // namespace

ClassCoeffs class_mult_coeffs(const GroupData& g) {
  ClassCoeffs out;
  out.k = g.num_classes();
  out.a.assign(static_cast<size_t>(out.k) * out.k * out.k, 0);
  auto inv_elem = inverse_indices(g);
  for (int i = 0; i < out.k; ++i)
    for (int t = 0; t < out.k; ++t) fill_pair(g, inv_elem, i, t, out);
  return out;
}

ClassCoeffs class_mult_coeffs_parallel(const GroupData& g) {
  ClassCoeffs out;
  out.k = g.num_classes();
  out.a.assign(static_cast<size_t>(out.k) * out.k * out.k, 0);
  auto inv_elem = inverse_indices(g);
  const int pairs = out.k * out.k;
#pragma omp parallel for schedule(dynamic)
  for (int pi = 0; pi < pairs; ++pi)
    fill_pair(g, inv_elem, pi / out.k, pi % out.k, out);
  return out;
}

int64_t dixon_prime(int64_t order, int64_t exponent) {
  for (int64_t m = 1; m <= kPrimeSearchBound; ++m) {
    int64_t p = m * exponent + 1;
    if (static_cast<__int128>(p) * p <= static_cast<__int128>(4) * order)
      continue;
    if (is_prime(p)) return p;
  }
  throw ResourceError(
      "no prime p = 1 (mod " + std::to_string(exponent) + ") with p > 2*sqrt(" +
      std::to_string(order) + ") found up to " +
      std::to_string(kPrimeSearchBound) + "*" + std::to_string(exponent) +
      " + 1");
}

int64_t order_e_root(int64_t p, int64_t e) {
  auto fs = factorize(e);
  for (int64_t z = 1; z < p; ++z) {
    if (pow_mod(z, e, p) != 1) continue;
    bool exact = true;
    for (const auto& f : fs)
      if (pow_mod(z, e / f.p, p) == 1) {
        exact = false;
        break;
      }
    if (exact) return z;
  }
  throw std::logic_error("no element of the required order modulo p");
}

ClassMatrixContext make_context(const GroupData& g) {
  ClassMatrixContext ctx;
  ctx.prime = dixon_prime(g.order(), g.exponent);
  ctx.root = order_e_root(ctx.prime, g.exponent);
  ctx.coeffs = class_mult_coeffs_parallel(g);
  return ctx;
}

namespace {

// Reduced row echelon form over F_p, in place; drops zero rows and returns
// the pivot column of each remaining row.
std::vector<int> rref(std::vector<std::vector<int64_t>>& rows, int64_t p) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  size_t width = rows[0].size();
  size_t r = 0;
  for (size_t col = 0; col < width && r < rows.size(); ++col) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    int64_t inv = inv_mod(rows[r][col], p);
    for (size_t c = col; c < width; ++c)
      rows[r][c] = mul_mod(rows[r][c], inv, p);
    for (size_t q = 0; q < rows.size(); ++q) {
      if (q == r || rows[q][col] == 0) continue;
      int64_t f = rows[q][col];
      for (size_t c = col; c < width; ++c)
        rows[q][c] = (rows[q][c] - mul_mod(f, rows[r][c], p) + p) % p;
    }
    pivots.push_back(static_cast<int>(col));
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Characteristic polynomial of the n x n matrix A over F_p by the
// division-free Samuelson–Berkowitz recurrence.  Returns the n+1
// coefficients of det(xI - A) in descending powers, leading 1 first.
std::vector<int64_t> charpoly(const std::vector<int64_t>& A, int n,
                              int64_t p) {
  std::vector<int64_t> C{1};
  for (int r = 0; r < n; ++r) {
    // partition the (r+1) x (r+1) leading block: A_r | S over R | corner
    std::vector<int64_t> q(static_cast<size_t>(r) + 2, 0);
    q[0] = 1;
    q[1] = (p - A[static_cast<size_t>(r) * n + r]) % p;
    std::vector<int64_t> v(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) v[i] = A[static_cast<size_t>(i) * n + r];
    for (int i = 0; i < r; ++i) {
      int64_t dot = 0;
      for (int c = 0; c < r; ++c)
        dot = (dot + mul_mod(A[static_cast<size_t>(r) * n + c], v[c], p)) % p;
      q[static_cast<size_t>(i) + 2] = (p - dot) % p;
      if (i + 1 < r) {
        std::vector<int64_t> nv(static_cast<size_t>(r), 0);
        for (int rr = 0; rr < r; ++rr) {
          int64_t acc = 0;
          for (int cc = 0; cc < r; ++cc)
            acc = (acc +
                   mul_mod(A[static_cast<size_t>(rr) * n + cc], v[cc], p)) %
                  p;
          nv[rr] = acc;
        }
        v = std::move(nv);
      }
    }
    // multiply by the lower-triangular Toeplitz matrix T[i][j] = q[i-j]
    std::vector<int64_t> next(static_cast<size_t>(r) + 2, 0);
    for (int i = 0; i < r + 2; ++i) {
      int64_t acc = 0;
      for (int j = std::max(0, i - r - 1); j <= std::min(i, r); ++j)
        acc = (acc + mul_mod(q[static_cast<size_t>(i - j)], C[j], p)) % p;
      next[i] = acc;
    }
    C = std::move(next);
  }
  return C;
}

// An invariant subspace kept as a reduced row-echelon basis; coordinates of
// any member vector can be read off at the pivot columns.
struct Subspace {
  std::vector<std::vector<int64_t>> basis;  // rows of length k
  std::vector<int> pivots;
};

}  // namespace

ModularTable modular_table(const GroupData& g, const ClassMatrixContext& ctx) {
  const int k = g.num_classes();
  const int64_t p = ctx.prime;

  std::vector<Subspace> spaces(1);
  spaces[0].basis.assign(static_cast<size_t>(k),
                         std::vector<int64_t>(static_cast<size_t>(k), 0));
  for (int i = 0; i < k; ++i) {
    spaces[0].basis[i][i] = 1;
    spaces[0].pivots.push_back(i);
  }

  // class matrices in ascending class size, ties by class index
  std::vector<int> order(static_cast<size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::pair(g.classes[a].size(), a) < std::pair(g.classes[b].size(), b);
  });

  for (int mi : order) {
    if (mi == 0) continue;  // the identity class acts as the identity matrix
    bool all_split = true;
    for (const auto& s : spaces)
      if (s.basis.size() > 1) {
        all_split = false;
        break;
      }
    if (all_split) break;

    std::vector<Subspace> next;
    for (auto& s : spaces) {
      const int d = static_cast<int>(s.basis.size());
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      // restriction of M_mi to the subspace: column j holds the coordinates
      // of M_mi * b_j, read at the pivot columns
      std::vector<int64_t> R(static_cast<size_t>(d) * d);
      for (int j = 0; j < d; ++j)
        for (int t = 0; t < d; ++t) {
          int64_t acc = 0;
          int row = s.pivots[t];
          for (int c = 0; c < k; ++c) {
            int64_t m = ctx.coeffs.at(mi, row, c) % p;
            if (m != 0 && s.basis[j][c] != 0)
              acc = (acc + mul_mod(m, s.basis[j][c], p)) % p;
          }
          R[static_cast<size_t>(t) * d + j] = acc;
        }

      auto cp = charpoly(R, d, p);
      int found = 0;
      for (int64_t lam = 0; lam < p && found < d; ++lam) {
        int64_t val = cp[0];
        for (int i = 1; i <= d; ++i) val = (mul_mod(val, lam, p) + cp[i]) % p;
        if (val != 0) continue;
        // kernel of R - lam*I: one basis vector per free column
        std::vector<std::vector<int64_t>> N(
            static_cast<size_t>(d), std::vector<int64_t>(static_cast<size_t>(d)));
        for (int r2 = 0; r2 < d; ++r2)
          for (int c2 = 0; c2 < d; ++c2) {
            int64_t e = R[static_cast<size_t>(r2) * d + c2];
            if (r2 == c2) e = (e - lam + p) % p;
            N[r2][c2] = e;
          }
        auto piv = rref(N, p);
        std::vector<char> is_piv(static_cast<size_t>(d), 0);
        for (int c2 : piv) is_piv[c2] = 1;
        Subspace ns;
        for (int f = 0; f < d; ++f) {
          if (is_piv[f]) continue;
          std::vector<int64_t> coord(static_cast<size_t>(d), 0);
          coord[f] = 1;
          for (size_t r2 = 0; r2 < piv.size(); ++r2)
            coord[piv[r2]] = (p - N[r2][f]) % p;
          std::vector<int64_t> vec(static_cast<size_t>(k), 0);
          for (int j = 0; j < d; ++j) {
            if (coord[j] == 0) continue;
            for (int c = 0; c < k; ++c)
              vec[c] = (vec[c] + mul_mod(coord[j], s.basis[j][c], p)) % p;
          }
          ns.basis.push_back(std::move(vec));
        }
        found += static_cast<int>(ns.basis.size());
        ns.pivots = rref(ns.basis, p);
        next.push_back(std::move(ns));
      }
      if (found != d)
        throw std::logic_error("eigenspace splitting failed to separate");
    }
    spaces = std::move(next);
  }
  for (const auto& s : spaces)
    if (s.basis.size() != 1)
      throw std::logic_error("eigenspace splitting left a space undivided");

  std::vector<int> invc(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) invc[i] = g.class_of(g.class_rep(i).inverse());

  ModularTable mt;
  mt.prime = p;
  mt.root = ctx.root;
  const int64_t max_deg = isqrt(g.order());
  for (auto& s : spaces) {
    auto w = s.basis[0];
    if (w[0] == 0)
      throw std::logic_error("eigenvector with zero identity coordinate");
    int64_t scale = inv_mod(w[0], p);
    for (auto& x : w) x = mul_mod(x, scale, p);
    // sum_i w_i w_{i'} / |C_i|  =  |G| / d^2  in F_p
    int64_t norm = 0;
    for (int i = 0; i < k; ++i) {
      int64_t term = mul_mod(w[i], w[invc[i]], p);
      term = mul_mod(term, inv_mod(g.classes[i].size() % p, p), p);
      norm = (norm + term) % p;
    }
    if (norm == 0)
      throw std::logic_error("degenerate norm sum in degree recovery");
    int64_t d2 = mul_mod(g.order() % p, inv_mod(norm, p), p);
    int64_t deg = 0;
    for (int64_t d = 1; d <= max_deg; ++d)
      if (mul_mod(d % p, d % p, p) == d2) {
        deg = d;
        break;
      }
    if (deg == 0)
      throw std::logic_error("no degree matches the recovered square");
    mt.degrees.push_back(deg);
    std::vector<int64_t> chi(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
      chi[i] = mul_mod(mul_mod(deg % p, w[i], p),
                       inv_mod(g.classes[i].size() % p, p), p);
    mt.values.push_back(std::move(chi));
  }
  return mt;
}

namespace {

// chi(g_j) = sum_r mu_r zeta_m^r with m the element order of class j; the
// multiplicities come from the inverse transform over the cyclic group of
// powers of g_j, each lifted to the unique integer in [0, chi(1)].
std::vector<Cyclotomic> lift_row(const GroupData& g, const ModularTable& mt,
                                 size_t row) {
  const int64_t p = mt.prime;
  const int k = g.num_classes();
  std::vector<Cyclotomic> out(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) {
    int64_t m = g.element_orders[static_cast<size_t>(j)];
    int64_t zm = pow_mod(mt.root, g.exponent / m, p);
    int64_t minv = inv_mod(m % p, p);
    std::vector<std::pair<int64_t, Rational>> terms;
    for (int64_t r = 0; r < m; ++r) {
      int64_t acc = 0;
      for (int64_t s = 0; s < m; ++s) {
        int64_t val =
            mt.values[row][static_cast<size_t>(g.power_maps[s][j])];
        int64_t zexp = (m - (r * s) % m) % m;
        acc = (acc + mul_mod(val, pow_mod(zm, zexp, p), p)) % p;
      }
      int64_t mu = mul_mod(minv, acc, p);
      if (mu == 0) continue;
      if (mu > mt.degrees[row])
        throw std::logic_error("character multiplicity lift out of range");
      terms.emplace_back(r, Rational(static_cast<long>(mu)));
    }
    out[static_cast<size_t>(j)] = Cyclotomic::from_terms(m, terms);
  }
  return out;
}

}  // namespace

std::vector<std::vector<Cyclotomic>> lift_values(const GroupData& g,
                                                 const ModularTable& mt) {
  std::vector<std::vector<Cyclotomic>> rows(mt.values.size());
  for (size_t r = 0; r < mt.values.size(); ++r) rows[r] = lift_row(g, mt, r);
  return rows;
}

std::vector<std::vector<Cyclotomic>> lift_values_parallel(
    const GroupData& g, const ModularTable& mt) {
  std::vector<std::vector<Cyclotomic>> rows(mt.values.size());
  const int n = static_cast<int>(mt.values.size());
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < n; ++r)
    rows[static_cast<size_t>(r)] = lift_row(g, mt, static_cast<size_t>(r));
  return rows;
}

CharacterTable character_table(const GroupData& g, const std::string& name) {
  ClassMatrixContext ctx = make_context(g);
  ModularTable mt = modular_table(g, ctx);
  CharacterTable t;
  t.name = name;
  t.group_order = g.order();
  for (const auto& c : g.classes) t.class_sizes.push_back(c.size());
  t.element_orders = g.element_orders;
  t.power_maps = g.power_maps;
  t.values = lift_values_parallel(g, mt);
  t.sort_rows();
  return t;
}

}  // namespace ctk
