#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ctk/chartab.hpp"
#include "ctk/permgroup.hpp"

namespace ctk {

// Class multiplication constants of the class algebra,
// C_i C_j = sum_t a_{ijt} C_t, stored flat as a[(i*k + j)*k + t].
struct ClassCoeffs {
  int k = 0;
  std::vector<int64_t> a;

  int64_t at(int i, int j, int t) const {
    return a[(static_cast<size_t>(i) * k + j) * k + t];
  }
};

// a_{ijt} = #{x in C_i : x^{-1} z_t in C_j} for a fixed representative z_t.
ClassCoeffs class_mult_coeffs(const GroupData& g);
ClassCoeffs class_mult_coeffs_parallel(const GroupData& g);

// The prime search gives up after this many multiples of the exponent.
inline constexpr int64_t kPrimeSearchBound = 200000;

// Least prime p = 1 (mod exponent) with p > 2*sqrt(order).
int64_t dixon_prime(int64_t order, int64_t exponent);

// Least element of multiplicative order e modulo p (requires e | p - 1).
int64_t order_e_root(int64_t p, int64_t e);

struct ClassMatrixContext {
  int64_t prime = 0;
  int64_t root = 0;
  ClassCoeffs coeffs;
};

ClassMatrixContext make_context(const GroupData& g);

// Degrees and character values reduced mod `prime`, one row per
// irreducible, in the deterministic eigenvector-splitting order.
struct ModularTable {
  int64_t prime = 0;
  int64_t root = 0;
  std::vector<int64_t> degrees;
  std::vector<std::vector<int64_t>> values;  // [row][class]
};

ModularTable modular_table(const GroupData& g, const ClassMatrixContext& ctx);

// Exact values from the modular ones by inverse discrete Fourier transform
// over each class's element order.
std::vector<std::vector<Cyclotomic>> lift_values(const GroupData& g,
                                                 const ModularTable& mt);
std::vector<std::vector<Cyclotomic>> lift_values_parallel(
    const GroupData& g, const ModularTable& mt);

// Full pipeline: coefficients, eigenvector splitting, degree recovery,
// lifting, and canonical row order.
CharacterTable character_table(const GroupData& g,
                               const std::string& name = "");

}  // namespace ctk
