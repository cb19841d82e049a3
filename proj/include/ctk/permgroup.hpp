#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ctk {

// A permutation of {0..d-1} by its image array.
struct Permutation {
  std::vector<uint8_t> img;

  static Permutation identity(int d);

  int degree() const { return static_cast<int>(img.size()); }
  bool is_identity() const;
  // (a*b)(x) = a(b(x))
  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  int64_t order() const;  // lcm of cycle lengths
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

struct PermHash {
  size_t operator()(const Permutation& p) const {
    size_t h = 1469598103934665603ull;
    for (uint8_t b : p.img) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Thrown when enumeration exceeds its cap.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int64_t kDefaultEnumCap = 200000;

struct ConjClass {
  int rep = 0;                // element index of the representative
  std::vector<int> members;   // ascending element indices
  int64_t size() const { return static_cast<int64_t>(members.size()); }
};

// Fully enumerated group: elements, conjugacy classes in a deterministic
// order (class size, then element order, then discovery), centralizer data,
// and power maps for every exponent 0 <= s < exponent.
struct GroupData {
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // elements[0] is the identity
  std::unordered_map<Permutation, int, PermHash> index;
  std::vector<ConjClass> classes;
  std::vector<int> elem_class;             // element index -> class index
  std::vector<int64_t> centralizer_orders;  // |G| / class size
  std::vector<int64_t> element_orders;      // per class
  std::vector<std::vector<int>> power_maps;  // [s][class], s in [0, exponent)
  int64_t exponent = 1;

  int64_t order() const { return static_cast<int64_t>(elements.size()); }
  int num_classes() const { return static_cast<int>(classes.size()); }
  int elem_index(const Permutation& x) const;
  int class_of(const Permutation& x) const { return elem_class[elem_index(x)]; }
  const Permutation& class_rep(int c) const { return elements[classes[c].rep]; }
};

GroupData enumerate(const std::vector<Permutation>& generators,
                    int64_t cap = kDefaultEnumCap);

// True iff every Sylow subgroup is normal, tested by counting elements of
// prime-power order: for each p | |G| the count must equal the p-part of |G|.
bool is_nilpotent(const GroupData& g);

// Generator file: `domain: d` then one generator per line in cycle notation.
struct GenSet {
  std::string name;  // basename of the file, empty when parsed from text
  int domain = 0;
  std::vector<Permutation> generators;
};

GenSet parse_gens(const std::string& text);
GenSet load_gens(const std::string& path);

}  // namespace ctk
