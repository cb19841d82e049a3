#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctk/cyclotomic.hpp"

namespace ctk {

// A full ordinary character table: classes across, irreducible characters
// down.  Column 0 is the identity class, so values[r][0] is the degree.
// Rows are kept in the canonical order (degree, then rendered values).
struct CharacterTable {
  std::string name;
  int64_t group_order = 0;
  std::vector<int64_t> class_sizes;
  std::vector<int64_t> element_orders;
  std::vector<std::vector<int>> power_maps;         // [s][class], s < exponent
  std::vector<std::vector<Cyclotomic>> values;      // [row][class]

  int num_classes() const { return static_cast<int>(class_sizes.size()); }
  int64_t exponent() const;
  int64_t degree(int row) const;  // values[row][0] as an integer

  // Sorts rows by (degree, lexicographic on rendered values).
  void sort_rows();
};

struct Violation {
  std::string kind;    // e.g. "first-orthogonality"
  std::string detail;  // indices and the failed identity
};

// Structural and arithmetic validation: shape, size sums, integer degrees,
// degree-square sum, both orthogonality relations (exact), value fields
// against element orders, and power-map consistency.
std::vector<Violation> validate(const CharacterTable& t);

// Kronecker product table: classes are pairs in lexicographic order, sizes
// and values multiply, element orders combine by lcm.
CharacterTable direct_product(const CharacterTable& a, const CharacterTable& b);

struct TableParseError : std::runtime_error {
  int line;
  int col;
  TableParseError(int line_, int col_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ": " + what),
        line(line_),
        col(col_) {}
};

CharacterTable parse_table(const std::string& text);
std::string render_table(const CharacterTable& t);

CharacterTable load_table(const std::string& path);
void save_table(const CharacterTable& t, const std::string& path);

}  // namespace ctk
