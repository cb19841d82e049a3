#include "ctk/chartab.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ctk/numtheory.hpp"

namespace ctk {

int64_t CharacterTable::exponent() const {
  int64_t e = 1;
  for (int64_t o : element_orders) e = std::lcm(e, o);
  return e;
}

int64_t CharacterTable::degree(int row) const {
  const Cyclotomic& d = values[static_cast<size_t>(row)][0];
  Rational q = d.rational_value();
  if (q.get_den() != 1)
    throw std::logic_error("non-integral degree in character table");
  return static_cast<int64_t>(q.get_num().get_si());
}

void CharacterTable::sort_rows() {
  struct Key {
    Rational deg;
    bool deg_ok;
    std::vector<std::string> rendered;
  };
  std::vector<Key> keys(values.size());
  for (size_t r = 0; r < values.size(); ++r) {
    keys[r].deg_ok = !values[r].empty() && values[r][0].is_rational();
    if (keys[r].deg_ok) keys[r].deg = values[r][0].rational_value();
    keys[r].rendered.reserve(values[r].size());
    for (const auto& v : values[r]) keys[r].rendered.push_back(v.str());
  }
  std::vector<size_t> by(values.size());
  std::iota(by.begin(), by.end(), 0);
  std::sort(by.begin(), by.end(), [&](size_t a, size_t b) {
    if (keys[a].deg_ok != keys[b].deg_ok) return keys[a].deg_ok;
    if (keys[a].deg_ok && keys[a].deg != keys[b].deg)
      return keys[a].deg < keys[b].deg;
    return keys[a].rendered < keys[b].rendered;
  });
  std::vector<std::vector<Cyclotomic>> sorted;
  sorted.reserve(values.size());
  for (size_t r : by) sorted.push_back(std::move(values[r]));
  values = std::move(sorted);
}

namespace {

void flag(std::vector<Violation>& out, const std::string& kind,
          const std::string& detail) {
  out.push_back({kind, detail});
}

}  // namespace

std::vector<Violation> validate(const CharacterTable& t) {
  std::vector<Violation> out;
  size_t k = t.class_sizes.size();
  bool square = t.element_orders.size() == k && t.values.size() == k;
  for (const auto& row : t.values)
    if (row.size() != k) square = false;
  if (!square) {
    flag(out, "shape", "value matrix is not " + std::to_string(k) + "x" +
                           std::to_string(k) + " with matching class data");
    return out;
  }
  if (k == 0) {
    flag(out, "shape", "empty table");
    return out;
  }

  int64_t size_sum = 0;
  for (int64_t s : t.class_sizes) size_sum += s;
  if (size_sum != t.group_order)
    flag(out, "sizes", "class sizes sum to " + std::to_string(size_sum) +
                           ", group order is " + std::to_string(t.group_order));
  if (t.class_sizes[0] != 1)
    flag(out, "sizes", "identity class (column 0) must have size 1");

  Integer deg_sq_sum = 0;
  for (size_t r = 0; r < k; ++r) {
    const Cyclotomic& d = t.values[r][0];
    if (!d.is_rational() || d.rational_value().get_den() != 1 ||
        d.rational_value() <= 0) {
      flag(out, "degrees", "degree of row " + std::to_string(r) +
                               " is not a positive integer: " + d.str());
      continue;
    }
    Integer deg = d.rational_value().get_num();
    deg_sq_sum += deg * deg;
  }
  if (deg_sq_sum != t.group_order)
    flag(out, "degree-sum",
         "sum of squared degrees is " + deg_sq_sum.get_str() +
             ", group order is " + std::to_string(t.group_order));

  // first orthogonality: sum_j |C_j| chi_r(j) conj(chi_s(j)) = delta |G|
  for (size_t r = 0; r < k; ++r) {
    std::vector<Cyclotomic> conj_r(k);
    for (size_t j = 0; j < k; ++j) conj_r[j] = t.values[r][j].conj();
    for (size_t s = r; s < k; ++s) {
      Cyclotomic acc;
      for (size_t j = 0; j < k; ++j) {
        Cyclotomic term = t.values[s][j] * conj_r[j];
        acc = acc + Cyclotomic::from_rational(Rational(t.class_sizes[j])) * term;
      }
      Cyclotomic want = r == s
                            ? Cyclotomic::from_rational(Rational(t.group_order))
                            : Cyclotomic::zero();
      if (!(acc == want))
        flag(out, "first-orthogonality",
             "rows " + std::to_string(r) + "," + std::to_string(s) +
                 ": got " + acc.str());
    }
  }

  // second orthogonality: sum_r chi_r(i) conj(chi_r(j)) = delta |C_G(g_i)|
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i; j < k; ++j) {
      Cyclotomic acc;
      for (size_t r = 0; r < k; ++r)
        acc = acc + t.values[r][i] * t.values[r][j].conj();
      Cyclotomic want =
          i == j ? Cyclotomic::from_rational(Rational(t.group_order) /
                                             Rational(t.class_sizes[i]))
                 : Cyclotomic::zero();
      if (!(acc == want))
        flag(out, "second-orthogonality",
             "columns " + std::to_string(i) + "," + std::to_string(j) +
                 ": got " + acc.str());
    }
  }

  // every value lives in the field of its column's element order
  for (size_t r = 0; r < k; ++r)
    for (size_t j = 0; j < k; ++j)
      if (t.element_orders[j] % t.values[r][j].conductor() != 0)
        flag(out, "value-field",
             "row " + std::to_string(r) + ", column " + std::to_string(j) +
                 ": conductor " + std::to_string(t.values[r][j].conductor()) +
                 " does not divide element order " +
                 std::to_string(t.element_orders[j]));

  // power maps: complete, consistent with element orders, and matching the
  // Galois action on values
  int64_t expo = t.exponent();
  if (static_cast<int64_t>(t.power_maps.size()) != expo) {
    flag(out, "power-map",
         "expected " + std::to_string(expo) + " power maps, have " +
             std::to_string(t.power_maps.size()));
    return out;
  }
  for (int64_t s = 0; s < expo; ++s) {
    if (t.power_maps[static_cast<size_t>(s)].size() != k) {
      flag(out, "power-map", "map " + std::to_string(s) + " has wrong width");
      return out;
    }
    for (size_t j = 0; j < k; ++j) {
      int img = t.power_maps[static_cast<size_t>(s)][j];
      if (img < 0 || static_cast<size_t>(img) >= k) {
        flag(out, "power-map", "map " + std::to_string(s) + " column " +
                                   std::to_string(j) + " out of range");
        return out;
      }
      int64_t m = t.element_orders[j];
      int red = t.power_maps[static_cast<size_t>(s % m)][j];
      if (img != red)
        flag(out, "power-map",
             "map " + std::to_string(s) + " column " + std::to_string(j) +
                 " disagrees with s mod element order");
      int64_t want_order = m / std::gcd(s % m, m);
      if (s % m == 0) want_order = 1;
      if (t.element_orders[static_cast<size_t>(img)] != want_order)
        flag(out, "power-map",
             "map " + std::to_string(s) + " column " + std::to_string(j) +
                 ": image has element order " +
                 std::to_string(t.element_orders[static_cast<size_t>(img)]) +
                 ", expected " + std::to_string(want_order));
    }
  }
  for (size_t j = 0; j < k; ++j) {
    int64_t m = t.element_orders[j];
    for (int64_t s = 1; s < m; ++s) {
      if (std::gcd(s, m) != 1) continue;
      int img = t.power_maps[static_cast<size_t>(s)][j];
      for (size_t r = 0; r < k; ++r) {
        if (!(t.values[r][static_cast<size_t>(img)] ==
              t.values[r][j].galois(s)))
          flag(out, "power-map",
               "value of row " + std::to_string(r) + " at class(g^" +
                   std::to_string(s) + ") is not the Galois image, column " +
                   std::to_string(j));
      }
    }
  }
  return out;
}

CharacterTable direct_product(const CharacterTable& a,
                              const CharacterTable& b) {
  CharacterTable t;
  t.name = a.name + " x " + b.name;
  t.group_order = a.group_order * b.group_order;
  size_t ka = a.class_sizes.size(), kb = b.class_sizes.size();
  t.class_sizes.reserve(ka * kb);
  t.element_orders.reserve(ka * kb);
  for (size_t i = 0; i < ka; ++i)
    for (size_t j = 0; j < kb; ++j) {
      t.class_sizes.push_back(a.class_sizes[i] * b.class_sizes[j]);
      t.element_orders.push_back(
          std::lcm(a.element_orders[i], b.element_orders[j]));
    }
  int64_t ea = a.exponent(), eb = b.exponent();
  int64_t expo = std::lcm(ea, eb);
  t.power_maps.reserve(static_cast<size_t>(expo));
  for (int64_t s = 0; s < expo; ++s) {
    std::vector<int> row;
    row.reserve(ka * kb);
    const auto& pa = a.power_maps[static_cast<size_t>(s % ea)];
    const auto& pb = b.power_maps[static_cast<size_t>(s % eb)];
    for (size_t i = 0; i < ka; ++i)
      for (size_t j = 0; j < kb; ++j)
        row.push_back(pa[i] * static_cast<int>(kb) + pb[j]);
    t.power_maps.push_back(std::move(row));
  }
  t.values.reserve(ka * kb);
  for (size_t r = 0; r < ka; ++r)
    for (size_t s = 0; s < kb; ++s) {
      std::vector<Cyclotomic> row;
      row.reserve(ka * kb);
      for (size_t i = 0; i < ka; ++i)
        for (size_t j = 0; j < kb; ++j)
          row.push_back(a.values[r][i] * b.values[s][j]);
      t.values.push_back(std::move(row));
    }
  t.sort_rows();
  return t;
}

namespace {

struct Line {
  int no;
  std::string text;
};

std::vector<Line> logical_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    size_t end = raw.find_last_not_of(" \t\r");
    lines.push_back({no, raw.substr(0, end + 1)});
  }
  return lines;
}

int64_t parse_int_field(const Line& ln, const std::string& tok, size_t col) {
  try {
    size_t pos = 0;
    int64_t v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw TableParseError(ln.no, static_cast<int>(col),
                          "bad integer '" + tok + "'");
  }
}

// Splits a line into (token, starting column) pairs.
std::vector<std::pair<std::string, size_t>> tokens_of(const std::string& s) {
  std::vector<std::pair<std::string, size_t>> toks;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i >= s.size()) break;
    size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    toks.emplace_back(s.substr(start, i - start), start + 1);
  }
  return toks;
}

std::vector<int64_t> parse_int_list(const Line& ln, size_t expect,
                                    const std::string& label) {
  auto toks = tokens_of(ln.text);
  if (toks.size() != expect + 1)
    throw TableParseError(ln.no, 1,
                          label + " expects " + std::to_string(expect) +
                              " entries, found " +
                              std::to_string(toks.size() - 1));
  std::vector<int64_t> out;
  out.reserve(expect);
  for (size_t i = 1; i < toks.size(); ++i)
    out.push_back(parse_int_field(ln, toks[i].first, toks[i].second));
  return out;
}

}  // namespace

CharacterTable parse_table(const std::string& text) {
  auto lines = logical_lines(text);
  size_t li = 0;
  auto need = [&](const std::string& what) -> const Line& {
    if (li >= lines.size())
      throw TableParseError(lines.empty() ? 1 : lines.back().no + 1, 1,
                            "unexpected end of input, expected " + what);
    return lines[li];
  };

  {
    const Line& ln = need("CHARTABLE v1");
    auto toks = tokens_of(ln.text);
    if (toks.size() != 2 || toks[0].first != "CHARTABLE" ||
        toks[1].first != "v1")
      throw TableParseError(ln.no, 1, "expected 'CHARTABLE v1' header");
    ++li;
  }

  CharacterTable t;
  {
    const Line& ln = need("name:");
    auto toks = tokens_of(ln.text);
    if (toks.empty() || toks[0].first != "name:")
      throw TableParseError(ln.no, 1, "expected 'name:'");
    size_t at = ln.text.find("name:") + 5;
    while (at < ln.text.size() && (ln.text[at] == ' ' || ln.text[at] == '\t'))
      ++at;
    t.name = ln.text.substr(at);
    ++li;
  }
  {
    const Line& ln = need("order:");
    auto toks = tokens_of(ln.text);
    if (toks.size() != 2 || toks[0].first != "order:")
      throw TableParseError(ln.no, 1, "expected 'order: <int>'");
    t.group_order = parse_int_field(ln, toks[1].first, toks[1].second);
    if (t.group_order < 1)
      throw TableParseError(ln.no, static_cast<int>(toks[1].second),
                            "order must be positive");
    ++li;
  }
  int64_t k;
  {
    const Line& ln = need("classes:");
    auto toks = tokens_of(ln.text);
    if (toks.size() != 2 || toks[0].first != "classes:")
      throw TableParseError(ln.no, 1, "expected 'classes: <k>'");
    k = parse_int_field(ln, toks[1].first, toks[1].second);
    if (k < 1 || k > 100000)
      throw TableParseError(ln.no, static_cast<int>(toks[1].second),
                            "bad class count");
    ++li;
  }
  {
    const Line& ln = need("classsizes:");
    auto toks = tokens_of(ln.text);
    if (toks.empty() || toks[0].first != "classsizes:")
      throw TableParseError(ln.no, 1, "expected 'classsizes:'");
    t.class_sizes = parse_int_list(ln, static_cast<size_t>(k), "classsizes:");
    ++li;
  }
  {
    const Line& ln = need("elementorders:");
    auto toks = tokens_of(ln.text);
    if (toks.empty() || toks[0].first != "elementorders:")
      throw TableParseError(ln.no, 1, "expected 'elementorders:'");
    t.element_orders =
        parse_int_list(ln, static_cast<size_t>(k), "elementorders:");
    ++li;
  }

  while (li < lines.size()) {
    auto toks = tokens_of(lines[li].text);
    if (toks.empty() || toks[0].first != "powermap") break;
    const Line& ln = lines[li];
    if (toks.size() < 2 || toks[1].first.back() != ':')
      throw TableParseError(ln.no, 1, "expected 'powermap <s>:'");
    std::string snum = toks[1].first.substr(0, toks[1].first.size() - 1);
    int64_t s = parse_int_field(ln, snum, toks[1].second);
    if (s != static_cast<int64_t>(t.power_maps.size()))
      throw TableParseError(ln.no, static_cast<int>(toks[1].second),
                            "powermap lines must advance s contiguously from 0");
    if (toks.size() != static_cast<size_t>(k) + 2)
      throw TableParseError(ln.no, 1,
                            "powermap expects " + std::to_string(k) +
                                " entries");
    std::vector<int> row;
    row.reserve(static_cast<size_t>(k));
    for (size_t i = 2; i < toks.size(); ++i) {
      int64_t v = parse_int_field(ln, toks[i].first, toks[i].second);
      if (v < 0 || v >= k)
        throw TableParseError(ln.no, static_cast<int>(toks[i].second),
                              "class index out of range");
      row.push_back(static_cast<int>(v));
    }
    t.power_maps.push_back(std::move(row));
    ++li;
  }

  for (int64_t r = 0; r < k; ++r) {
    const Line& ln = need("X" + std::to_string(r) + ":");
    auto toks = tokens_of(ln.text);
    std::string label = "X" + std::to_string(r) + ":";
    if (toks.empty() || toks[0].first != label)
      throw TableParseError(ln.no, 1, "expected '" + label + "'");
    if (toks.size() != static_cast<size_t>(k) + 1)
      throw TableParseError(ln.no, 1,
                            label + " expects " + std::to_string(k) +
                                " values, found " +
                                std::to_string(toks.size() - 1));
    std::vector<Cyclotomic> row;
    row.reserve(static_cast<size_t>(k));
    for (size_t i = 1; i < toks.size(); ++i) {
      try {
        row.push_back(parse_cyc(toks[i].first));
      } catch (const CycParseError& e) {
        throw TableParseError(ln.no,
                              static_cast<int>(toks[i].second + e.pos),
                              std::string("bad value: ") + e.what());
      }
    }
    t.values.push_back(std::move(row));
    ++li;
  }
  if (li < lines.size())
    throw TableParseError(lines[li].no, 1, "unexpected trailing line");
  return t;
}

std::string render_table(const CharacterTable& t) {
  std::ostringstream os;
  os << "CHARTABLE v1\n";
  os << "name: " << t.name << "\n";
  os << "order: " << t.group_order << "\n";
  os << "classes: " << t.class_sizes.size() << "\n";
  os << "classsizes:";
  for (int64_t s : t.class_sizes) os << ' ' << s;
  os << "\n";
  os << "elementorders:";
  for (int64_t o : t.element_orders) os << ' ' << o;
  os << "\n";
  for (size_t s = 0; s < t.power_maps.size(); ++s) {
    os << "powermap " << s << ":";
    for (int c : t.power_maps[s]) os << ' ' << c;
    os << "\n";
  }
  for (size_t r = 0; r < t.values.size(); ++r) {
    os << 'X' << r << ':';
    for (const auto& v : t.values[r]) os << ' ' << v.str();
    os << "\n";
  }
  return os.str();
}

CharacterTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

void save_table(const CharacterTable& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write table file: " + path);
  out << render_table(t);
}

}  // namespace ctk
