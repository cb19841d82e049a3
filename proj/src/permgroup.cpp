#include "ctk/permgroup.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ctk/numtheory.hpp"

namespace ctk {

Permutation Permutation::identity(int d) {
  Permutation p;
  p.img.resize(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) p.img[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
  return p;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img.size(); ++i)
    if (img[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& o) const {
  Permutation r;
  r.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) r.img[i] = img[o.img[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) r.img[img[i]] = static_cast<uint8_t>(i);
  return r;
}

int64_t Permutation::order() const {
  std::vector<bool> seen(img.size(), false);
  int64_t ord = 1;
  for (size_t i = 0; i < img.size(); ++i) {
    if (seen[i]) continue;
    int64_t len = 0;
    for (size_t j = i; !seen[j]; j = img[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

int GroupData::elem_index(const Permutation& x) const {
  auto it = index.find(x);
  if (it == index.end())
    throw std::logic_error("element not in the enumerated group");
  return it->second;
}

GroupData enumerate(const std::vector<Permutation>& generators, int64_t cap) {
  if (generators.empty())
    throw std::invalid_argument("enumerate: at least one generator required");
  int d = generators[0].degree();
  for (const auto& g : generators)
    if (g.degree() != d)
      throw std::invalid_argument("enumerate: generators on mixed domains");

  GroupData gd;
  gd.generators = generators;

  // Breadth-first closure under right multiplication by the generators.
  gd.elements.push_back(Permutation::identity(d));
  gd.index.emplace(gd.elements[0], 0);
  for (size_t head = 0; head < gd.elements.size(); ++head) {
    for (const auto& g : generators) {
      Permutation next = gd.elements[head] * g;
      if (gd.index.count(next)) continue;
      if (static_cast<int64_t>(gd.elements.size()) >= cap)
        throw ResourceError("group enumeration exceeded the cap of " +
                            std::to_string(cap) + " elements");
      gd.index.emplace(next, static_cast<int>(gd.elements.size()));
      gd.elements.push_back(std::move(next));
    }
  }
  int64_t n = gd.order();

  // Conjugacy classes as orbits of conjugation by the generators, walked in
  // element discovery order.
  std::vector<Permutation> gen_invs;
  gen_invs.reserve(generators.size());
  for (const auto& g : generators) gen_invs.push_back(g.inverse());

  std::vector<int> elem_class(gd.elements.size(), -1);
  std::vector<ConjClass> classes;
  for (size_t start = 0; start < gd.elements.size(); ++start) {
    if (elem_class[start] != -1) continue;
    int c = static_cast<int>(classes.size());
    ConjClass cls;
    cls.rep = static_cast<int>(start);
    std::vector<int> queue{static_cast<int>(start)};
    elem_class[start] = c;
    while (!queue.empty()) {
      int xi = queue.back();
      queue.pop_back();
      cls.members.push_back(xi);
      for (size_t gi = 0; gi < generators.size(); ++gi) {
        Permutation conj = generators[gi] * gd.elements[static_cast<size_t>(xi)] * gen_invs[gi];
        int yi = gd.elem_index(conj);
        if (elem_class[static_cast<size_t>(yi)] == -1) {
          elem_class[static_cast<size_t>(yi)] = c;
          queue.push_back(yi);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes.push_back(std::move(cls));
  }

  // Deterministic class order: size, then element order, then discovery.
  std::vector<int64_t> orders(classes.size());
  for (size_t c = 0; c < classes.size(); ++c)
    orders[c] = gd.elements[static_cast<size_t>(classes[c].rep)].order();
  std::vector<int> by(classes.size());
  std::iota(by.begin(), by.end(), 0);
  std::sort(by.begin(), by.end(), [&](int a, int b) {
    if (classes[static_cast<size_t>(a)].size() != classes[static_cast<size_t>(b)].size())
      return classes[static_cast<size_t>(a)].size() < classes[static_cast<size_t>(b)].size();
    if (orders[static_cast<size_t>(a)] != orders[static_cast<size_t>(b)])
      return orders[static_cast<size_t>(a)] < orders[static_cast<size_t>(b)];
    return classes[static_cast<size_t>(a)].rep < classes[static_cast<size_t>(b)].rep;
  });
  gd.classes.resize(classes.size());
  gd.element_orders.resize(classes.size());
  gd.centralizer_orders.resize(classes.size());
  gd.elem_class.assign(gd.elements.size(), -1);
  for (size_t c = 0; c < by.size(); ++c) {
    gd.classes[c] = std::move(classes[static_cast<size_t>(by[c])]);
    gd.element_orders[c] = orders[static_cast<size_t>(by[c])];
    gd.centralizer_orders[c] = n / gd.classes[c].size();
    for (int m : gd.classes[c].members)
      gd.elem_class[static_cast<size_t>(m)] = static_cast<int>(c);
  }

  gd.exponent = 1;
  for (int64_t o : gd.element_orders) gd.exponent = std::lcm(gd.exponent, o);

  // Power maps for all 0 <= s < exponent via running powers of the reps.
  gd.power_maps.assign(static_cast<size_t>(gd.exponent),
                       std::vector<int>(gd.classes.size()));
  std::vector<Permutation> cur(gd.classes.size(), Permutation::identity(d));
  for (int64_t s = 0; s < gd.exponent; ++s) {
    for (size_t c = 0; c < gd.classes.size(); ++c) {
      gd.power_maps[static_cast<size_t>(s)][c] = gd.class_of(cur[c]);
      cur[c] = cur[c] * gd.class_rep(static_cast<int>(c));
    }
  }
  return gd;
}

bool is_nilpotent(const GroupData& g) {
  for (const auto& f : factorize(g.order())) {
    int64_t count = 0;
    for (int c = 0; c < g.num_classes(); ++c) {
      int64_t o = g.element_orders[static_cast<size_t>(c)];
      while (o % f.p == 0) o /= f.p;
      if (o == 1) count += g.classes[static_cast<size_t>(c)].size();
    }
    if (count != f.pe) return false;
  }
  return true;
}

namespace {

int read_point(const std::string& tok, int domain, int lineno) {
  size_t pos = 0;
  int v;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("line " + std::to_string(lineno) +
                             ": bad point '" + tok + "'");
  }
  if (pos != tok.size() || v < 0 || v >= domain)
    throw std::runtime_error("line " + std::to_string(lineno) +
                             ": point out of domain: '" + tok + "'");
  return v;
}

Permutation parse_cycles(const std::string& line, int domain, int lineno) {
  Permutation p = Permutation::identity(domain);
  std::vector<bool> moved(static_cast<size_t>(domain), false);
  size_t i = 0;
  auto skip = [&] {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  };
  skip();
  while (i < line.size()) {
    if (line[i] != '(')
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    std::string tok;
    for (; i < line.size() && line[i] != ')'; ++i) {
      char ch = line[i];
      if (ch == ' ' || ch == '\t' || ch == ',') {
        if (!tok.empty()) {
          cycle.push_back(read_point(tok, domain, lineno));
          tok.clear();
        }
      } else {
        tok += ch;
      }
    }
    if (i >= line.size())
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": unclosed cycle");
    ++i;  // past ')'
    if (!tok.empty()) cycle.push_back(read_point(tok, domain, lineno));
    for (size_t j = 0; cycle.size() > 1 && j < cycle.size(); ++j) {
      int from = cycle[j];
      int to = cycle[(j + 1) % cycle.size()];
      if (moved[static_cast<size_t>(from)])
        throw std::runtime_error("line " + std::to_string(lineno) +
                                 ": point repeated across cycles");
      moved[static_cast<size_t>(from)] = true;
      p.img[static_cast<size_t>(from)] = static_cast<uint8_t>(to);
    }
    skip();
  }
  return p;
}

}  // namespace

GenSet parse_gens(const std::string& text) {
  GenSet gs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_domain = false;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    if (!have_domain) {
      std::istringstream ls(line);
      std::string key;
      ls >> key;
      if (key != "domain:")
        throw std::runtime_error("line " + std::to_string(lineno) +
                                 ": expected 'domain: <d>'");
      if (!(ls >> gs.domain) || gs.domain < 1 || gs.domain > 255)
        throw std::runtime_error("line " + std::to_string(lineno) +
                                 ": bad domain size");
      have_domain = true;
      continue;
    }
    gs.generators.push_back(parse_cycles(line, gs.domain, lineno));
  }
  if (!have_domain) throw std::runtime_error("missing 'domain:' header");
  if (gs.generators.empty())
    throw std::runtime_error("no generators in input");
  return gs;
}

GenSet load_gens(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open generator file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  GenSet gs = parse_gens(buf.str());
  size_t slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  size_t dot = base.find_last_of('.');
  gs.name = dot == std::string::npos ? base : base.substr(0, dot);
  return gs;
}

}  // namespace ctk
