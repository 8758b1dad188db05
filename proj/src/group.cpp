#include "seifert/group.hpp"

#include <fstream>
#include <sstream>

#include "seifert/rational.hpp"

namespace seifert {

namespace {

std::string idx(Element e) { return std::to_string(e); }

}  // namespace

std::variant<FiniteGroup, GroupViolation> validate_group(const CayleyTable& table) {
  const std::size_t n = table.size();
  if (n == 0) return GroupViolation{"shape", "empty table"};
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n)
      return GroupViolation{"shape", "row " + idx(r) + " has " + idx(table[r].size()) + " entries"};
    for (auto v : table[r])
      if (v >= n) return GroupViolation{"shape", "entry " + idx(v) + " in row " + idx(r) + " out of range"};
  }
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (std::size_t c = 0; c < n; ++c) {
      if (row_seen[table[r][c]])
        return GroupViolation{"latin", "row " + idx(r) + " repeats " + idx(table[r][c])};
      row_seen[table[r][c]] = true;
      if (col_seen[table[c][r]])
        return GroupViolation{"latin", "column " + idx(r) + " repeats " + idx(table[c][r])};
      col_seen[table[c][r]] = true;
    }
  }
  Element e = n;
  for (Element cand = 0; cand < n && e == n; ++cand) {
    bool ok = true;
    for (Element g = 0; g < n && ok; ++g) ok = table[cand][g] == g && table[g][cand] == g;
    if (ok) e = cand;
  }
  if (e == n) return GroupViolation{"identity", "no two-sided identity"};
  for (Element g = 0; g < n; ++g) {
    bool found = false;
    for (Element h = 0; h < n && !found; ++h) found = table[g][h] == e && table[h][g] == e;
    if (!found) return GroupViolation{"inverse", "element " + idx(g) + " has no two-sided inverse"};
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          return GroupViolation{"associativity",
                                "(" + idx(a) + "*" + idx(b) + ")*" + idx(c) + " != " + idx(a) + "*(" + idx(b) +
                                    "*" + idx(c) + ")"};
  return FiniteGroup(table, e);
}

FiniteGroup::FiniteGroup(CayleyTable table) {
  auto result = validate_group(table);
  if (auto* v = std::get_if<GroupViolation>(&result)) throw GroupError(*v);
  *this = std::move(std::get<FiniteGroup>(result));
}

FiniteGroup::FiniteGroup(CayleyTable table, Element identity)
    : table_(std::move(table)), identity_(identity), inverse_(table_.size()) {
  for (Element g = 0; g < table_.size(); ++g)
    for (Element h = 0; h < table_.size(); ++h)
      if (table_[g][h] == identity_) inverse_[g] = h;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<Element>& elements) {
  std::vector<bool> in(g.order(), false);
  for (auto e : elements) {
    if (e >= g.order()) return false;
    in[e] = true;
  }
  if (!in[g.identity()]) return false;
  for (auto a : elements) {
    if (!in[g.inverse(a)]) return false;
    for (auto b : elements)
      if (!in[g.mul(a, b)]) return false;
  }
  return true;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw DomainError("cyclic_group: order must be positive");
  CayleyTable t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t));
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n == 0) throw DomainError("dihedral_group: n must be positive");
  const std::size_t order = 2 * n;
  CayleyTable t(order, std::vector<Element>(order));
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t k1 = x % n, f1 = x / n, k2 = y % n, f2 = y / n;
      std::size_t k = f1 ? (k1 + n - k2) % n : (k1 + k2) % n;
      t[x][y] = k + n * (f1 ^ f2);
    }
  return FiniteGroup(std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = h.order(), order = g.order() * m;
  CayleyTable t(order, std::vector<Element>(order));
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) t[x][y] = g.mul(x / m, y / m) * m + h.mul(x % m, y % m);
  return FiniteGroup(std::move(t));
}

FiniteGroup quaternion_group() {
  // unit products as (sign, unit) for units 1, i, j, k
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  CayleyTable t(8, std::vector<Element>(8));
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      std::size_t u = x % 4, v = y % 4;
      std::size_t sign = (x / 4 + y / 4 + kSign[u][v]) % 2;
      t[x][y] = kUnit[u][v] + 4 * sign;
    }
  return FiniteGroup(std::move(t));
}

FiniteGroup parse_group(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::size_t order = 0;
  bool have_order = false;
  CayleyTable table;
  auto fail = [&](const std::string& what) {
    throw ParseError("group file line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!have_order) {
      auto colon = line.find(':');
      if (colon == std::string::npos || line.substr(0, colon).find("order") == std::string::npos)
        fail("expected 'order: N'");
      Integer n = parse_integer(line.substr(colon + 1));
      if (n < 1 || n > 100000) fail("order out of range");
      order = static_cast<std::size_t>(n);
      have_order = true;
      continue;
    }
    if (table.size() == order) fail("more than " + std::to_string(order) + " rows");
    std::istringstream row(line);
    std::vector<Element> entries;
    std::string tok;
    while (row >> tok) {
      Integer v = parse_integer(tok);
      if (v < 0 || v >= order) fail("entry " + tok + " out of range");
      entries.push_back(static_cast<Element>(v));
    }
    if (entries.size() != order) fail("expected " + std::to_string(order) + " entries");
    table.push_back(std::move(entries));
  }
  if (!have_order) throw ParseError("group file: missing 'order: N'");
  if (table.size() != order) throw ParseError("group file: expected " + std::to_string(order) + " rows");
  for (Element g = 0; g < order; ++g)
    if (table[0][g] != g || table[g][0] != g) throw ParseError("group file: identity must be index 0");
  return FiniteGroup(std::move(table));
}

FiniteGroup read_group_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open group file '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_group(buf.str());
}

std::string format_group(const FiniteGroup& g) {
  std::string out = "order: " + std::to_string(g.order()) + "\n";
  for (const auto& row : g.table()) {
    for (std::size_t c = 0; c < row.size(); ++c) out += (c ? " " : "") + std::to_string(row[c]);
    out += "\n";
  }
  return out;
}

}  // namespace seifert
