#include "seifert/action.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace seifert {

namespace {

std::string el(Element g) { return std::to_string(g); }
std::string comp(std::size_t i) { return std::to_string(i + 1); }

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

}  // namespace

ExtendedActionData ExtendedActionData::trivial(FiniteGroup group, std::vector<SeifertPair> pairs) {
  const std::size_t n = group.order(), m = pairs.size();
  Permutation id(m);
  for (std::size_t i = 0; i < m; ++i) id[i] = i;
  return {std::move(group),
          std::move(pairs),
          std::vector<int>(n, 1),
          std::vector<RationalAngle>(n),
          std::vector<Permutation>(n, id),
          std::vector<std::vector<RationalAngle>>(n, std::vector<RationalAngle>(m))};
}

std::string to_string(ActionCondition c) {
  switch (c) {
    case ActionCondition::shape: return "shape";
    case ActionCondition::alpha_homomorphism: return "alpha-homomorphism";
    case ActionCondition::theta1_crossed: return "theta1-crossed-homomorphism";
    case ActionCondition::beta_permutation: return "beta-permutation";
    case ActionCondition::beta_homomorphism: return "beta-homomorphism";
    case ActionCondition::filling_compatible: return "filling-compatibility";
    case ActionCondition::theta2_crossed: return "theta2-crossed-homomorphism";
  }
  return "unknown";
}

std::vector<ActionViolation> verify_action(const ExtendedActionData& d) {
  std::vector<ActionViolation> out;
  const std::size_t order = d.group.order(), n = d.n_boundary();
  auto report = [&](ActionCondition c, std::string detail) { out.push_back({c, std::move(detail)}); };

  if (d.alpha.size() != order || d.theta1.size() != order || d.beta.size() != order || d.theta2.size() != order) {
    report(ActionCondition::shape, "per-element tables must have " + std::to_string(order) + " entries");
    return out;
  }
  for (Element g = 0; g < order; ++g) {
    if (d.beta[g].size() != n || d.theta2[g].size() != n)
      report(ActionCondition::shape, "element " + el(g) + ": beta and theta2 need " + std::to_string(n) + " entries");
    if (d.alpha[g] != 1 && d.alpha[g] != -1)
      report(ActionCondition::shape, "element " + el(g) + ": alpha must be +1 or -1");
  }
  if (!out.empty()) return out;

  bool perms_ok = true;
  for (Element g = 0; g < order; ++g)
    if (!is_permutation(d.beta[g])) {
      report(ActionCondition::beta_permutation, "beta(" + el(g) + ") is not a permutation");
      perms_ok = false;
    }

  for (Element g = 0; g < order; ++g)
    for (Element h = 0; h < order; ++h) {
      const Element gh = d.group.mul(g, h);
      const std::string pair = "(" + el(g) + "," + el(h) + ")";
      if (d.alpha[gh] != d.alpha[g] * d.alpha[h]) report(ActionCondition::alpha_homomorphism, "at " + pair);
      if (d.theta1[gh] != d.theta1[g] + angle_scale(d.theta1[h], d.alpha[g]))
        report(ActionCondition::theta1_crossed, "at " + pair);
      if (!perms_ok) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (d.beta[gh][i] != d.beta[g][d.beta[h][i]]) {
          report(ActionCondition::beta_homomorphism, "at " + pair + ", component " + comp(i));
          break;
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (d.theta2[gh][i] != d.theta2[g][d.beta[h][i]] + angle_scale(d.theta2[h][i], d.alpha[g]))
          report(ActionCondition::theta2_crossed, "at " + pair + ", component " + comp(i));
      }
    }

  if (perms_ok)
    for (Element g = 0; g < order; ++g)
      for (std::size_t i = 0; i < n; ++i)
        if (d.pairs[d.beta[g][i]] != d.pairs[i])
          report(ActionCondition::filling_compatible,
                 "element " + el(g) + " maps component " + comp(i) + " " + format(d.pairs[i]) + " to " +
                     comp(d.beta[g][i]) + " " + format(d.pairs[d.beta[g][i]]));
  return out;
}

void require_action(const ExtendedActionData& data) {
  auto v = verify_action(data);
  if (!v.empty()) throw DomainError("invalid action data: " + to_string(v.front().condition) + " " + v.front().detail);
}

BoundaryImage boundary_action(const ExtendedActionData& d, Element g, std::size_t i) {
  if (g >= d.group.order() || i >= d.n_boundary()) throw DomainError("boundary_action: index out of range");
  return {d.beta[g][i], TorusAutomorphism::scalar(d.alpha[g], d.theta1[g], d.theta2[g][i])};
}

BoundaryImage induced_filling_action(const ExtendedActionData& d, Element g, std::size_t i) {
  if (g >= d.group.order() || i >= d.n_boundary()) throw DomainError("induced_filling_action: index out of range");
  const auto gp = gluing_pair(d.pairs[i]);
  const auto& t1 = d.theta1[g];
  const auto& t2 = d.theta2[g][i];
  const Integer& q = d.pairs[i].q;
  const Integer& p = d.pairs[i].p;
  return {d.beta[g][i], TorusAutomorphism::scalar(d.alpha[g], angle_scale(t1, -q) + angle_scale(t2, p),
                                                  angle_scale(t1, gp.y) + angle_scale(t2, -gp.x))};
}

SolidTorusPoint solid_torus_eval(const TorusAutomorphism& f, const SolidTorusPoint& p) {
  if (f.m12 != 0 || f.m21 != 0 || f.m11 != f.m22)
    throw DomainError("solid_torus_eval: radial extension needs matrix +-id, got " + format(f));
  if (p.r < Fraction(0) || p.r > Fraction(1)) throw DomainError("solid_torus_eval: radius outside [0,1]");
  auto [u, v] = f.apply(p.u, p.v);
  if (p.r == Fraction(0)) v = RationalAngle();
  return {u, p.r, v};
}

std::vector<std::size_t> boundary_orbit_numbers(const ExtendedActionData& d) {
  std::vector<std::size_t> out(d.n_boundary(), 0);
  for (std::size_t i = 0; i < d.n_boundary(); ++i) {
    std::set<std::size_t> orbit;
    for (Element g = 0; g < d.group.order(); ++g) orbit.insert(d.beta[g][i]);
    out[i] = orbit.size();
  }
  return out;
}

std::optional<ObstructionWitness> action_obstruction_check(const ExtendedActionData& d,
                                                           const NormalizedPresentation& pres,
                                                           std::span<const Integer> regular_orbit_numbers) {
  std::vector<SeifertPair> critical;
  for (const auto& pr : d.pairs)
    if (pr.q != 1) critical.push_back({pr.q, floor_mod(pr.p, pr.q)});
  std::sort(critical.begin(), critical.end());
  if (critical != pres.pairs)
    throw DomainError("action pairs do not match the critical pairs of " + format(pres));

  std::set<Integer> orbits;
  for (auto k : boundary_orbit_numbers(d)) orbits.insert(Integer(k));
  for (const auto& o : regular_orbit_numbers) {
    if (o < 1) throw DomainError("orbit numbers must be positive");
    orbits.insert(o);
  }
  if (orbits.empty()) {
    if (pres.b == 0) return ObstructionWitness{};
    return std::nullopt;
  }
  std::vector<Integer> list(orbits.begin(), orbits.end());
  return decompose(pres.b, list);
}

std::vector<Element> kernel_on_boundary(const ExtendedActionData& d) {
  std::vector<Element> out;
  for (Element g = 0; g < d.group.order(); ++g) {
    bool trivial = d.alpha[g] == 1 && d.theta1[g].is_zero();
    for (std::size_t i = 0; i < d.n_boundary() && trivial; ++i)
      trivial = d.beta[g][i] == i && d.theta2[g][i].is_zero();
    if (trivial) out.push_back(g);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Splits on whitespace outside parentheses.
std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto k = s.find(sep, start);
    out.emplace_back(s.substr(start, k - start));
    if (k == std::string_view::npos) break;
    start = k + 1;
  }
  return out;
}

std::vector<SeifertPair> parse_pair_list(std::string_view s) {
  std::string compact;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  std::vector<SeifertPair> out;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    if (compact[pos] == ',') {
      ++pos;
      continue;
    }
    auto close = compact.find(')', pos);
    if (compact[pos] != '(' || close == std::string::npos) throw ParseError("malformed pair list");
    out.push_back(parse_pair(std::string_view(compact).substr(pos, close - pos + 1)));
    pos = close + 1;
  }
  return out;
}

}  // namespace

ExtendedActionData parse_action(std::string_view text, const std::string& base_dir) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("action file line " + std::to_string(line_no) + ": " + what);
  };

  std::optional<FiniteGroup> group;
  std::optional<std::vector<SeifertPair>> pairs;
  struct Row {
    int alpha = 1;
    RationalAngle theta1;
    Permutation beta;
    std::vector<RationalAngle> theta2;
  };
  std::vector<std::optional<Row>> rows;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) fail("expected 'key: value'");
    std::string key = trim(std::string_view(line).substr(0, colon));
    std::string value = trim(std::string_view(line).substr(colon + 1));
    try {
      if (key == "group") {
        if (group) fail("duplicate group line");
        std::filesystem::path p(value);
        if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
        group = read_group_file(p.string());
        rows.assign(group->order(), std::nullopt);
        continue;
      }
      if (key == "pairs") {
        if (pairs) fail("duplicate pairs line");
        pairs = parse_pair_list(value);
        if (auto v = validate(SeifertPresentation{0, *pairs}); !v.empty()) fail(v.front().message);
        continue;
      }
      if (!group || !pairs) fail("'group:' and 'pairs:' must precede element lines");
      Integer gi = parse_integer(key);
      if (gi < 0 || gi >= group->order()) fail("element " + key + " out of range");
      const auto g = static_cast<Element>(gi);
      if (rows[g]) fail("duplicate line for element " + key);
      const std::size_t n = pairs->size();

      Row row;
      row.beta.resize(n);
      for (std::size_t i = 0; i < n; ++i) row.beta[i] = i;
      row.theta2.assign(n, RationalAngle());
      for (const auto& tok : tokens(value)) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) fail("expected key=value, got '" + tok + "'");
        std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
        if (k == "alpha") {
          Integer a = parse_integer(v);
          if (a != 1 && a != -1) fail("alpha must be +1 or -1");
          row.alpha = static_cast<int>(a);
        } else if (k == "theta1") {
          row.theta1 = RationalAngle::parse(v);
        } else if (k == "beta") {
          if (v.size() < 2 || v.front() != '(' || v.back() != ')') fail("beta must be written (j1,...,jn)");
          auto parts = split(std::string_view(v).substr(1, v.size() - 2), ',');
          if (parts.size() != n) fail("beta needs " + std::to_string(n) + " entries");
          for (std::size_t i = 0; i < n; ++i) {
            Integer j = parse_integer(parts[i]);
            if (j < 1 || j > n) fail("beta entry " + parts[i] + " out of range");
            row.beta[i] = static_cast<std::size_t>(j) - 1;
          }
        } else if (k == "theta2") {
          auto parts = split(v, ',');
          if (parts.size() != n) fail("theta2 needs " + std::to_string(n) + " entries");
          for (std::size_t i = 0; i < n; ++i) row.theta2[i] = RationalAngle::parse(parts[i]);
        } else {
          fail("unknown key '" + k + "'");
        }
      }
      rows[g] = std::move(row);
    } catch (const ParseError& e) {
      std::string what = e.what();
      if (what.rfind("action file line", 0) == 0) throw;
      fail(what);
    } catch (const DomainError& e) {
      fail(e.what());
    }
  }
  if (!group) throw ParseError("action file: missing 'group:' line");
  if (!pairs) throw ParseError("action file: missing 'pairs:' line");

  ExtendedActionData d{*group, *pairs, {}, {}, {}, {}};
  for (Element g = 0; g < rows.size(); ++g) {
    if (!rows[g]) throw ParseError("action file: no line for element " + el(g));
    d.alpha.push_back(rows[g]->alpha);
    d.theta1.push_back(rows[g]->theta1);
    d.beta.push_back(rows[g]->beta);
    d.theta2.push_back(rows[g]->theta2);
  }
  return d;
}

ExtendedActionData read_action_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open action file '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_action(buf.str(), std::filesystem::path(path).parent_path().string());
}

std::string format_action(const ExtendedActionData& d, const std::string& group_path) {
  std::string out = "group: " + group_path + "\npairs:";
  for (const auto& pr : d.pairs) out += " " + format(pr);
  out += "\n";
  for (Element g = 0; g < d.group.order(); ++g) {
    out += el(g) + ": alpha=" + (d.alpha[g] > 0 ? "+1" : "-1") + " theta1=" + d.theta1[g].str() + " beta=(";
    for (std::size_t i = 0; i < d.n_boundary(); ++i) out += (i ? "," : "") + comp(d.beta[g][i]);
    out += ") theta2=";
    for (std::size_t i = 0; i < d.n_boundary(); ++i) out += (i ? "," : "") + d.theta2[g][i].str();
    out += "\n";
  }
  return out;
}

}  // namespace seifert
