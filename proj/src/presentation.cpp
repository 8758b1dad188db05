#include "seifert/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace seifert {

namespace {

constexpr std::size_t kGenusIndex = std::numeric_limits<std::size_t>::max();

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

// Cursor over whitespace-free text.
class Cursor {
 public:
  explicit Cursor(std::string text) : text_(std::move(text)) {}

  bool done() const { return pos_ == text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect_word(std::string_view w) {
    if (text_.compare(pos_, w.size(), w) != 0) fail("expected '" + std::string(w) + "'");
    pos_ += w.size();
  }

  Integer integer() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    return parse_integer(std::string_view(text_).substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
  }

 private:
  std::string text_;
  std::size_t pos_ = 0;
};

SeifertPair read_pair(Cursor& cur) {
  cur.expect('(');
  SeifertPair pr;
  pr.q = cur.integer();
  cur.expect(',');
  pr.p = cur.integer();
  cur.expect(')');
  return pr;
}

}  // namespace

SeifertPresentation NormalizedPresentation::embed() const {
  SeifertPresentation out{genus, pairs};
  out.pairs.push_back({1, b});
  return out;
}

std::vector<Violation> validate(const SeifertPresentation& pres) {
  std::vector<Violation> out;
  if (pres.genus < 0) out.push_back({kGenusIndex, "genus " + pres.genus.str() + " is negative"});
  for (std::size_t k = 0; k < pres.pairs.size(); ++k) {
    const auto& [q, p] = pres.pairs[k];
    if (q < 1) {
      out.push_back({k, "pair " + format(pres.pairs[k]) + ": q must be positive"});
      continue;
    }
    if (Integer g = gcd(q, p); g != 1)
      out.push_back({k, "pair " + format(pres.pairs[k]) + ": gcd(q,p) = " + g.str()});
  }
  return out;
}

void require_valid(const SeifertPresentation& pres) {
  auto v = validate(pres);
  if (v.empty()) return;
  std::string where = v.front().index == kGenusIndex ? "genus" : "pair " + std::to_string(v.front().index + 1);
  throw DomainError("invalid presentation (" + where + "): " + v.front().message);
}

NormalizedPresentation normalize(const SeifertPresentation& pres) {
  require_valid(pres);
  NormalizedPresentation out;
  out.genus = pres.genus;
  for (const auto& [q, p] : pres.pairs) {
    if (q == 1) {
      out.b += p;
      continue;
    }
    out.b += floor_div(p, q);
    out.pairs.push_back({q, floor_mod(p, q)});
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

bool equivalent(const SeifertPresentation& a, const SeifertPresentation& b) {
  return normalize(a) == normalize(b);
}

SeifertPresentation apply_move(const SeifertPresentation& pres, const Move& move) {
  SeifertPresentation out = pres;
  const std::size_t n = pres.pairs.size();
  struct Visitor {
    SeifertPresentation& out;
    std::size_t n;

    void operator()(const moves::Permute& m) const {
      if (m.image.size() != n) throw MoveError("permute: image has wrong length");
      std::vector<bool> seen(n, false);
      for (auto k : m.image) {
        if (k >= n || seen[k]) throw MoveError("permute: image is not a permutation");
        seen[k] = true;
      }
      auto old = out.pairs;
      for (std::size_t k = 0; k < n; ++k) out.pairs[k] = old[m.image[k]];
    }
    void operator()(const moves::AddTrivial&) const { out.pairs.push_back({1, 0}); }
    void operator()(const moves::DeleteTrivial& m) const {
      if (m.index >= n) throw MoveError("delete_trivial: index out of range");
      if (out.pairs[m.index] != SeifertPair{1, 0}) throw MoveError("delete_trivial: pair is not (1,0)");
      out.pairs.erase(out.pairs.begin() + static_cast<std::ptrdiff_t>(m.index));
    }
    void operator()(const moves::Shift& m) const {
      if (m.i >= n || m.j >= n) throw MoveError("shift: index out of range");
      if (m.i == m.j) throw MoveError("shift: indices must differ");
      out.pairs[m.i].p += m.m * out.pairs[m.i].q;
      out.pairs[m.j].p -= m.m * out.pairs[m.j].q;
    }
  };
  std::visit(Visitor{out, n}, move);
  return out;
}

Fraction euler_number(const SeifertPresentation& pres) {
  auto np = normalize(pres);
  Fraction sum(np.b);
  for (const auto& [q, p] : np.pairs) sum += Fraction(p, q);
  return -sum;
}

GluingPair gluing_pair(const SeifertPair& pair) {
  if (pair.q < 1 || gcd(pair.q, pair.p) != 1)
    throw DomainError("gluing_pair: invalid pair " + format(pair));
  Integer y = mod_inverse(pair.p, pair.q);
  Integer x = (y * pair.p - 1) / pair.q;
  return {x, y, pair};
}

Fibration induced_fibration(const GluingPair& gp) { return {-gp.attached_pair.q, gp.y}; }

SeifertPair parse_pair(std::string_view text) {
  Cursor cur(strip_spaces(text));
  auto pr = read_pair(cur);
  if (!cur.done()) cur.fail("trailing input");
  return pr;
}

SeifertPresentation parse_presentation(std::string_view text) {
  Cursor cur(strip_spaces(text));
  SeifertPresentation out;
  cur.expect('(');
  out.genus = cur.integer();
  cur.expect(',');
  cur.expect_word("o1");
  cur.expect('|');
  if (cur.peek() == '(') {
    out.pairs.push_back(read_pair(cur));
    while (cur.accept(',')) out.pairs.push_back(read_pair(cur));
  }
  cur.expect(')');
  if (!cur.done()) cur.fail("trailing input");
  return out;
}

std::string format(const SeifertPair& pair) { return "(" + pair.q.str() + "," + pair.p.str() + ")"; }

std::string format(const SeifertPresentation& pres) {
  std::string out = "(" + pres.genus.str() + ", o1 |";
  for (std::size_t k = 0; k < pres.pairs.size(); ++k) {
    out += k == 0 ? " " : ", ";
    out += format(pres.pairs[k]);
  }
  return out + ")";
}

std::string format(const NormalizedPresentation& pres) { return format(pres.embed()); }

std::ostream& operator<<(std::ostream& os, const SeifertPresentation& pres) { return os << format(pres); }
std::ostream& operator<<(std::ostream& os, const NormalizedPresentation& pres) { return os << format(pres); }

}  // namespace seifert
