#include "coboundary/cactus.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace coboundary::cactus {

namespace {

void check_gen(const CactusGen& g, int r) {
  if (g.p < 1 || g.p >= g.q || g.q > r)
    throw Error(ErrorCode::IndexOutOfRange, g.to_string() + " on " + std::to_string(r) + " strands");
}

}  // namespace

std::string CactusGen::to_string() const { return "s(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

CactusWord::CactusWord(int strands, std::vector<CactusGen> g) : r(strands), gens(std::move(g)) {
  if (r < 0) throw Error(ErrorCode::BadParameter, "negative strand count");
  for (const auto& x : gens) check_gen(x, r);
}

CactusWord CactusWord::operator*(const CactusWord& rhs) const {
  if (r != rhs.r) throw Error(ErrorCode::BadParameter, "product of words on different strand counts");
  CactusWord out = *this;
  out.gens.insert(out.gens.end(), rhs.gens.begin(), rhs.gens.end());
  return out;
}

std::string CactusWord::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < gens.size(); ++k) out += (k ? " " : "") + gens[k].to_string();
  return out;
}

CactusWord CactusWord::parse(int r, const std::string& text) {
  std::vector<CactusGen> gens;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::ParseError, "cactus word '" + text + "' at offset " + std::to_string(pos) + ": " + why);
  };
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
  };
  auto number = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    if (pos - start > 6) fail("number too large");
    return std::stoi(text.substr(start, pos - start));
  };
  auto expect = [&](char c) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != 's') fail("expected 's'");
    ++pos;
    expect('(');
    const int p = number();
    expect(',');
    const int q = number();
    expect(')');
    gens.push_back({p, q});
    skip();
  }
  return CactusWord(r, std::move(gens));
}

Permutation identity_perm(int r) {
  Permutation id(static_cast<std::size_t>(r));
  std::iota(id.begin(), id.end(), 1);
  return id;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i] - 1)];
  return out;
}

Permutation perm_image(const CactusGen& g, int r) {
  check_gen(g, r);
  Permutation out = identity_perm(r);
  for (int i = g.p; i <= g.q; ++i) out[static_cast<std::size_t>(i - 1)] = g.p + g.q - i;
  return out;
}

Permutation perm_image(const CactusWord& w) {
  Permutation out = identity_perm(w.r);
  for (const auto& g : w.gens) out = compose(out, perm_image(g, w.r));
  return out;
}

CactusWord reduce_to_s1q(const CactusGen& g, int r) {
  check_gen(g, r);
  if (g.p == 1) return CactusWord(r, {g});
  return CactusWord(r, {{1, g.q}, {1, g.q - g.p + 1}, {1, g.q}});
}

CactusWord reduce_to_s1q(const CactusWord& w) {
  CactusWord out(w.r, {});
  for (const auto& g : w.gens) out = out * reduce_to_s1q(g, w.r);
  return out;
}

std::pair<CactusWord, CactusWord> relation_sides(Relation kind, int r, CactusGen a, CactusGen b) {
  auto bad = [&](const std::string& why) {
    throw Error(ErrorCode::BadParameter, a.to_string() + ", " + b.to_string() + ": " + why);
  };
  if (a.p < 1 || a.p >= a.q || a.q > r) bad("generator out of range");
  switch (kind) {
    case Relation::Involution:
      return {CactusWord(r, {a, a}), CactusWord(r, {})};
    case Relation::Disjoint:
      if (b.p < 1 || b.p >= b.q || b.q > r) bad("generator out of range");
      if (!(a.q < b.p || b.q < a.p)) bad("intervals are not disjoint");
      return {CactusWord(r, {a, b}), CactusWord(r, {b, a})};
    case Relation::Nested:
      if (b.p < 1 || b.p >= b.q || b.q > r) bad("generator out of range");
      if (!(a.p <= b.p && b.q <= a.q)) bad("second interval is not inside the first");
      return {CactusWord(r, {a, b}), CactusWord(r, {{a.p + a.q - b.q, a.p + a.q - b.p}, a})};
  }
  bad("unknown relation");
  return {};
}

std::vector<CactusGen> all_generators(int r) {
  std::vector<CactusGen> out;
  for (int p = 1; p <= r; ++p)
    for (int q = p + 1; q <= r; ++q) out.push_back({p, q});
  return out;
}

TauWord q_word(int k) {
  TauWord out;
  for (int m = 1; m <= k; ++m)
    for (int i = m; i >= 1; --i) out.push_back(i);
  return out;
}

TauWord s_to_tau(const CactusGen& g) {
  if (g.p < 1 || g.p >= g.q) throw Error(ErrorCode::IndexOutOfRange, g.to_string());
  const TauWord outer = q_word(g.q - 1);
  const TauWord inner = q_word(g.q - g.p);
  TauWord out = outer;
  out.insert(out.end(), inner.begin(), inner.end());
  out.insert(out.end(), outer.begin(), outer.end());
  return out;
}

CactusWord tau_to_s(int i, int r) {
  if (i < 1 || i >= r) throw Error(ErrorCode::IndexOutOfRange, "tau_" + std::to_string(i));
  if (i == 1) return CactusWord(r, {{1, 2}});
  if (i == 2) return CactusWord(r, {{1, 2}, {1, 3}, {1, 2}});
  return CactusWord(r, {{1, i}, {1, i + 1}, {1, i}, {1, i - 1}});
}

Permutation perm_image_tau(const TauWord& w, int r) {
  Permutation out = identity_perm(r);
  for (int i : w) {
    if (i < 1 || i >= r) throw Error(ErrorCode::IndexOutOfRange, "tau_" + std::to_string(i));
    Permutation t = identity_perm(r);
    std::swap(t[static_cast<std::size_t>(i - 1)], t[static_cast<std::size_t>(i)]);
    out = compose(out, t);
  }
  return out;
}

}  // namespace coboundary::cactus
