#include "coboundary/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace coboundary::weights {

const char* to_string(Family f) noexcept {
  switch (f) {
    case Family::GL: return "GL";
    case Family::SL2: return "SL2";
    case Family::Sp: return "Sp";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  if (s == "GL") return Family::GL;
  if (s == "SL2") return Family::SL2;
  if (s == "Sp") return Family::Sp;
  throw Error(ErrorCode::ParseError, "unknown Cartan family '" + s + "'");
}

CartanContext CartanContext::gl(int n) {
  if (n < 1) throw Error(ErrorCode::BadParameter, "GL(n) needs n >= 1");
  return {Family::GL, n};
}

CartanContext CartanContext::sl2() { return {Family::SL2, 1}; }

CartanContext CartanContext::sp(int n) {
  if (n < 1) throw Error(ErrorCode::BadParameter, "Sp(2n) needs n >= 1");
  return {Family::Sp, n};
}

int CartanContext::num_simple_roots() const {
  switch (family) {
    case Family::GL: return rank - 1;
    case Family::SL2: return 1;
    case Family::Sp: return rank;
  }
  return 0;
}

std::string CartanContext::to_string() const {
  switch (family) {
    case Family::GL: return "GL(" + std::to_string(rank) + ")";
    case Family::SL2: return "SL2";
    case Family::Sp: return "Sp(" + std::to_string(2 * rank) + ")";
  }
  return "?";
}

Weight Weight::zero(const CartanContext& ctx) { return {ctx, std::vector<int>(ctx.rank, 0)}; }

Weight Weight::unit(const CartanContext& ctx, int k, int sign) {
  Weight w = zero(ctx);
  w.coords.at(static_cast<std::size_t>(k)) = sign;
  return w;
}

Weight& Weight::operator+=(const Weight& rhs) {
  if (!(context == rhs.context)) throw Error(ErrorCode::ContextMismatch, "adding weights of different contexts");
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += rhs.coords[k];
  return *this;
}

Weight& Weight::operator-=(const Weight& rhs) {
  if (!(context == rhs.context)) throw Error(ErrorCode::ContextMismatch, "subtracting weights of different contexts");
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] -= rhs.coords[k];
  return *this;
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

std::string Weight::to_string() const {
  std::size_t len = coords.size();
  if (context.family != Family::SL2)
    while (len > 0 && coords[len - 1] == 0) --len;
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < len; ++k) os << (k ? "," : "") << coords[k];
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }

Weight simple_root(const CartanContext& ctx, int i) {
  if (i < 1 || i > ctx.num_simple_roots())
    throw Error(ErrorCode::IndexOutOfRange, "simple root index " + std::to_string(i));
  Weight a = Weight::zero(ctx);
  const auto k = static_cast<std::size_t>(i - 1);
  switch (ctx.family) {
    case Family::SL2: a.coords[0] = 2; break;
    case Family::Sp:
      if (i == ctx.rank) {
        a.coords[k] = 2;
        break;
      }
      [[fallthrough]];
    case Family::GL:
      a.coords[k] = 1;
      a.coords[k + 1] = -1;
      break;
  }
  return a;
}

int pairing(const Weight& w, int i) {
  const auto k = static_cast<std::size_t>(i - 1);
  switch (w.context.family) {
    case Family::SL2: return w.coords[0];
    case Family::Sp:
      if (i == w.context.rank) return w.coords[k];
      [[fallthrough]];
    case Family::GL: return w.coords[k] - w.coords[k + 1];
  }
  return 0;
}

bool is_dominant(const Weight& w) {
  const auto& c = w.coords;
  const bool decreasing = std::is_sorted(c.begin(), c.end(), std::greater<>());
  switch (w.context.family) {
    case Family::GL: return decreasing;
    case Family::SL2: return c[0] >= 0;
    case Family::Sp: return decreasing && (c.empty() || c.back() >= 0);
  }
  return false;
}

Weight dom_w(const Weight& w) {
  Weight out = w;
  auto& c = out.coords;
  switch (w.context.family) {
    case Family::GL: std::sort(c.begin(), c.end(), std::greater<>()); break;
    case Family::SL2: c[0] = std::abs(c[0]); break;
    case Family::Sp:
      for (int& x : c) x = std::abs(x);
      std::sort(c.begin(), c.end(), std::greater<>());
      break;
  }
  return out;
}

std::vector<Weight> weyl_orbit(const Weight& w) {
  std::set<std::vector<int>> seen;
  std::vector<int> base = w.coords;
  if (w.context.family != Family::GL)
    for (int& x : base) x = std::abs(x);
  std::sort(base.begin(), base.end());
  do {
    if (w.context.family == Family::GL) {
      seen.insert(base);
      continue;
    }
    const std::size_t n = base.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> v = base;
      for (std::size_t k = 0; k < n; ++k)
        if (mask & (1u << k)) v[k] = -v[k];
      seen.insert(v);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::vector<Weight> out;
  out.reserve(seen.size());
  for (const auto& v : seen) out.push_back({w.context, v});
  return out;
}

// ---------------------------------------------------------------------------
// Partitions

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] < 0 || (k > 0 && parts[k] > parts[k - 1]))
      throw Error(ErrorCode::NotDominant, "not a partition: " + to_string());
  }
}

std::vector<int> Partition::trimmed() const {
  std::vector<int> out = parts;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Partition::contains(const Partition& inner) const {
  for (std::size_t k = 0; k < inner.parts.size(); ++k)
    if (inner.parts[k] > part(k)) return false;
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  const auto t = trimmed();
  for (std::size_t k = 0; k < t.size(); ++k) os << (k ? "," : "") << t[k];
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

bool strip_check(const Partition& inner, const Partition& outer, Strip kind) {
  if (!outer.contains(inner)) return false;
  const std::size_t len = std::max(inner.parts.size(), outer.parts.size());
  for (std::size_t k = 0; k < len; ++k) {
    if (kind == Strip::Vertical) {
      if (outer.part(k) - inner.part(k) > 1) return false;
    } else if (outer.part(k + 1) > inner.part(k)) {
      // Row k+1 reaches under a new box of row k: two boxes in one column.
      return false;
    }
  }
  return true;
}

Partition conjugate(const Partition& p) {
  const auto t = p.trimmed();
  if (t.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(t.front()), 0);
  for (int row : t)
    for (int c = 0; c < row; ++c) ++out[static_cast<std::size_t>(c)];
  return Partition(out);
}

Partition to_partition(const Weight& w) {
  if (!is_dominant(w)) throw Error(ErrorCode::NotDominant, "weight " + w.to_string() + " is not dominant");
  if (w.context.family == Family::SL2)
    throw Error(ErrorCode::BadParameter, "SL2 weights are not partitions");
  return Partition(w.coords);
}

Weight from_partition(const CartanContext& ctx, const Partition& p) {
  const auto t = p.trimmed();
  if (static_cast<int>(t.size()) > ctx.rank)
    throw Error(ErrorCode::BadParameter, "partition " + p.to_string() + " too long for " + ctx.to_string());
  Weight w = Weight::zero(ctx);
  std::copy(t.begin(), t.end(), w.coords.begin());
  return w;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace coboundary::weights
