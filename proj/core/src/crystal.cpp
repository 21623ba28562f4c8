#include "coboundary/crystal.hpp"

#include <algorithm>
#include <deque>

namespace coboundary::crystal {

Crystal::Crystal(CartanContext context, std::vector<std::vector<Element>> raising, std::vector<Weight> weights,
                 std::vector<std::string> labels)
    : context_(context), raising_(std::move(raising)), weights_(std::move(weights)), labels_(std::move(labels)) {
  const std::size_t n = weights_.size();
  if (labels_.size() != n) throw Error(ErrorCode::BadParameter, "label count does not match element count");
  if (static_cast<int>(raising_.size()) != context_.num_simple_roots())
    throw Error(ErrorCode::BadParameter, "need one raising operator per simple root");

  lowering_.assign(raising_.size(), std::vector<Element>(n, kNone));
  eps_.assign(raising_.size(), std::vector<int>(n, 0));
  phi_.assign(raising_.size(), std::vector<int>(n, 0));

  for (std::size_t a = 0; a < raising_.size(); ++a) {
    const int i = static_cast<int>(a) + 1;
    const Weight alpha = weights::simple_root(context_, i);
    auto& up = raising_[a];
    if (up.size() != n) throw Error(ErrorCode::BadParameter, "raising table has wrong size");
    for (Element x = 0; x < n; ++x) {
      const Element y = up[x];
      if (y == kNone) continue;
      if (y >= n) throw Error(ErrorCode::BadParameter, "raising target out of range");
      if (lowering_[a][y] != kNone)
        throw Error(ErrorCode::BadParameter, "e_" + std::to_string(i) + " is not injective");
      lowering_[a][y] = x;
      if (!(weights_[y] == weights_[x] + alpha))
        throw Error(ErrorCode::BadParameter, "e_" + std::to_string(i) + " edge " + labels_[x] + " -> " +
                                                 labels_[y] + " does not shift the weight by alpha_i");
    }
    for (Element x = 0; x < n; ++x) {
      int k = 0;
      for (Element y = up[x]; y != kNone; y = up[y])
        if (++k > static_cast<int>(n))
          throw Error(ErrorCode::CyclicGraph, "e_" + std::to_string(i) + " is not nilpotent");
      eps_[a][x] = k;
      k = 0;
      for (Element y = lowering_[a][x]; y != kNone; y = lowering_[a][y])
        if (++k > static_cast<int>(n))
          throw Error(ErrorCode::CyclicGraph, "f_" + std::to_string(i) + " is not nilpotent");
      phi_[a][x] = k;
    }
  }
}

bool Crystal::is_highest_weight(Element x) const {
  for (const auto& up : raising_)
    if (up[x] != kNone) return false;
  return true;
}

std::optional<Element> Crystal::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

Crystal tensor(const Crystal& b, const Crystal& c, std::size_t max_size) {
  if (!(b.context() == c.context())) throw Error(ErrorCode::ContextMismatch, "tensor of crystals in different contexts");
  const std::size_t nb = b.size();
  const std::size_t nc = c.size();
  if (nc != 0 && nb > max_size / nc)
    throw Error(ErrorCode::SizeLimit, "tensor product of size " + std::to_string(nb) + "x" + std::to_string(nc));
  const std::size_t n = nb * nc;
  std::vector<std::vector<Element>> raising(static_cast<std::size_t>(b.num_indices()),
                                            std::vector<Element>(n, kNone));
  std::vector<Weight> wts;
  std::vector<std::string> labels;
  wts.reserve(n);
  labels.reserve(n);
  for (Element x = 0; x < nb; ++x) {
    for (Element y = 0; y < nc; ++y) {
      const Element xy = x * nc + y;
      for (int i = 1; i <= b.num_indices(); ++i) {
        Element target = kNone;
        if (b.phi(i, x) >= c.eps(i, y)) {
          if (b.e(i, x) != kNone) target = b.e(i, x) * nc + y;
        } else if (c.e(i, y) != kNone) {
          target = x * nc + c.e(i, y);
        }
        raising[static_cast<std::size_t>(i - 1)][xy] = target;
      }
      wts.push_back(b.weight(x) + c.weight(y));
      labels.push_back(b.label(x) + "⊗" + c.label(y));
    }
  }
  return Crystal(b.context(), std::move(raising), std::move(wts), std::move(labels));
}

Crystal trivial(const CartanContext& ctx) {
  return Crystal(ctx, std::vector<std::vector<Element>>(static_cast<std::size_t>(ctx.num_simple_roots()),
                                                       std::vector<Element>(1, kNone)),
                 {Weight::zero(ctx)}, {"·"});
}

std::vector<Element> highest_weight_elements(const Crystal& c) {
  std::vector<Element> out;
  for (Element x = 0; x < c.size(); ++x)
    if (c.is_highest_weight(x)) out.push_back(x);
  return out;
}

Element rectify(const Crystal& c, Element x) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i <= c.num_indices(); ++i) {
      const Element y = c.e(i, x);
      if (y != kNone) {
        x = y;
        moved = true;
      }
    }
  }
  return x;
}

std::vector<Element> component(const Crystal& c, Element x) {
  std::vector<bool> seen(c.size(), false);
  std::vector<Element> out;
  std::deque<Element> queue{x};
  seen[x] = true;
  while (!queue.empty()) {
    const Element y = queue.front();
    queue.pop_front();
    out.push_back(y);
    for (int i = 1; i <= c.num_indices(); ++i) {
      for (Element z : {c.e(i, y), c.f(i, y)}) {
        if (z != kNone && !seen[z]) {
          seen[z] = true;
          queue.push_back(z);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Crystal build_minuscule(const CartanContext& ctx, Minuscule which) {
  using weights::Family;
  const int n = ctx.rank;
  const auto ni = static_cast<std::size_t>(ctx.num_simple_roots());

  if (ctx.family == Family::SL2) {
    if (which.kind == Minuscule::Kind::Exterior) throw Error(ErrorCode::BadParameter, "SL2 has no exterior powers");
    // 0 = "+", 1 = "-"
    std::vector<std::vector<Element>> up(1, {kNone, 0});
    return Crystal(ctx, std::move(up), {Weight{ctx, {1}}, Weight{ctx, {-1}}}, {"+", "-"});
  }
  if (which.kind == Minuscule::Kind::SL2) throw Error(ErrorCode::BadParameter, "sl2 doublet needs the SL2 context");

  if (ctx.family == Family::GL) {
    const int k = which.kind == Minuscule::Kind::Vector ? 1 : which.k;
    if (k < 1 || k > n)
      throw Error(ErrorCode::BadParameter, "exterior power " + std::to_string(k) + " of " + ctx.to_string());
    // Enumerate k-subsets as bitmasks, lexicographic by sorted entries.
    std::vector<unsigned> subsets;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) pick[static_cast<std::size_t>(j)] = j;
    while (true) {
      unsigned mask = 0;
      for (int v : pick) mask |= 1u << v;
      subsets.push_back(mask);
      int j = k - 1;
      while (j >= 0 && pick[static_cast<std::size_t>(j)] == n - k + j) --j;
      if (j < 0) break;
      ++pick[static_cast<std::size_t>(j)];
      for (int t = j + 1; t < k; ++t) pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
    }
    std::vector<Weight> wts;
    std::vector<std::string> labels;
    for (unsigned mask : subsets) {
      Weight w = Weight::zero(ctx);
      std::string label;
      for (int v = 0; v < n; ++v) {
        if (mask & (1u << v)) {
          w.coords[static_cast<std::size_t>(v)] = 1;
          label += std::to_string(v + 1);
        }
      }
      wts.push_back(w);
      labels.push_back(label);
    }
    std::vector<std::vector<Element>> up(ni, std::vector<Element>(subsets.size(), kNone));
    for (std::size_t a = 0; a < ni; ++a) {
      const unsigned lo = 1u << a;
      const unsigned hi = 1u << (a + 1);
      for (std::size_t x = 0; x < subsets.size(); ++x) {
        const unsigned s = subsets[x];
        if ((s & hi) && !(s & lo)) {
          const unsigned t = (s & ~hi) | lo;
          up[a][x] = static_cast<Element>(std::find(subsets.begin(), subsets.end(), t) - subsets.begin());
        }
      }
    }
    return Crystal(ctx, std::move(up), std::move(wts), std::move(labels));
  }

  // Sp(2n) vector: 1 -> 2 -> ... -> n -> -n -> ... -> -1 under f.
  if (which.kind != Minuscule::Kind::Vector)
    throw Error(ErrorCode::BadParameter, "only the vector representation is supported for Sp");
  const auto size = static_cast<std::size_t>(2 * n);
  auto pos = [](int k) { return static_cast<Element>(k - 1); };
  auto neg = [n](int k) { return static_cast<Element>(n + (n - k)); };
  std::vector<Weight> wts(size, Weight::zero(ctx));
  std::vector<std::string> labels(size);
  for (int k = 1; k <= n; ++k) {
    wts[pos(k)] = Weight::unit(ctx, k - 1, 1);
    wts[neg(k)] = Weight::unit(ctx, k - 1, -1);
    labels[pos(k)] = std::to_string(k);
    labels[neg(k)] = "-" + std::to_string(k);
  }
  std::vector<std::vector<Element>> up(ni, std::vector<Element>(size, kNone));
  for (int i = 1; i < n; ++i) {
    up[static_cast<std::size_t>(i - 1)][pos(i + 1)] = pos(i);
    up[static_cast<std::size_t>(i - 1)][neg(i)] = neg(i + 1);
  }
  up[static_cast<std::size_t>(n - 1)][neg(n)] = pos(n);
  return Crystal(ctx, std::move(up), std::move(wts), std::move(labels));
}

TensorPower::TensorPower(Crystal base, int r, std::size_t max_size)
    : base_(std::move(base)), r_(r), crystal_(trivial(base_.context())) {
  if (r < 0) throw Error(ErrorCode::BadParameter, "negative tensor power");
  for (int k = 0; k < r; ++k) {
    if (k == 0) {
      crystal_ = base_;
    } else {
      crystal_ = tensor(crystal_, base_, max_size);
    }
  }
}

std::vector<Element> TensorPower::factors(Element x) const {
  std::vector<Element> out(static_cast<std::size_t>(r_));
  const std::size_t n = base_.size();
  for (int k = r_ - 1; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = x % n;
    x /= n;
  }
  return out;
}

Element TensorPower::element(const std::vector<Element>& factors) const {
  Element x = 0;
  for (Element f : factors) x = x * base_.size() + f;
  return x;
}

std::vector<Weight> TensorPower::prefix_weights(Element x) const {
  std::vector<Weight> out{Weight::zero(base_.context())};
  for (Element f : factors(x)) out.push_back(out.back() + base_.weight(f));
  return out;
}

std::map<Weight, ComponentCensus> decompose(const Crystal& c, int r, std::size_t max_size) {
  const TensorPower power(c, r, max_size);
  const Crystal& big = power.crystal();
  std::map<Weight, ComponentCensus> out;
  for (Element h : highest_weight_elements(big)) {
    auto& entry = out[big.weight(h)];
    ++entry.count;
    entry.component_size = component(big, h).size();
  }
  return out;
}

}  // namespace coboundary::crystal
