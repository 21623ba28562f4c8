#include "coboundary/bridge.hpp"

#include <algorithm>

namespace coboundary::bridge {

using localrules::StepCrystal;

HighestWeightWord word_from_tableau(const Tableau& t, const CartanContext& ctx) {
  if (!oracles::is_standard(t)) throw Error(ErrorCode::NotDominant, t.to_string() + " is not a standard tableau");
  std::vector<weights::Weight> corners;
  for (const auto& p : oracles::shape_sequence(t, t.size())) corners.push_back(weights::from_partition(ctx, p));
  auto w = HighestWeightWord::from_corners(ctx, std::move(corners));
  w.validate();
  return w;
}

Tableau tableau_from_word(const HighestWeightWord& w) {
  std::vector<Partition> seq = sequence_from_word(w);
  for (std::size_t k = 1; k < seq.size(); ++k)
    if (seq[k].size() != seq[k - 1].size() + 1)
      throw Error(ErrorCode::InvalidStep, "step " + std::to_string(k) + " does not add a single box");
  return oracles::from_shape_sequence(seq, weights::Strip::Horizontal);
}

HighestWeightWord word_from_sequence(const std::vector<Partition>& seq, const CartanContext& ctx) {
  HighestWeightWord w{ctx, {}, {}};
  for (std::size_t k = 0; k < seq.size(); ++k) {
    w.corners.push_back(weights::from_partition(ctx, seq[k]));
    if (k == 0) continue;
    const int size = seq[k].size() - seq[k - 1].size();
    w.steps.push_back(size == 1 ? StepCrystal::vector() : StepCrystal::exterior(size));
  }
  w.validate();
  return w;
}

std::vector<Partition> sequence_from_word(const HighestWeightWord& w) {
  std::vector<Partition> out;
  for (const auto& c : w.corners) out.push_back(weights::to_partition(c));
  return out;
}

HighestWeightWord word_from_matching(const Matching& m) {
  if (!m.is_noncrossing()) throw Error(ErrorCode::BadParameter, "matching " + m.to_string() + " is crossing");
  const auto ctx = CartanContext::sl2();
  std::vector<int> delta(static_cast<std::size_t>(m.r + 1), 0);
  for (const auto& [i, j] : m.pairs) {
    delta[static_cast<std::size_t>(i)] = 1;
    delta[static_cast<std::size_t>(j)] = -1;
  }
  std::vector<weights::Weight> corners{weights::Weight::zero(ctx)};
  for (int v = 1; v <= m.r; ++v) corners.push_back({ctx, {corners.back().coords[0] + delta[static_cast<std::size_t>(v)]}});
  auto w = HighestWeightWord::from_corners(ctx, std::move(corners));
  w.validate();
  return w;
}

Matching matching_from_word(const HighestWeightWord& w) {
  if (w.context.family != weights::Family::SL2 || !w.shape().is_zero())
    throw Error(ErrorCode::BadParameter, "matchings need an SL2 word of weight zero");
  Matching m{w.length(), {}};
  std::vector<int> stack;
  for (int v = 1; v <= w.length(); ++v) {
    if (w.corners[static_cast<std::size_t>(v)].coords[0] > w.corners[static_cast<std::size_t>(v - 1)].coords[0]) {
      stack.push_back(v);
    } else {
      m.pairs.emplace_back(stack.back(), v);
      stack.pop_back();
    }
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

}  // namespace coboundary::bridge
