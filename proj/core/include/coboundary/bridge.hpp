#pragma once

#include <vector>

#include "coboundary/localrules.hpp"
#include "coboundary/oracles.hpp"

// Conversions between classical objects and highest-weight words.
namespace coboundary::bridge {

using localrules::HighestWeightWord;
using oracles::Matching;
using oracles::Tableau;
using weights::CartanContext;
using weights::Partition;

/// Standard tableau -> GL(n) vector word; corner k is the shape of entries <= k.
HighestWeightWord word_from_tableau(const Tableau& t, const CartanContext& ctx);
/// Inverse; throws InvalidStep unless every step adds one box.
Tableau tableau_from_word(const HighestWeightWord& w);

/// Partition sequence -> word with each step labelled by the exterior power
/// of its size (vector for size 1).
HighestWeightWord word_from_sequence(const std::vector<Partition>& seq, const CartanContext& ctx);
std::vector<Partition> sequence_from_word(const HighestWeightWord& w);

/// Noncrossing matching -> SL2 word: openers step up, closers step down.
HighestWeightWord word_from_matching(const Matching& m);
Matching matching_from_word(const HighestWeightWord& w);

}  // namespace coboundary::bridge
