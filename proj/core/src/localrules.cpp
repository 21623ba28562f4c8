#include "coboundary/localrules.hpp"

#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

namespace coboundary::localrules {

using weights::Family;

std::string StepCrystal::to_string() const {
  if (kind == Kind::Vector) return "vector";
  return "exterior(" + std::to_string(k) + ")";
}

StepCrystal StepCrystal::parse(const std::string& s) {
  if (s == "vector" || s == "V") return vector();
  const std::string prefix = "exterior(";
  if (s.rfind(prefix, 0) == 0 && s.back() == ')') {
    try {
      return exterior(std::stoi(s.substr(prefix.size(), s.size() - prefix.size() - 1)));
    } catch (const std::logic_error&) {
    }
  }
  throw Error(ErrorCode::ParseError, "unknown step crystal '" + s + "'");
}

namespace {

bool is_step_weight(const Weight& diff, StepCrystal step) {
  const auto& d = diff.coords;
  switch (diff.context.family) {
    case Family::GL: {
      const int k = step.kind == StepCrystal::Kind::Vector ? 1 : step.k;
      int ones = 0;
      for (int x : d) {
        if (x != 0 && x != 1) return false;
        ones += x;
      }
      return ones == k;
    }
    case Family::SL2:
      return step.kind == StepCrystal::Kind::Vector && std::abs(d[0]) == 1;
    case Family::Sp: {
      if (step.kind != StepCrystal::Kind::Vector) return false;
      int nonzero = 0;
      for (int x : d) {
        if (x == 0) continue;
        if (std::abs(x) != 1) return false;
        ++nonzero;
      }
      return nonzero == 1;
    }
  }
  return false;
}

}  // namespace

bool valid_step(const Weight& from, const Weight& to, StepCrystal step) {
  if (!(from.context == to.context)) return false;
  return weights::is_dominant(to) && is_step_weight(to - from, step);
}

std::vector<Weight> step_targets(const Weight& from, StepCrystal step) {
  const auto& ctx = from.context;
  std::vector<Weight> out;
  switch (ctx.family) {
    case Family::GL: {
      const int k = step.kind == StepCrystal::Kind::Vector ? 1 : step.k;
      const int n = ctx.rank;
      if (k < 0 || k > n) throw Error(ErrorCode::BadParameter, step.to_string() + " in " + ctx.to_string());
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        Weight to = from;
        for (int v = 0; v < n; ++v)
          if (mask & (1u << v)) ++to.coords[static_cast<std::size_t>(v)];
        if (weights::is_dominant(to)) out.push_back(to);
      }
      break;
    }
    case Family::SL2:
    case Family::Sp:
      if (step.kind != StepCrystal::Kind::Vector)
        throw Error(ErrorCode::BadParameter, step.to_string() + " in " + ctx.to_string());
      for (int v = 0; v < ctx.rank; ++v) {
        for (int sign : {1, -1}) {
          Weight to = from;
          to.coords[static_cast<std::size_t>(v)] += sign;
          if (weights::is_dominant(to)) out.push_back(to);
        }
      }
      break;
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::optional<StepCrystal> infer_step(const Weight& from, const Weight& to) {
  if (!(from.context == to.context) || !weights::is_dominant(to)) return std::nullopt;
  const Weight diff = to - from;
  if (from.context.family == Family::GL) {
    const int k = std::accumulate(diff.coords.begin(), diff.coords.end(), 0);
    const StepCrystal s = k == 1 ? StepCrystal::vector() : StepCrystal::exterior(k);
    if (is_step_weight(diff, s)) return s;
    return std::nullopt;
  }
  if (is_step_weight(diff, StepCrystal::vector())) return StepCrystal::vector();
  return std::nullopt;
}

void HighestWeightWord::validate() const {
  if (corners.size() != steps.size() + 1)
    throw Error(ErrorCode::InvalidStep, "word has " + std::to_string(corners.size()) + " corners for " +
                                            std::to_string(steps.size()) + " steps");
  for (const auto& c : corners) {
    if (!(c.context == context) || c.coords.size() != static_cast<std::size_t>(context.rank))
      throw Error(ErrorCode::ContextMismatch, "corner " + c.to_string() + " not in " + context.to_string());
  }
  if (!corners.front().is_zero()) throw Error(ErrorCode::InvalidStep, "word must start at the zero weight");
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (!valid_step(corners[k], corners[k + 1], steps[k]))
      throw Error(ErrorCode::InvalidStep, "step " + std::to_string(k + 1) + " " + corners[k].to_string() + " -> " +
                                              corners[k + 1].to_string() + " is not a " + steps[k].to_string() +
                                              " step");
  }
}

HighestWeightWord HighestWeightWord::from_corners(const CartanContext& ctx, std::vector<Weight> corners) {
  HighestWeightWord w{ctx, std::vector<StepCrystal>(corners.empty() ? 0 : corners.size() - 1, StepCrystal::vector()),
                      std::move(corners)};
  return w;
}

std::string HighestWeightWord::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < corners.size(); ++k) os << (k ? " " : "") << corners[k].to_string();
  return os.str();
}

Weight complete_cell(const Weight& kappa, const Weight& lambda, const Weight& nu, StepCrystal vertical,
                     StepCrystal horizontal) {
  auto cell = [&] {
    return "cell kappa=" + kappa.to_string() + " lambda=" + lambda.to_string() + " nu=" + nu.to_string();
  };
  if (!weights::is_dominant(kappa) || !valid_step(kappa, lambda, vertical))
    throw Error(ErrorCode::InvalidStep, cell() + ": kappa -> lambda is not a " + vertical.to_string() + " step");
  if (!valid_step(lambda, nu, horizontal))
    throw Error(ErrorCode::InvalidStep, cell() + ": lambda -> nu is not a " + horizontal.to_string() + " step");
  Weight mu = weights::dom_w(kappa + nu - lambda);
  if (!valid_step(kappa, mu, horizontal) || !valid_step(mu, nu, vertical))
    throw Error(ErrorCode::InvalidStep, cell() + ": completion mu=" + mu.to_string() + " breaks step validity");
  return mu;
}

Weight complete_cell(const Weight& kappa, const Weight& lambda, const Weight& nu) {
  const auto vertical = infer_step(kappa, lambda);
  const auto horizontal = infer_step(lambda, nu);
  if (!vertical || !horizontal || !weights::is_dominant(kappa))
    throw Error(ErrorCode::InvalidStep, "cell kappa=" + kappa.to_string() + " lambda=" + lambda.to_string() +
                                            " nu=" + nu.to_string() + " has an invalid input edge");
  return complete_cell(kappa, lambda, nu, *vertical, *horizontal);
}

HighestWeightWord tau(const HighestWeightWord& w, int i) {
  if (i < 1 || i >= w.length())
    throw Error(ErrorCode::IndexOutOfRange, "tau_" + std::to_string(i) + " on a word of length " +
                                                std::to_string(w.length()));
  const auto k = static_cast<std::size_t>(i);
  HighestWeightWord out = w;
  out.corners[k] = complete_cell(w.corners[k - 1], w.corners[k], w.corners[k + 1], w.steps[k - 1], w.steps[k]);
  std::swap(out.steps[k - 1], out.steps[k]);
  return out;
}

HighestWeightWord commutor_prefix(const HighestWeightWord& w, int split) {
  if (split < 1 || split >= w.length())
    throw Error(ErrorCode::IndexOutOfRange, "commutor split " + std::to_string(split));
  HighestWeightWord out = w;
  for (int i = split; i < w.length(); ++i) out = tau(out, i);
  return out;
}

std::vector<HighestWeightWord> all_words(const CartanContext& ctx, const std::vector<StepCrystal>& steps) {
  std::vector<HighestWeightWord> out;
  std::vector<Weight> corners{Weight::zero(ctx)};
  std::function<void()> rec = [&] {
    if (corners.size() == steps.size() + 1) {
      out.push_back({ctx, steps, corners});
      return;
    }
    for (const Weight& next : step_targets(corners.back(), steps[corners.size() - 1])) {
      corners.push_back(next);
      rec();
      corners.pop_back();
    }
  };
  rec();
  return out;
}

std::vector<HighestWeightWord> all_words(const CartanContext& ctx, StepCrystal step, int r) {
  return all_words(ctx, std::vector<StepCrystal>(static_cast<std::size_t>(r), step));
}

}  // namespace coboundary::localrules
