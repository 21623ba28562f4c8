#include "coboundary_tools/verify.hpp"

#include <map>
#include <random>

#include "coboundary/bridge.hpp"
#include "coboundary/cactus.hpp"
#include "coboundary/growth.hpp"
#include "coboundary/hecke.hpp"
#include "coboundary/oracles.hpp"

namespace coboundary::verify {

using cactus::CactusGen;
using cactus::CactusWord;
using cactus::Relation;
using localrules::HighestWeightWord;
using localrules::StepCrystal;
using weights::CartanContext;
using weights::Partition;
using weights::Weight;

namespace {

constexpr std::size_t kMaxMessages = 10;

std::size_t idx(int k) { return static_cast<std::size_t>(k); }

bool is_nested(const CactusGen& outer, const CactusGen& inner) {
  return outer.p <= inner.p && inner.q <= outer.q;
}

bool is_disjoint(const CactusGen& a, const CactusGen& b) { return a.q < b.p || b.q < a.p; }

std::string tableau_words(const std::string& label, const oracles::Tableau& t, const oracles::Tableau& got,
                          const oracles::Tableau& want) {
  return label + " on " + t.to_string() + ": got " + got.to_string() + ", want " + want.to_string();
}

// Generator index -> word index -> word index.
struct ActionTable {
  std::vector<CactusGen> gens;
  std::map<CactusGen, std::size_t> gen_index;
  std::vector<std::vector<std::size_t>> image;

  std::size_t apply(const CactusWord& w, std::size_t x) const {
    for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) x = image[gen_index.at(*it)][x];
    return x;
  }
};

HighestWeightWord random_word(const WordFamily& fam, int length, std::mt19937_64& rng) {
  HighestWeightWord w{fam.context, {}, {Weight::zero(fam.context)}};
  for (int k = 0; k < length; ++k) {
    const auto targets = localrules::step_targets(w.corners.back(), fam.step);
    std::uniform_int_distribution<std::size_t> pick(0, targets.size() - 1);
    w.corners.push_back(targets[pick(rng)]);
    w.steps.push_back(fam.step);
  }
  return w;
}

}  // namespace

void Report::expect(bool ok, const std::string& what) {
  ++checked;
  if (ok) return;
  ++failed;
  if (failures.size() < kMaxMessages) failures.push_back(what);
}

void Report::merge(const Report& other) {
  checked += other.checked;
  failed += other.failed;
  for (const auto& f : other.failures)
    if (failures.size() < kMaxMessages) failures.push_back(other.suite + ": " + f);
}

nlohmann::json Report::to_json() const {
  return {{"suite", suite}, {"checked", checked}, {"failed", failed}, {"failures", failures}};
}

std::vector<WordFamily> standard_families() {
  return {
      {"GL(2) vector", CartanContext::gl(2), StepCrystal::vector()},
      {"GL(3) vector", CartanContext::gl(3), StepCrystal::vector()},
      {"GL(4) exterior(2)", CartanContext::gl(4), StepCrystal::exterior(2)},
      {"Sp(4) vector", CartanContext::sp(2), StepCrystal::vector()},
  };
}

Report oracle_suite(int max_boxes) {
  Report rep{"oracle"};
  for (int n = 1; n <= max_boxes; ++n) {
    for (const auto& shape : weights::partitions_of(n)) {
      const auto ctx = CartanContext::gl(std::max(2, shape.length()));
      for (const auto& t : oracles::all_standard(shape)) {
        const auto w = bridge::word_from_tableau(t, ctx);
        const auto evac = bridge::tableau_from_word(growth::evacuation(w));
        const auto evac_want = oracles::evacuation_oracle(t);
        rep.expect(evac == evac_want, tableau_words("evacuation", t, evac, evac_want));
        const auto prom = bridge::tableau_from_word(growth::promotion(w));
        const auto prom_want = oracles::promotion_oracle(t);
        rep.expect(prom == prom_want, tableau_words("promotion", t, prom, prom_want));
        for (int i = 1; i + 2 <= n; ++i) {
          const auto dk = bridge::tableau_from_word(growth::act(CactusGen{i, i + 2}, w));
          const auto dk_want = oracles::dual_knuth(t, i);
          rep.expect(dk == dk_want, tableau_words("s(" + std::to_string(i) + "," + std::to_string(i + 2) + ")", t,
                                                  dk, dk_want));
        }
      }
    }
  }
  return rep;
}

Report bender_knuth_suite(const Partition& bound, int max_entry) {
  Report rep{"bender-knuth"};
  const auto ctx = CartanContext::gl(std::max(2, weights::conjugate(bound).length()));
  for (const auto& t : oracles::all_semistandard(bound, max_entry)) {
    const auto conj = oracles::conjugate_sequence(oracles::gt_pattern(t, max_entry));
    const auto w = bridge::word_from_sequence(conj, ctx);
    for (int i = 1; i < max_entry; ++i) {
      const auto moved = oracles::conjugate_sequence(bridge::sequence_from_word(localrules::tau(w, i)));
      const auto got = oracles::from_shape_sequence(moved, weights::Strip::Horizontal);
      const auto want = oracles::bender_knuth(t, i);
      rep.expect(got == want, tableau_words("b_" + std::to_string(i), t, got, want));
    }
  }
  return rep;
}

Report cactus_suite(const std::vector<WordFamily>& families, int max_r) {
  Report rep{"cactus"};
  for (const auto& fam : families) {
    for (int r = 1; r <= max_r; ++r) {
      const auto words = localrules::all_words(fam.context, fam.step, r);
      std::map<std::string, std::size_t> index;
      for (std::size_t k = 0; k < words.size(); ++k) index[words[k].to_string()] = k;
      const std::string where = fam.name + " r=" + std::to_string(r);

      ActionTable table;
      table.gens = cactus::all_generators(r);
      bool closed = true;
      for (std::size_t g = 0; g < table.gens.size(); ++g) {
        table.gen_index[table.gens[g]] = g;
        std::vector<std::size_t> image(words.size(), 0);
        for (std::size_t k = 0; k < words.size(); ++k) {
          const auto it = index.find(growth::act(table.gens[g], words[k]).to_string());
          if (it == index.end()) {
            closed = false;
            rep.expect(false, where + ": " + table.gens[g].to_string() + " leaves the word set");
          } else {
            image[k] = it->second;
          }
        }
        table.image.push_back(std::move(image));
      }
      if (!closed) continue;

      for (std::size_t k = 0; k < words.size(); ++k) {
        const std::string on = where + " " + words[k].to_string() + ": ";
        for (const auto& a : table.gens) {
          auto [lhs, rhs] = cactus::relation_sides(Relation::Involution, r, a);
          rep.expect(table.apply(lhs, k) == table.apply(rhs, k), on + a.to_string() + " squared");
          for (const auto& b : table.gens) {
            if (is_disjoint(a, b) && a.q < b.p) {
              auto [l, rr] = cactus::relation_sides(Relation::Disjoint, r, a, b);
              rep.expect(table.apply(l, k) == table.apply(rr, k),
                         on + a.to_string() + " and " + b.to_string() + " do not commute");
            }
            if (is_nested(a, b)) {
              auto [l, rr] = cactus::relation_sides(Relation::Nested, r, a, b);
              rep.expect(table.apply(l, k) == table.apply(rr, k),
                         on + "nested relation for " + a.to_string() + " over " + b.to_string());
            }
          }
        }
        for (int i = 1; i < r; ++i)
          rep.expect(localrules::tau(localrules::tau(words[k], i), i) == words[k],
                     on + "tau_" + std::to_string(i) + " squared");
        rep.expect(growth::evacuation(growth::evacuation(words[k])) == words[k], on + "evacuation squared");
      }
    }
  }
  return rep;
}

Report cactus_sample_suite(const std::vector<WordFamily>& families, int length, int samples, std::uint64_t seed) {
  Report rep{"cactus-sample"};
  if (length < 2) return rep;
  std::mt19937_64 rng(seed);
  const auto gens = cactus::all_generators(length);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  auto same = [](const HighestWeightWord& w) {
    return [&w](const CactusWord& l, const CactusWord& r) { return growth::act(l, w) == growth::act(r, w); };
  };
  for (const auto& fam : families) {
    for (int s = 0; s < samples; ++s) {
      const auto w = random_word(fam, length, rng);
      const CactusGen a = gens[pick(rng)];
      const CactusGen b = gens[pick(rng)];
      const std::string on = fam.name + " " + w.to_string() + ": ";
      rep.expect(cactus::relation_check(Relation::Involution, length, a, {}, same(w)), on + a.to_string());
      if (is_disjoint(a, b))
        rep.expect(cactus::relation_check(Relation::Disjoint, length, std::min(a, b), std::max(a, b), same(w)),
                   on + a.to_string() + " " + b.to_string());
      if (is_nested(a, b))
        rep.expect(cactus::relation_check(Relation::Nested, length, a, b, same(w)),
                   on + a.to_string() + " over " + b.to_string());
    }
  }
  return rep;
}

Report hecke_suite(int max_boxes, int max_axial) {
  Report rep{"hecke"};
  for (int n = 1; n <= max_boxes; ++n) {
    for (const auto& shape : weights::partitions_of(n)) {
      for (const auto& c : hecke::check_shape(shape)) rep.expect(c.ok, shape.to_string() + ": " + c.name);
    }
  }
  auto qpow = [](int k) { return algebra::RationalFunction(algebra::LaurentPoly::monomial(k)); };
  for (int a = 1; a <= max_axial; ++a) {
    const auto tau = hecke::tau_block(a);
    const auto t = hecke::t_block(a);
    for (int r = 0; r <= a; ++r) {
      const int s = a - r;
      const auto left = algebra::QMatrix::diagonal({qpow(r), qpow(-s)});
      const auto right = algebra::QMatrix::diagonal({qpow(-s), qpow(r)});
      rep.expect(left * tau == t * right,
                 "block conjugation a=" + std::to_string(a) + " r=" + std::to_string(r) + " s=" + std::to_string(s));
    }
  }
  return rep;
}

Report crystal_suite(int max_r, int catalan_r, std::size_t max_size) {
  Report rep{"crystal"};
  const std::vector<std::pair<std::string, crystal::Crystal>> bases = {
      {"GL(2)", crystal::build_minuscule(CartanContext::gl(2), crystal::Minuscule::vector())},
      {"GL(3)", crystal::build_minuscule(CartanContext::gl(3), crystal::Minuscule::vector())},
      {"SL2", crystal::build_minuscule(CartanContext::sl2(), crystal::Minuscule::sl2())},
  };
  for (const auto& [name, base] : bases) {
    for (int r = 1; r <= max_r; ++r) {
      std::size_t total = 0;
      for (const auto& [w, census] : crystal::decompose(base, r, max_size)) total += census.count * census.component_size;
      std::size_t expected = 1;
      for (int k = 0; k < r; ++k) expected *= base.size();
      rep.expect(total == expected, name + " r=" + std::to_string(r) + ": census total " + std::to_string(total) +
                                        " != " + std::to_string(expected));
    }
  }
  const auto& sl2 = bases[2].second;
  std::size_t catalan = 1;  // C_{r/2}, updated on even r
  for (int r = 1; r <= catalan_r; ++r) {
    const auto census = crystal::decompose(sl2, r, max_size);
    const auto it = census.find(Weight{CartanContext::sl2(), {0}});
    const std::size_t got = it == census.end() ? 0 : it->second.count;
    std::size_t want = 0;
    if (r % 2 == 0) {
      const std::size_t m = static_cast<std::size_t>(r / 2);
      catalan = catalan * 2 * (2 * m - 1) / (m + 1);
      want = catalan;
    }
    rep.expect(got == want, "SL2 r=" + std::to_string(r) + ": " + std::to_string(got) + " invariants, want " +
                                std::to_string(want));
  }
  return rep;
}

Report rectify_suite(int max_r, std::size_t max_size) {
  Report rep{"rectify"};
  struct Case {
    CartanContext ctx;
    crystal::Minuscule kind;
  };
  const std::vector<Case> cases = {{CartanContext::gl(2), crystal::Minuscule::vector()},
                                   {CartanContext::gl(3), crystal::Minuscule::vector()},
                                   {CartanContext::sl2(), crystal::Minuscule::sl2()}};
  for (const auto& c : cases) {
    const auto base = crystal::build_minuscule(c.ctx, c.kind);
    for (int r = 1; r <= max_r; ++r) {
      const crystal::TensorPower tp(base, r, max_size);
      // A highest-weight prefix u whose phi_i are all at least r, so u ⊗ x is
      // highest weight for every x.
      std::vector<Weight> prefix = {Weight::zero(c.ctx)};
      if (c.ctx.family == weights::Family::SL2) {
        for (int k = 1; k <= r; ++k) prefix.push_back(Weight{c.ctx, {k}});
      } else {
        const int n = c.ctx.rank;
        for (int row = 0; row < n - 1; ++row) {
          for (int k = 0; k < r * (n - 1 - row); ++k) {
            Weight next = prefix.back();
            ++next.coords[idx(row)];
            prefix.push_back(next);
          }
        }
      }
      const Weight lambda = prefix.back();
      const int m = static_cast<int>(prefix.size()) - 1;
      for (crystal::Element x = 0; x < tp.crystal().size(); ++x) {
        HighestWeightWord w{c.ctx, std::vector<StepCrystal>(idx(m + r), StepCrystal::vector()), prefix};
        const auto pw = tp.prefix_weights(x);
        for (int k = 1; k <= r; ++k) w.corners.push_back(lambda + pw[idx(k)]);
        const auto rect = growth::commutor_rectangle(w, m);
        const auto got = rect.bottom_word(c.ctx).corners;
        const auto want = tp.prefix_weights(crystal::rectify(tp.crystal(), x));
        rep.expect(got == want, c.ctx.to_string() + " r=" + std::to_string(r) + " element " +
                                    tp.crystal().label(x) + ": rectangle and e-ascent disagree");
      }
    }
  }
  return rep;
}

Report wall_cross_suite(int max_r) {
  Report rep{"wall-cross"};
  const auto ctx = CartanContext::gl(2);
  for (int r = 2; r <= max_r; ++r) {
    for (const auto& w : localrules::all_words(ctx, StepCrystal::vector(), r)) {
      const auto window = growth::cylinder_from_row(w, r);
      for (const auto& g : cactus::all_generators(r)) {
        const auto got = growth::wall_cross(g, window).row_word(0);
        const auto want = growth::act(g, w);
        rep.expect(got == want, g.to_string() + " on " + w.to_string() + ": wall crossing gives " + got.to_string() +
                                    ", act gives " + want.to_string());
      }
    }
  }
  return rep;
}

}  // namespace coboundary::verify
