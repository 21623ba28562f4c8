#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coboundary/crystal.hpp"
#include "coboundary/localrules.hpp"
#include "coboundary/weights.hpp"

// Invariant suites shared by `coboundary verify` and the acceptance runner.
namespace coboundary::verify {

struct Report {
  Report() = default;
  explicit Report(std::string name) : suite(std::move(name)) {}

  std::string suite;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few only

  bool ok() const { return failed == 0; }
  void expect(bool ok, const std::string& what);
  void merge(const Report& other);
  nlohmann::json to_json() const;
};

/// A crystal family used by the word-level suites.
struct WordFamily {
  std::string name;
  weights::CartanContext context;
  localrules::StepCrystal step;
};

/// GL(2), GL(3) vector, exterior square of GL(4), Sp(4) vector.
std::vector<WordFamily> standard_families();

/// growth evacuation/promotion against the jeu de taquin oracles, and
/// act(s(i,i+2)) against dual Knuth moves, on every standard tableau with
/// at most max_boxes boxes.
Report oracle_suite(int max_boxes);

/// tau_i on conjugate Gelfand-Tsetlin sequences against bender_knuth on every
/// semistandard tableau inside `bound` with entries <= max_entry.
Report bender_knuth_suite(const weights::Partition& bound, int max_entry);

/// Involution, disjoint and nested relations for every generator pair, tau and
/// evacuation involutivity, on every highest-weight word of length <= max_r.
Report cactus_suite(const std::vector<WordFamily>& families, int max_r);

/// Random words of length `length` built by random walks; each sample checks
/// all three relations for a random generator pair.
Report cactus_sample_suite(const std::vector<WordFamily>& families, int length, int samples, std::uint64_t seed);

/// check_shape for every shape with at most max_boxes boxes, plus the 2x2
/// block conjugation identity for axial distance 1..max_axial.
Report hecke_suite(int max_boxes, int max_axial);

/// Census totals for r <= max_r on GL(2), GL(3), SL2 and SL2 Catalan counts
/// for r <= catalan_r.
Report crystal_suite(int max_r, int catalan_r, std::size_t max_size = crystal::kDefaultMaxSize);

/// Rectification through the commutor rectangle against e-ascent on ⊗^r of the
/// vector crystal, r <= max_r, for GL(2), GL(3) and SL2.
Report rectify_suite(int max_r, std::size_t max_size = crystal::kDefaultMaxSize);

/// Wall crossing against act for every generator and GL(2) word, r <= max_r.
Report wall_cross_suite(int max_r);

}  // namespace coboundary::verify
