// Acceptance runner: one PASS/FAIL line per criterion. All comparisons are
// exact; the only numeric bound is the wall-clock limit on each criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "coboundary_tools/demos.hpp"
#include "coboundary_tools/verify.hpp"

using namespace coboundary;

namespace {

struct Outcome {
  bool ok;
  std::string summary;
  std::vector<std::string> details;
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

Outcome from_demo(const demos::DemoResult& d) {
  Outcome o{d.ok(), std::to_string(d.passed()) + "/" + std::to_string(d.items.size()) + " items", {}};
  for (const auto& it : d.items)
    if (!it.ok) o.details.push_back(it.name + ": " + it.detail);
  return o;
}

Outcome from_reports(const std::vector<verify::Report>& reports) {
  Outcome o{true, "", {}};
  for (const auto& r : reports) {
    o.ok = o.ok && r.ok();
    if (!o.summary.empty()) o.summary += ", ";
    o.summary += r.suite + " " + std::to_string(r.checked - r.failed) + "/" + std::to_string(r.checked);
    for (const auto& f : r.failures) o.details.push_back(r.suite + ": " + f);
  }
  return o;
}

std::vector<Criterion> criteria() {
  return {
      {"1a", "Bender-Knuth worked example", 1.0, [] { return from_demo(demos::bender_knuth()); }},
      {"1b", "C_6 action on SYT(3,3), local rules and matchings", 1.0,
       [] { return from_demo(demos::cactus_graph()); }},
      {"1c", "Sp(4) cylindrical window, promotion, evacuation, s(3,6)", 1.0,
       [] { return from_demo(demos::symplectic_cylinder()); }},
      {"1d", "GL cylinder rows from the first row", 1.0, [] { return from_demo(demos::gl_cylinder()); }},
      {"2", "oracle equivalence (SYT <= 8 boxes, BK inside (4,3,2,1) entries <= 5)", 30.0,
       [] {
         return from_reports({verify::oracle_suite(8), verify::bender_knuth_suite({4, 3, 2, 1}, 5)});
       }},
      {"3", "cactus relations, tau and evacuation involutions, r <= 6", 60.0,
       [] { return from_reports({verify::cactus_suite(verify::standard_families(), 6)}); }},
      {"4", "Hecke identities, shapes <= 6 boxes, block conjugation a <= 6", 60.0,
       [] { return from_reports({verify::hecke_suite(6, 6)}); }},
      {"5", "crystal census, Catalan counts r <= 10, rectification r <= 5", 30.0,
       [] { return from_reports({verify::crystal_suite(5, 10), verify::rectify_suite(5)}); }},
      {"6", "wall crossing equals act, GL(2), r <= 5", 30.0,
       [] { return from_reports({verify::wall_cross_suite(5)}); }},
  };
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> wanted(argv + 1, argv + argc);
  bool all_ok = true;
  int ran = 0;
  for (const auto& c : criteria()) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, "exception", {e.what()}};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool ok = o.ok && in_time;
    all_ok = all_ok && ok;
    std::printf("[%s] %s  %s: %s; exact; %.3f s (limit %.0f s)\n", c.id.c_str(), ok ? "PASS" : "FAIL",
                c.title.c_str(), o.summary.c_str(), secs, c.limit_seconds);
    if (!in_time) std::printf("      - over the time limit\n");
    for (const auto& d : o.details) std::printf("      - %s\n", d.c_str());
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion matched\n");
    return 2;
  }
  return all_ok ? 0 : 1;
}
