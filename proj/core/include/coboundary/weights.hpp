#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <vector>

#include "coboundary/error.hpp"

namespace coboundary::weights {

enum class Family { GL, SL2, Sp };

const char* to_string(Family f) noexcept;
Family family_from_string(const std::string& s);

/// Root-system context. GL(n) and Sp(2n) carry n coordinates; SL2 carries
/// the single integer <wt, alpha^vee>.
struct CartanContext {
  Family family = Family::GL;
  int rank = 1;

  static CartanContext gl(int n);
  static CartanContext sl2();
  static CartanContext sp(int n);

  /// Number of simple roots (size of the index set I).
  int num_simple_roots() const;

  friend bool operator==(const CartanContext&, const CartanContext&) = default;
  std::string to_string() const;
};

/// Fixed-length integer weight. Coordinates are never dropped, even when
/// trailing ones are zero.
struct Weight {
  CartanContext context;
  std::vector<int> coords;

  static Weight zero(const CartanContext& ctx);
  static Weight unit(const CartanContext& ctx, int k, int sign = 1);

  Weight& operator+=(const Weight& rhs);
  Weight& operator-=(const Weight& rhs);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords <=> b.coords; }

  bool is_zero() const;
  /// "[2,1]" with trailing zeros trimmed, "[]" for the zero weight (SL2: "[m]").
  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

/// Simple root alpha_i, 1 <= i <= num_simple_roots().
Weight simple_root(const CartanContext& ctx, int i);
/// <w, alpha_i^vee>.
int pairing(const Weight& w, int i);

bool is_dominant(const Weight& w);

/// The dominant representative of the Weyl orbit of w.
Weight dom_w(const Weight& w);

/// All elements of the Weyl orbit of w (GL: permutations; SL2: sign; Sp: signed permutations).
std::vector<Weight> weyl_orbit(const Weight& w);

/// Weakly decreasing sequence of nonnegative parts; equality ignores trailing zeros.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::vector<int> p);  // NOLINT: partitions read naturally as {3,2,1}
  Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

  /// Parts with trailing zeros removed.
  std::vector<int> trimmed() const;
  int size() const;
  int length() const { return static_cast<int>(trimmed().size()); }
  int part(std::size_t i) const { return i < parts.size() ? parts[i] : 0; }
  bool contains(const Partition& inner) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.trimmed() == b.trimmed(); }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.trimmed() <=> b.trimmed(); }
  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

enum class Strip { Horizontal, Vertical };

/// inner ⊆ outer and outer/inner has at most one box per column (horizontal)
/// or per row (vertical).
bool strip_check(const Partition& inner, const Partition& outer, Strip kind);

Partition conjugate(const Partition& p);

/// Reads a dominant GL/Sp weight as a partition; throws NotDominant otherwise.
Partition to_partition(const Weight& w);
/// Pads a partition to a weight of the given context; throws BadParameter if too long.
Weight from_partition(const CartanContext& ctx, const Partition& p);

/// All partitions of n.
std::vector<Partition> partitions_of(int n);

}  // namespace coboundary::weights
