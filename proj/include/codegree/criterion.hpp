#pragma once

// The codegree cod(chi) = |G : ker chi| / chi(1) and the solvability
// criterion  k * cod(chi) <= chi(1)^s  over nonlinear irreducible characters.

#include <compare>
#include <string>
#include <vector>

#include "codegree/catalog.hpp"
#include "codegree/exact.hpp"

namespace codegree {

struct CharEntry {
  BigInt degree;
  /// |G : ker chi|
  BigInt kernel_index;
  std::string label;
};

/// Throws DomainError unless degree divides kernel_index.
BigInt codegree(const CharEntry& e);

/// a = 2^9*3^2*19^2 / (5*7^3*11*31) = 1663488/584815.
const Rational& constant_a();

struct CriterionCase {
  CharEntry entry;
  Rational lhs;  // k * cod
  BigInt rhs;    // degree^s
};

struct CriterionReport {
  Rational k;
  unsigned s = 2;
  bool holds = true;
  std::vector<CriterionCase> violations;
  /// Nonlinear entries meeting the bound with equality.
  std::vector<CriterionCase> equalities;
};

/// Checks k * cod(e) <= degree^s for every entry of degree > 1.
CriterionReport criterion_holds(const std::vector<CharEntry>& entries, const Rational& k, unsigned s);

/// Ordering of k * |G| against degree^3. For a faithful character this is the
/// ordering of k * cod(chi) against chi(1)^2.
std::strong_ordering cube_equiv(const FactoredInteger& order, const BigInt& degree, const Rational& k);

struct SharpnessRow {
  std::string name;
  BigInt degree;
  FactoredInteger order;
  Rational ratio;  // degree^3 / |S|
  std::strong_ordering versus_a = std::strong_ordering::equal;
};

struct SharpnessReport {
  std::vector<SharpnessRow> rows;  // sorted by name; Fi22 not included
  Rational maximum;
  std::vector<std::string> argmax;
  SharpnessRow fi22;
  bool maximum_is_a = false;
  bool unique_at_on = false;
  bool fi22_exceeds_a = false;
  bool ok() const { return maximum_is_a && unique_at_on && fi22_exceeds_a; }
};

/// Exact ratios degree^3/|S| over the sporadic degree table.
SharpnessReport sharpness_scan(const Catalog& catalog);

}  // namespace codegree
