#pragma once

// Character tables of small groups: ingestion, kernels, codegree spectra,
// the normal-subgroup lattice, and solvability read off chief factors.
//
// File format (JSON):
//   {"name": str, "order": int, "class_sizes": [int, ...],
//    "characters": [{"label": str, "degree": int,
//                    "values": [int, ...]?, "kernel_classes": [int, ...]?}],
//    "solvable": bool?}
// Class 0 is the identity class. Tables with irrational character values
// give kernel_classes for those characters instead of values.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "codegree/criterion.hpp"
#include "codegree/exact.hpp"

namespace codegree {

/// Malformed input. line/column are 1-based; 0 when the error is semantic.
class TableError : public std::runtime_error {
 public:
  TableError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct CharacterData {
  std::string label;
  std::uint64_t degree = 0;
  std::optional<std::vector<std::int64_t>> values;
  std::optional<std::vector<std::size_t>> kernel_classes;
};

struct CharacterTable {
  std::string name;
  std::uint64_t order = 0;
  std::vector<std::uint64_t> class_sizes;
  std::vector<CharacterData> characters;
  std::optional<bool> solvable_flag;
};

/// Class-index set, sorted ascending.
using ClassSet = std::vector<std::size_t>;

CharacterTable parse_table(std::string_view text);
CharacterTable load_table(const std::filesystem::path& path);

ClassSet kernel_classes(const CharacterData& c, const CharacterTable& t);
/// Sum of class sizes; throws TableError unless it divides |G|.
std::uint64_t kernel_order(const ClassSet& ks, const CharacterTable& t);

struct SpectrumEntry {
  std::string label;
  std::uint64_t degree;
  std::uint64_t kernel_order;
  BigInt codegree;
};
std::vector<SpectrumEntry> codegree_spectrum(const CharacterTable& t);

struct NormalSubgroup {
  ClassSet classes;
  std::uint64_t order;
  friend bool operator==(const NormalSubgroup&, const NormalSubgroup&) = default;
};

/// Kernels closed under intersection, sorted by (order, classes). Contains
/// the trivial subgroup {0} and the whole group.
std::vector<NormalSubgroup> normal_subgroups(const CharacterTable& t);

/// Every maximal chain from the trivial subgroup to G, as index lists into
/// the normal_subgroups() vector.
std::vector<std::vector<std::size_t>> maximal_chains(const std::vector<NormalSubgroup>& lattice);

struct SolvabilityResult {
  bool solvable = true;
  std::vector<std::uint64_t> chief_factor_orders;
  bool metadata_mismatch = false;
};

/// Solvable iff every chief factor along a maximal chain has prime-power
/// order.
SolvabilityResult solvable_from_table(const CharacterTable& t);
bool chain_is_solvable(const std::vector<NormalSubgroup>& lattice, const std::vector<std::size_t>& chain);

std::vector<CharEntry> char_entries(const CharacterTable& t);

struct TheoremVerdict {
  CriterionReport criterion;
  bool hypothesis_holds = false;
  bool solvable = false;
  bool k_above_a = false;
  /// k > a and s <= 2
  bool theorem_applies = false;
  /// not (hypothesis_holds and theorem_applies and not solvable)
  bool consistent_with_theorem = true;
  bool metadata_mismatch = false;
};

TheoremVerdict theorem_a_check(const CharacterTable& t, const Rational& k, unsigned s = 2);

}  // namespace codegree
