#pragma once

// Exact re-verification of the inequality chains behind the solvability
// criterion, over explicit truncations of the infinite families.

#include <string>
#include <vector>

#include "codegree/catalog.hpp"
#include "codegree/exact.hpp"
#include "codegree/parallel.hpp"

namespace codegree {

struct GridConfig {
  unsigned long q_max = 200;
  unsigned n_max = 12;
  unsigned alt_max = 30;
  unsigned m_max = 8;
  unsigned long f_max = 64;
  unsigned long p_max = 1000;
  unsigned t_max = 50;
  Rational k;  // defaults to the constant a

  GridConfig();
  /// Throws DomainError for bounds below the smallest admissible parameter.
  void validate() const;
};

/// One non-pass grid point; both sides rendered exactly.
struct CaseRecord {
  std::string params;
  std::string lhs;
  std::string relation;  // the claimed relation, e.g. ">" or ">="
  std::string rhs;
  bool strict_claimed = true;

  friend bool operator==(const CaseRecord&, const CaseRecord&) = default;
};

struct Fact {
  std::string name;
  bool holds = false;
  friend bool operator==(const Fact&, const Fact&) = default;
};

struct VerifyReport {
  std::string check_name;
  std::size_t cases_checked = 0;
  std::size_t strict_passes = 0;
  std::vector<CaseRecord> equalities;
  std::vector<CaseRecord> failures;
  std::vector<Fact> facts;

  /// cases_checked == strict_passes + |equalities| + |failures|
  bool consistent() const;
  /// No failures, no false facts, and no equality where strictness is
  /// claimed (unless allow_equalities).
  bool clean(bool allow_equalities = false) const;

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

/// Prime powers 2 <= q <= q_max in ascending order.
std::vector<BigInt> prime_powers_up_to(unsigned long q_max);
std::vector<unsigned long> primes_up_to(unsigned long n);

VerifyReport verify_lemma_p1(const GridConfig& cfg, const Catalog& catalog, Execution exec = Execution::parallel);
VerifyReport verify_an_algebra(const GridConfig& cfg, const Catalog& catalog, Execution exec = Execution::parallel);
VerifyReport verify_lemma_arith(const GridConfig& cfg, Execution exec = Execution::parallel);
VerifyReport verify_lemma_simple(const GridConfig& cfg);
VerifyReport verify_theorem_cases(const GridConfig& cfg, const Catalog& catalog, Execution exec = Execution::parallel);
VerifyReport verify_simple_g_cases(const GridConfig& cfg, const Catalog& catalog, Execution exec = Execution::parallel);

/// Descriptors of the degree-table families on the grid (A_1, G_2 and
/// 2G_2 are not in the table). Non-simple parameters are skipped.
std::vector<GroupDescriptor> lie_grid(const GridConfig& cfg);

}  // namespace codegree
