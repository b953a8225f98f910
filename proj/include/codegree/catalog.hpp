#pragma once

// Orders and selected character degrees of the finite simple groups that
// the codegree bound is checked against.
//
// Parameter convention: untwisted families and 2A_n take the field size q.
// The other twisted families take the field size Q of their notation:
// Q = q^2 for 2D_n and 2E_6, Q = q^3 for 3D_4, and Q = 2^(2m+1) or
// 3^(2m+1) for the Suzuki and Ree families. Every returned value is a
// function of that parameter alone.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codegree/exact.hpp"

namespace codegree {

enum class Family {
  Alt,
  A,
  TwistedA,   // 2A_n(q)
  B,
  C,
  D,
  TwistedD,   // 2D_n(q^2)
  Triality,   // 3D_4(q^3)
  G2,
  F4,
  E6,
  TwistedE6,  // 2E_6(q^2)
  E7,
  E8,
  Suzuki,     // 2B_2(2^(2m+1))
  Ree,        // 2G_2(3^(2m+1))
  ReeF4,      // 2F_4(2^(2m+1))
  Tits,
  Sporadic,
};

std::string_view family_name(Family f);
/// Accepts the names printed by family_name ("2A", "3D4", "2B2", ...).
std::optional<Family> parse_family(std::string_view name);
bool is_lie_type(Family f);

/// A simple group: family tag plus parameters. Construct through the named
/// factories, which reject non-simple or malformed parameters.
class GroupDescriptor {
 public:
  static GroupDescriptor alternating(unsigned n);
  /// Untwisted families, 2A_n, and the 2D_n / 3D_4 / 2E_6 families (where
  /// `field` is the twisted Q). Rank is ignored for exceptional families.
  static GroupDescriptor lie(Family family, unsigned rank, const BigInt& field);
  /// Suzuki and Ree families by m >= 1.
  static GroupDescriptor suzuki_ree(Family family, unsigned m);
  static GroupDescriptor tits();
  static GroupDescriptor sporadic(std::string name);

  Family family() const { return family_; }
  /// Rank for classical families, degree for Alt, the fixed rank for
  /// exceptional ones.
  unsigned n() const { return n_; }
  /// Field parameter in the family's convention (q or Q); 0 when absent.
  const BigInt& field() const { return field_; }
  /// Characteristic p and exponent f with field = p^f.
  const BigInt& p() const { return p_; }
  unsigned long f() const { return f_; }
  /// The base q with field = q^2 (2D, 2E6) or q^3 (3D4); equals field
  /// otherwise. For Suzuki/Ree families this is unset (q is irrational).
  const BigInt& base_q() const { return base_q_; }
  unsigned m() const { return m_; }
  const std::string& sporadic_name() const { return name_; }

  /// e.g. "A_2(3)", "2B_2(8)", "Alt(7)", "ON".
  std::string str() const;

 private:
  GroupDescriptor() = default;
  Family family_ = Family::Alt;
  unsigned n_ = 0;
  BigInt field_ = 0;
  BigInt p_ = 0;
  unsigned long f_ = 0;
  BigInt base_q_ = 0;
  unsigned m_ = 0;
  std::string name_;
};

/// Splits q = p^f; nullopt unless q is a prime power.
std::optional<std::pair<BigInt, unsigned long>> prime_power_split(const BigInt& q);

struct SporadicRow {
  std::string name;
  FactoredInteger order;
  BigInt min_ext_degree;
  std::string char_label;
  /// True order of Out(S).
  unsigned out_exact = 1;
};

/// The 26 sporadic groups and the Tits group, parsed from the bundled
/// key/value file. Rejects duplicates and malformed factorizations.
std::vector<SporadicRow> parse_sporadic_data(std::string_view text);

/// CODEGREE_DATA_DIR if set, else the directory baked in at build time.
std::filesystem::path data_dir();

class Catalog {
 public:
  explicit Catalog(std::vector<SporadicRow> rows);
  /// Loads sporadic.toml from data_dir().
  static const Catalog& bundled();
  static Catalog load(const std::filesystem::path& dir);

  /// Exact order of the simple group, factored.
  FactoredInteger order(const GroupDescriptor& d) const;
  /// Same order computed directly from the closed formula.
  BigInt order_value(const GroupDescriptor& d) const;

  /// The |S|_p Steinberg degree; Lie-type families only (not Tits).
  BigInt steinberg_degree(const GroupDescriptor& d) const;

  const SporadicRow& sporadic_row(std::string_view name) const;
  const std::vector<SporadicRow>& sporadic_rows() const { return rows_; }

 private:
  std::vector<SporadicRow> rows_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
};

/// Unipotent degree theta_1(1) from the Lie-type degree table; defined for
/// A_n, 2A_n (n >= 2), B_n, C_n, D_n, 2D_n, 3D_4, F_4, E_6, 2E_6, E_7, E_8,
/// 2B_2 and 2F_4.
BigInt theta1_degree(const GroupDescriptor& d);
bool has_theta1(Family f);

/// n(n-3)/2 for n >= 6, 4 for n = 5.
BigInt alternating_theta(unsigned n);

/// Bound on |Out(N)| as used in the theorem's case analysis:
///   G2(q):  q when q is not 3 mod 6, else 2f
///   2G2(3^(2m+1)):  2m+1
///   Fi22:  2
///   A1(q):  gcd(2, q-1) * f
/// The G2 bound for q not 3 mod 6 is far from tight (true |Out| is f, or
/// 2f when p = 3) but it is the bound the argument uses.
BigInt out_bound(const GroupDescriptor& d);

}  // namespace codegree
