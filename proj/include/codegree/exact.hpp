#pragma once

// Exact integer, factored-integer and rational arithmetic.
//
// Every inequality the library checks is reduced to a comparison of
// unbounded integers or reduced fractions; nothing here touches floating
// point.

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace codegree {

using BigInt = mpz_class;

/// Raised for arguments outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Deterministic primality test.
///
/// Trial division for small n, Miller-Rabin with the first thirteen prime
/// bases otherwise; that base set has no strong pseudoprime below
/// 3.3e24. Larger inputs must additionally pass Baillie-PSW, which has no
/// known counterexample.
bool is_prime(const BigInt& n);

BigInt pow(const BigInt& base, unsigned long exponent);
std::string to_string(const BigInt& n);
BigInt parse_bigint(std::string_view text);

/// A positive integer held as its prime factorization.
class FactoredInteger {
 public:
  using Factors = std::map<BigInt, unsigned long>;

  FactoredInteger() = default;

  /// Validates primality of every key and drops zero exponents.
  explicit FactoredInteger(const Factors& factors);

  static FactoredInteger prime_power(const BigInt& p, unsigned long exponent);

  /// Parses the canonical rendering, e.g. "2^6*3^2*19" or "1".
  ///
  /// Primes must be strictly ascending and an exponent of 1 must be omitted,
  /// so that parse(str()) is the identity.
  static FactoredInteger parse(std::string_view text);

  const Factors& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  BigInt value() const;
  std::string str() const;

  unsigned long exponent_of(const BigInt& p) const;
  /// The p-part p^{v_p(n)}.
  FactoredInteger p_part(const BigInt& p) const;
  bool is_prime_power() const { return factors_.size() == 1; }
  bool divides(const FactoredInteger& other) const;

  FactoredInteger pow(unsigned long exponent) const;

  friend FactoredInteger operator*(const FactoredInteger& a, const FactoredInteger& b);
  friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

 private:
  Factors factors_;
};

FactoredInteger factorize(const BigInt& n);
FactoredInteger fi_mul(const FactoredInteger& a, const FactoredInteger& b);
BigInt fi_value(const FactoredInteger& a);
/// Exact quotient a / b; throws DomainError unless b divides a.
FactoredInteger fi_div(const FactoredInteger& a, const FactoredInteger& b);

/// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "num/den" or an integer, with optional leading sign.
  static Rational parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  std::string str() const;
  /// Decimal rendering rounded half-up to `digits` places by exact long
  /// division. Display only.
  std::string decimal(int digits = 6) const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
  mpq_class value_;
};

std::strong_ordering rat_cmp(const Rational& x, const Rational& y);

/// "less" / "equal" / "greater".
std::string_view ordering_name(std::strong_ordering ord);

}  // namespace codegree
