#pragma once

#include <string>
#include <vector>

#include "codegree/exact.hpp"

namespace codegree {

/// Integer polynomial; coefficient i multiplies x^i. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  /// x^n - 1
  static IntPolynomial x_pow_minus_one(unsigned n);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const BigInt& leading() const { return coeffs_.back(); }
  BigInt coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  /// Descending powers, e.g. "x^4 - x^2 + 1".
  std::string str() const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  struct DivMod;
  /// Long division by a monic divisor.
  DivMod divmod_monic(const IntPolynomial& divisor) const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

struct IntPolynomial::DivMod {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// The n-th cyclotomic polynomial. Memoized in a process-wide cache that is
/// safe to call from concurrent threads.
const IntPolynomial& cyclotomic(unsigned n);

BigInt eval_poly(const IntPolynomial& p, const BigInt& x);

/// Phi_n(x) evaluated at an integer.
BigInt cyclotomic_value(unsigned n, const BigInt& x);

/// prod_{d | n} Phi_d(x) == x^n - 1 as exact polynomials.
bool product_identity_check(unsigned n);

/// rational_part + surd_part * sqrt(radicand), radicand squarefree > 1.
class QuadExpr {
 public:
  QuadExpr(Rational rational_part, Rational surd_part, unsigned long radicand);
  static QuadExpr rational(Rational r, unsigned long radicand) { return {std::move(r), 0, radicand}; }
  static QuadExpr sqrt_of(unsigned long radicand) { return {0, 1, radicand}; }

  const Rational& rational_part() const { return rational_; }
  const Rational& surd_part() const { return surd_; }
  unsigned long radicand() const { return radicand_; }

  QuadExpr conjugate() const { return {rational_, -surd_, radicand_}; }
  /// rational_part^2 - radicand * surd_part^2
  Rational norm() const;
  std::string str() const;

  friend QuadExpr operator+(const QuadExpr& a, const QuadExpr& b);
  friend QuadExpr operator-(const QuadExpr& a, const QuadExpr& b);
  friend QuadExpr operator*(const QuadExpr& a, const QuadExpr& b);
  /// Division by a nonzero element via the conjugate.
  friend QuadExpr operator/(const QuadExpr& a, const QuadExpr& b);
  friend bool operator==(const QuadExpr&, const QuadExpr&) = default;

 private:
  Rational rational_;
  Rational surd_;
  unsigned long radicand_;
};

QuadExpr eval_poly(const IntPolynomial& p, const QuadExpr& x);

/// The value of e as a rational integer; throws DomainError when a surd
/// survives or the rational part is fractional.
BigInt quad_to_integer(const QuadExpr& e);

}  // namespace codegree
