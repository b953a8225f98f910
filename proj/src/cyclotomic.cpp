#include "codegree/cyclotomic.hpp"

#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>

namespace codegree {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::x_pow_minus_one(unsigned n) {
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[0] = -1;
  c[n] += 1;
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1 || i == 0) out += to_string(mag);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial::DivMod IntPolynomial::divmod_monic(const IntPolynomial& divisor) const {
  if (divisor.is_zero() || divisor.leading() != 1) throw DomainError("divisor must be monic");
  std::vector<BigInt> rem = coeffs_;
  const std::size_t dlen = divisor.coeffs_.size();
  if (rem.size() < dlen) return {IntPolynomial{}, *this};
  std::vector<BigInt> quot(rem.size() - dlen + 1, BigInt(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt factor = rem[k + dlen - 1];
    quot[k] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j < dlen; ++j) rem[k + j] -= factor * divisor.coeffs_[j];
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

namespace {

struct CyclotomicCache {
  std::mutex mutex;
  // unique_ptr keeps references stable across rehash/insert.
  std::map<unsigned, std::unique_ptr<IntPolynomial>> table;
};

CyclotomicCache& cache() {
  static CyclotomicCache c;
  return c;
}

}  // namespace

const IntPolynomial& cyclotomic(unsigned n) {
  if (n == 0) throw DomainError("cyclotomic requires n >= 1");
  auto& c = cache();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.table.find(n); it != c.table.end()) return *it->second;
  }
  // Built outside the lock; the recursion takes it again for each divisor.
  IntPolynomial result = IntPolynomial::x_pow_minus_one(n);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = result.divmod_monic(cyclotomic(d));
    if (!r.is_zero()) {
      std::cerr << "internal error: Phi_" << d << " does not divide x^" << n << " - 1 cofactor\n";
      std::abort();
    }
    result = std::move(q);
  }
  std::lock_guard lock(c.mutex);
  auto [it, inserted] = c.table.emplace(n, std::make_unique<IntPolynomial>(std::move(result)));
  return *it->second;
}

BigInt eval_poly(const IntPolynomial& p, const BigInt& x) {
  BigInt acc = 0;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

BigInt cyclotomic_value(unsigned n, const BigInt& x) { return eval_poly(cyclotomic(n), x); }

bool product_identity_check(unsigned n) {
  if (n == 0) throw DomainError("product_identity_check requires n >= 1");
  IntPolynomial product({BigInt(1)});
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) product = product * cyclotomic(d);
  return product == IntPolynomial::x_pow_minus_one(n);
}

// ---------------------------------------------------------------------------
// QuadExpr

QuadExpr::QuadExpr(Rational rational_part, Rational surd_part, unsigned long radicand)
    : rational_(std::move(rational_part)), surd_(std::move(surd_part)), radicand_(radicand) {
  if (radicand_ < 2) throw DomainError("radicand must be at least 2");
  for (unsigned long d = 2; d * d <= radicand_; ++d)
    if (radicand_ % (d * d) == 0) throw DomainError("radicand must be squarefree");
}

Rational QuadExpr::norm() const {
  return rational_ * rational_ - Rational(static_cast<long>(radicand_)) * surd_ * surd_;
}

std::string QuadExpr::str() const {
  std::string root = "sqrt(" + std::to_string(radicand_) + ")";
  if (surd_.sign() == 0) return rational_.str();
  std::string s = surd_.str() + "*" + root;
  if (rational_.sign() == 0) return s;
  return rational_.str() + " + " + s;
}

namespace {
void same_ring(const QuadExpr& a, const QuadExpr& b) {
  if (a.radicand() != b.radicand()) throw DomainError("QuadExpr operands over different radicands");
}
}  // namespace

QuadExpr operator+(const QuadExpr& a, const QuadExpr& b) {
  same_ring(a, b);
  return {a.rational_ + b.rational_, a.surd_ + b.surd_, a.radicand_};
}

QuadExpr operator-(const QuadExpr& a, const QuadExpr& b) {
  same_ring(a, b);
  return {a.rational_ - b.rational_, a.surd_ - b.surd_, a.radicand_};
}

QuadExpr operator*(const QuadExpr& a, const QuadExpr& b) {
  same_ring(a, b);
  const Rational r(static_cast<long>(a.radicand_));
  return {a.rational_ * b.rational_ + r * a.surd_ * b.surd_,
          a.rational_ * b.surd_ + a.surd_ * b.rational_, a.radicand_};
}

QuadExpr operator/(const QuadExpr& a, const QuadExpr& b) {
  same_ring(a, b);
  const Rational n = b.norm();
  if (n.sign() == 0) throw DomainError("QuadExpr division by zero");
  QuadExpr num = a * b.conjugate();
  return {num.rational_ / n, num.surd_ / n, a.radicand_};
}

QuadExpr eval_poly(const IntPolynomial& p, const QuadExpr& x) {
  QuadExpr acc = QuadExpr::rational(0, x.radicand());
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + QuadExpr::rational(Rational(c[i]), x.radicand());
  return acc;
}

BigInt quad_to_integer(const QuadExpr& e) {
  if (e.surd_part().sign() != 0)
    throw DomainError("value " + e.str() + " is irrational; check the parameter parity of the formula");
  if (!e.rational_part().is_integer())
    throw DomainError("value " + e.str() + " is not an integer");
  return e.rational_part().num();
}

}  // namespace codegree
