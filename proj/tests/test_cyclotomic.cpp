#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "codegree/cyclotomic.hpp"

using namespace codegree;
using boost::multiprecision::cpp_int;

namespace {

using Poly = std::vector<cpp_int>;  // index = power

Poly mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division by a monic polynomial; requires zero remainder.
Poly div_exact(Poly a, const Poly& b) {
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = a[i + b.size() - 1];
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
  }
  for (const auto& c : a) REQUIRE(c == 0);
  return q;
}

Poly x_n_minus_1(unsigned n) {
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  return p;
}

int mobius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  return n > 1 ? -mu : mu;
}

// Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}
Poly mobius_cyclotomic(unsigned n) {
  Poly num{1}, den{1};
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d) continue;
    const int mu = mobius(n / d);
    if (mu == 1) num = mul(num, x_n_minus_1(d));
    if (mu == -1) den = mul(den, x_n_minus_1(d));
  }
  if (den.back() < 0)
    for (auto& c : den) c = -c;
  if (num.back() < 0)
    for (auto& c : num) c = -c;
  return div_exact(num, den);
}

Poly to_oracle(const IntPolynomial& p) {
  Poly r;
  for (const auto& c : p.coefficients()) r.emplace_back(to_string(c));
  return r;
}

unsigned long totient_from_factorize(unsigned n) {
  BigInt phi = 1;
  const auto f = factorize(n);
  for (const auto& [p, e] : f.factors()) phi *= (p - 1) * pow(p, e - 1);
  return phi.get_ui();
}

}  // namespace

TEST_CASE("cyclotomic examples") {
  CHECK(cyclotomic(1).str() == "x - 1");
  CHECK(cyclotomic(12).str() == "x^4 - x^2 + 1");
  CHECK(cyclotomic(6).str() == "x^2 - x + 1");
  CHECK(cyclotomic(2).str() == "x + 1");
  CHECK_THROWS_AS(cyclotomic(0), DomainError);
}

TEST_CASE("eval_poly examples") {
  CHECK(eval_poly(cyclotomic(6), 3) == 7);
  CHECK(eval_poly(cyclotomic(1), 1) == 0);
  CHECK(eval_poly(cyclotomic(3) * cyclotomic(6), 3) == 91);
  CHECK(cyclotomic_value(12, 2) == 13);
}

TEST_CASE("product identity examples") {
  CHECK(product_identity_check(1));
  CHECK(product_identity_check(12));
  CHECK(product_identity_check(105));
}

TEST_CASE("cyclotomic matches the Mobius construction") {
  for (unsigned n = 1; n <= 120; ++n) {
    CAPTURE(n);
    CHECK(to_oracle(cyclotomic(n)) == mobius_cyclotomic(n));
  }
}

TEST_CASE("product identity checked by an independent multiplication") {
  for (unsigned n : {1u, 12u, 30u, 105u, 210u}) {
    Poly prod{1};
    for (unsigned d = 1; d <= n; ++d)
      if (n % d == 0) prod = mul(prod, to_oracle(cyclotomic(d)));
    CHECK(prod == x_n_minus_1(n));
  }
}

TEST_CASE("degree is Euler phi and identity holds to 300") {
  for (unsigned n = 1; n <= 300; ++n) {
    CAPTURE(n);
    const auto& p = cyclotomic(n);
    CHECK(static_cast<unsigned long>(p.degree()) == totient_from_factorize(n));
    CHECK(p.leading() == 1);
    if (n >= 2) CHECK(p.coefficient(0) == 1);
    CHECK(product_identity_check(n));
  }
}

TEST_CASE("Phi_105 has a coefficient of magnitude 2") {
  bool found = false;
  for (const auto& c : cyclotomic(105).coefficients()) found = found || abs(c) == 2;
  CHECK(found);
  for (unsigned n = 1; n < 105; ++n)
    for (const auto& c : cyclotomic(n).coefficients()) REQUIRE(abs(c) <= 1);
}

TEST_CASE("values at 1") {
  for (unsigned p = 2; p <= 100; ++p)
    if (is_prime(p)) CHECK(eval_poly(cyclotomic(p), 1) == p);
  for (unsigned n : {6u, 10u, 12u, 15u, 30u, 105u}) CHECK(eval_poly(cyclotomic(n), 1) == 1);
}

TEST_CASE("concurrent construction is consistent") {
  std::vector<std::vector<std::string>> seen(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      for (unsigned n = 301 + t; n <= 400; ++n) (void)cyclotomic(n);
      for (unsigned n = 301; n <= 400; ++n) seen[t].push_back(cyclotomic(n).str());
    });
  for (auto& th : threads) th.join();
  for (int t = 1; t < 4; ++t) CHECK(seen[t] == seen[0]);
}

TEST_CASE("polynomial helpers") {
  const auto p = IntPolynomial::x_pow_minus_one(4);
  const auto dm = p.divmod_monic(cyclotomic(2));
  CHECK(dm.remainder.is_zero());
  CHECK(dm.quotient.str() == "x^3 - x^2 + x - 1");
  CHECK((cyclotomic(1) - cyclotomic(1)).is_zero());
  CHECK(IntPolynomial().degree() == -1);
  CHECK(IntPolynomial({BigInt(3), BigInt(0), BigInt(-2)}).str() == "-2x^2 + 3");
}

TEST_CASE("quad_to_integer examples") {
  const QuadExpr inv_sqrt2(0, Rational(1, 2), 2);
  const QuadExpr sqrt8(0, 2, 2);
  CHECK(quad_to_integer(inv_sqrt2 * sqrt8) == 2);
  CHECK(quad_to_integer(QuadExpr(14, 0, 2)) == 14);
  CHECK(quad_to_integer(inv_sqrt2 * QuadExpr::sqrt_of(2)) == 1);
  CHECK_THROWS_AS(quad_to_integer(QuadExpr::sqrt_of(2)), DomainError);
  CHECK_THROWS_AS(quad_to_integer(QuadExpr(Rational(1, 2), 0, 2)), DomainError);
  CHECK_THROWS_AS(QuadExpr(0, 1, 4), DomainError);
}

TEST_CASE("QuadExpr ring laws on random samples") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> dist(-50, 50);
  auto sample = [&](unsigned long r) {
    return QuadExpr(Rational(dist(rng), 1 + (dist(rng) + 50) % 7), Rational(dist(rng), 1 + (dist(rng) + 50) % 5), r);
  };
  for (unsigned long r : {2ul, 3ul}) {
    for (int i = 0; i < 200; ++i) {
      const auto a = sample(r), b = sample(r), c = sample(r);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
      CHECK((a * b).norm() == a.norm() * b.norm());
      if (!(b == QuadExpr(0, 0, r))) CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("evaluation at a surd") {
  // Phi_12 at sqrt(3): 9 - 3 + 1 = 7, and Phi_12(sqrt Q) = Q^2 - Q + 1.
  CHECK(quad_to_integer(eval_poly(cyclotomic(12), QuadExpr::sqrt_of(3))) == 7);
  const QuadExpr sqrt27(0, 3, 3);
  CHECK(quad_to_integer(eval_poly(cyclotomic(12), sqrt27)) == 27 * 27 - 27 + 1);
}
