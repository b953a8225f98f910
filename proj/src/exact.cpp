#include "codegree/exact.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <vector>

namespace codegree {

namespace {

constexpr std::array<unsigned long, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Trial division handles everything below this bound directly.
constexpr unsigned long kTrialLimit = 1UL << 20;

const BigInt& mr_limit() {
  static const BigInt limit("3317044064679887385961981");
  return limit;
}

bool miller_rabin(const BigInt& n) {
  BigInt d = n - 1;
  unsigned long s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  const BigInt n_minus_1 = n - 1;
  for (unsigned long a : kWitnesses) {
    BigInt x;
    BigInt base = a;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (unsigned long r = 1; r < s; ++r) {
      x = (x * x) % n;
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Wheel mod 30 increments starting from 7.
constexpr std::array<unsigned, 8> kWheel = {4, 2, 4, 2, 4, 6, 2, 6};

// Pollard-Brent; n is odd, composite and has no factor below kTrialLimit.
BigInt find_factor(const BigInt& n) {
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    constexpr unsigned long m = 128;
    auto step = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          BigInt diff = x - y;
          q = (q * abs(diff)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        BigInt diff = x - ys;
        BigInt ad = abs(diff);
        mpz_gcd(g.get_mpz_t(), ad.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const BigInt& n, FactoredInteger::Factors& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = find_factor(n);
  factor_into(d, out);
  factor_into(BigInt(n / d), out);
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;
  if (n < BigInt(kTrialLimit) * kTrialLimit) {
    if (n.fits_ulong_p() && n.get_ui() < kTrialLimit) {
      const unsigned long v = n.get_ui();
      for (unsigned long d = 3; d * d <= v; d += 2)
        if (v % d == 0) return false;
      return true;
    }
  }
  for (unsigned long a : kWitnesses)
    if (n == a) return true;
  for (unsigned long a : kWitnesses)
    if (mpz_divisible_ui_p(n.get_mpz_t(), a)) return false;
  if (!miller_rabin(n)) return false;
  if (n < mr_limit()) return true;
  // Beyond the proven range of the base set, also require GMP's Baillie-PSW
  // test (reps = 24 runs BPSW with no extra random-base rounds).
  return mpz_probab_prime_p(n.get_mpz_t(), 24) > 0;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::string to_string(const BigInt& n) { return n.get_str(10); }

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start || !std::all_of(s.begin() + static_cast<long>(start), s.end(),
                                        [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("not an integer: '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

// ---------------------------------------------------------------------------
// FactoredInteger

FactoredInteger::FactoredInteger(const Factors& factors) {
  for (const auto& [p, e] : factors) {
    if (!is_prime(p)) throw DomainError("factor " + to_string(p) + " is not prime");
    if (e > 0) factors_.emplace(p, e);
  }
}

FactoredInteger FactoredInteger::prime_power(const BigInt& p, unsigned long exponent) {
  return FactoredInteger(Factors{{p, exponent}});
}

FactoredInteger FactoredInteger::parse(std::string_view text) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("malformed factorization '" + std::string(text) + "': " + why);
  };
  if (text == "1") return {};
  if (text.empty()) fail("empty");
  Factors factors;
  BigInt previous = 0;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find('*', pos);
    std::string_view term = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    std::size_t caret = term.find('^');
    std::string_view base = term.substr(0, caret);
    if (base.empty() || base.front() == '-' || base.front() == '+') fail("bad base");
    BigInt p;
    try {
      p = parse_bigint(base);
    } catch (const std::invalid_argument&) {
      fail("bad base '" + std::string(base) + "'");
    }
    unsigned long e = 1;
    if (caret != std::string_view::npos) {
      std::string_view exp = term.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), e);
      if (ec != std::errc{} || ptr != exp.data() + exp.size() || exp.empty()) fail("bad exponent");
      if (e < 2) fail("exponent must be at least 2 when written");
    }
    if (!is_prime(p)) fail(to_string(p) + " is not prime");
    if (p <= previous) fail("primes must be strictly ascending");
    previous = p;
    factors.emplace(p, e);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return FactoredInteger(factors);
}

BigInt FactoredInteger::value() const {
  BigInt r = 1;
  for (const auto& [p, e] : factors_) r *= codegree::pow(p, e);
  return r;
}

std::string FactoredInteger::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : factors_) {
    if (!out.empty()) out += '*';
    out += to_string(p);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

unsigned long FactoredInteger::exponent_of(const BigInt& p) const {
  auto it = factors_.find(p);
  return it == factors_.end() ? 0 : it->second;
}

FactoredInteger FactoredInteger::p_part(const BigInt& p) const {
  FactoredInteger r;
  if (auto e = exponent_of(p); e > 0) r.factors_.emplace(p, e);
  return r;
}

bool FactoredInteger::divides(const FactoredInteger& other) const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [&](const auto& kv) { return other.exponent_of(kv.first) >= kv.second; });
}

FactoredInteger FactoredInteger::pow(unsigned long exponent) const {
  FactoredInteger r;
  if (exponent == 0) return r;
  for (const auto& [p, e] : factors_) r.factors_.emplace(p, e * exponent);
  return r;
}

FactoredInteger operator*(const FactoredInteger& a, const FactoredInteger& b) {
  FactoredInteger r = a;
  for (const auto& [p, e] : b.factors_) r.factors_[p] += e;
  return r;
}

FactoredInteger factorize(const BigInt& n) {
  if (n <= 0) throw DomainError("factorize requires n >= 1, got " + to_string(n));
  FactoredInteger::Factors out;
  BigInt m = n;
  auto strip = [&](unsigned long d) {
    if (!mpz_divisible_ui_p(m.get_mpz_t(), d)) return;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
      ++e;
    }
    out.emplace(BigInt(d), e);
  };
  strip(2);
  strip(3);
  strip(5);
  unsigned long d = 7;
  for (std::size_t w = 0; d < kTrialLimit; d += kWheel[w], w = (w + 1) % kWheel.size()) {
    if (m == 1) break;
    if (BigInt(d) * d > m) break;
    strip(d);
  }
  if (m > 1) factor_into(m, out);
  return FactoredInteger(out);
}

FactoredInteger fi_mul(const FactoredInteger& a, const FactoredInteger& b) { return a * b; }

BigInt fi_value(const FactoredInteger& a) { return a.value(); }

FactoredInteger fi_div(const FactoredInteger& a, const FactoredInteger& b) {
  if (!b.divides(a)) throw DomainError(b.str() + " does not divide " + a.str());
  FactoredInteger::Factors f = a.factors();
  for (const auto& [p, e] : b.factors()) f[p] -= e;
  return FactoredInteger(f);
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("denominator must be positive in '" + std::string(text) + "'");
  return Rational(parse_bigint(text.substr(0, slash)), den);
}

std::string Rational::str() const {
  if (is_integer()) return to_string(num());
  return to_string(num()) + "/" + to_string(den());
}

std::string Rational::decimal(int digits) const {
  BigInt n = abs(num());
  const BigInt d = den();
  BigInt scale = codegree::pow(BigInt(10), static_cast<unsigned long>(digits));
  BigInt scaled = (n * scale * 2 + d) / (d * 2);  // round half up
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string out = (sign() < 0 && scaled != 0) ? "-" : "";
  out += to_string(whole);
  if (digits > 0) {
    std::string f = to_string(frac);
    out += '.' + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
Rational operator/(const Rational& a, const Rational& b) {
  if (b.value_ == 0) throw DomainError("division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}
Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Cross-multiplication; denominators are positive.
  BigInt lhs = a.num() * b.den();
  BigInt rhs = b.num() * a.den();
  int c = cmp(lhs, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering rat_cmp(const Rational& x, const Rational& y) { return x <=> y; }

std::string_view ordering_name(std::strong_ordering ord) {
  if (ord < 0) return "less";
  if (ord > 0) return "greater";
  return "equal";
}

}  // namespace codegree
