#include "codegree/catalog.hpp"

#include <array>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include "codegree/cyclotomic.hpp"

#ifndef CODEGREE_DEFAULT_DATA_DIR
#define CODEGREE_DEFAULT_DATA_DIR "data"
#endif

namespace codegree {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::string_view display;
};

constexpr std::array<FamilyInfo, 19> kFamilies = {{
    {Family::Alt, "Alt", "Alt"},
    {Family::A, "A", "A"},
    {Family::TwistedA, "2A", "2A"},
    {Family::B, "B", "B"},
    {Family::C, "C", "C"},
    {Family::D, "D", "D"},
    {Family::TwistedD, "2D", "2D"},
    {Family::Triality, "3D4", "3D"},
    {Family::G2, "G2", "G"},
    {Family::F4, "F4", "F"},
    {Family::E6, "E6", "E"},
    {Family::TwistedE6, "2E6", "2E"},
    {Family::E7, "E7", "E"},
    {Family::E8, "E8", "E"},
    {Family::Suzuki, "2B2", "2B"},
    {Family::Ree, "2G2", "2G"},
    {Family::ReeF4, "2F4", "2F"},
    {Family::Tits, "Tits", "Tits"},
    {Family::Sporadic, "Sporadic", "Sporadic"},
}};

const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies)
    if (i.family == f) return i;
  std::abort();
}

const std::set<std::string, std::less<>>& sporadic_names() {
  static const std::set<std::string, std::less<>> names = {
      "M11", "M12", "J1",  "M22", "J2", "M23", "HS",   "J3",    "M24", "McL", "He", "Ru", "Suz", "ON",
      "Co3", "Co2", "Fi22", "HN", "Ly", "Th",  "Fi23", "Co1", "J4",  "Fi24'", "B", "M"};
  return names;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt xm(const BigInt& x, unsigned long i) { return pow(x, i) - 1; }
BigInt xp(const BigInt& x, unsigned long i) { return pow(x, i) + 1; }

// Order of a Lie-type group as x^N * prod Phi_d(x)^{e_d} / divisor, where x
// is q (or Q for Suzuki/Ree).
struct OrderShape {
  BigInt x;
  BigInt p;
  unsigned long x_exponent = 0;  // x = p^x_exponent
  unsigned long top = 0;         // N
  std::map<unsigned, unsigned long> phi;
  BigInt divisor = 1;

  void minus(unsigned i) {  // x^i - 1
    for (unsigned d = 1; d <= i; ++d)
      if (i % d == 0) ++phi[d];
  }
  void plus(unsigned i) {  // x^i + 1
    for (unsigned d = 1; d <= 2 * i; ++d)
      if ((2 * i) % d == 0 && i % d != 0) ++phi[d];
  }
};

OrderShape shape_of(const GroupDescriptor& d) {
  OrderShape s;
  const unsigned n = d.n();
  s.p = d.p();
  const bool suzuki_ree = d.family() == Family::Suzuki || d.family() == Family::Ree || d.family() == Family::ReeF4;
  s.x = suzuki_ree ? d.field() : d.base_q();
  {
    auto split = prime_power_split(s.x);
    s.x_exponent = split->second;
  }
  const BigInt& q = s.x;
  switch (d.family()) {
    case Family::A:
      s.top = n * (n + 1) / 2;
      for (unsigned i = 2; i <= n + 1; ++i) s.minus(i);
      s.divisor = gcd(BigInt(n + 1), q - 1);
      break;
    case Family::TwistedA:
      s.top = n * (n + 1) / 2;
      for (unsigned i = 2; i <= n + 1; ++i) i % 2 == 0 ? s.minus(i) : s.plus(i);
      s.divisor = gcd(BigInt(n + 1), q + 1);
      break;
    case Family::B:
    case Family::C:
      s.top = n * n;
      for (unsigned i = 1; i <= n; ++i) s.minus(2 * i);
      s.divisor = gcd(BigInt(2), q - 1);
      break;
    case Family::D:
      s.top = n * (n - 1);
      s.minus(n);
      for (unsigned i = 1; i < n; ++i) s.minus(2 * i);
      s.divisor = gcd(BigInt(4), xm(q, n));
      break;
    case Family::TwistedD:
      s.top = n * (n - 1);
      s.plus(n);
      for (unsigned i = 1; i < n; ++i) s.minus(2 * i);
      s.divisor = gcd(BigInt(4), xp(q, n));
      break;
    case Family::Triality:
      s.top = 12;
      for (unsigned c : {3u, 6u, 12u}) ++s.phi[c];  // q^8 + q^4 + 1
      s.minus(6);
      s.minus(2);
      break;
    case Family::G2:
      s.top = 6;
      s.minus(6);
      s.minus(2);
      break;
    case Family::F4:
      s.top = 24;
      for (unsigned i : {12u, 8u, 6u, 2u}) s.minus(i);
      break;
    case Family::E6:
      s.top = 36;
      for (unsigned i : {12u, 9u, 8u, 6u, 5u, 2u}) s.minus(i);
      s.divisor = gcd(BigInt(3), q - 1);
      break;
    case Family::TwistedE6:
      s.top = 36;
      for (unsigned i : {12u, 8u, 6u, 2u}) s.minus(i);
      s.plus(9);
      s.plus(5);
      s.divisor = gcd(BigInt(3), q + 1);
      break;
    case Family::E7:
      s.top = 63;
      for (unsigned i : {2u, 6u, 8u, 10u, 12u, 14u, 18u}) s.minus(i);
      s.divisor = gcd(BigInt(2), q - 1);
      break;
    case Family::E8:
      s.top = 120;
      for (unsigned i : {2u, 8u, 12u, 14u, 18u, 20u, 24u, 30u}) s.minus(i);
      break;
    case Family::Suzuki:
      s.top = 2;
      s.plus(2);
      s.minus(1);
      break;
    case Family::Ree:
      s.top = 3;
      s.plus(3);
      s.minus(1);
      break;
    case Family::ReeF4:
      s.top = 12;
      s.plus(6);
      s.minus(4);
      s.plus(3);
      s.minus(1);
      break;
    default:
      throw DomainError("not a Lie-type family: " + d.str());
  }
  return s;
}

// Textbook order formulas, evaluated directly.
BigInt lie_order_direct(const GroupDescriptor& d) {
  const unsigned n = d.n();
  const bool suzuki_ree = d.family() == Family::Suzuki || d.family() == Family::Ree || d.family() == Family::ReeF4;
  const BigInt q = suzuki_ree ? d.field() : d.base_q();
  BigInt r = 1;
  switch (d.family()) {
    case Family::A:
      r = pow(q, n * (n + 1) / 2);
      for (unsigned i = 2; i <= n + 1; ++i) r *= xm(q, i);
      return r / gcd(BigInt(n + 1), q - 1);
    case Family::TwistedA:
      r = pow(q, n * (n + 1) / 2);
      for (unsigned i = 2; i <= n + 1; ++i) r *= (i % 2 == 0) ? xm(q, i) : xp(q, i);
      return r / gcd(BigInt(n + 1), q + 1);
    case Family::B:
    case Family::C:
      r = pow(q, n * n);
      for (unsigned i = 1; i <= n; ++i) r *= xm(q, 2 * i);
      return r / gcd(BigInt(2), q - 1);
    case Family::D:
      r = pow(q, n * (n - 1)) * xm(q, n);
      for (unsigned i = 1; i < n; ++i) r *= xm(q, 2 * i);
      return r / gcd(BigInt(4), xm(q, n));
    case Family::TwistedD:
      r = pow(q, n * (n - 1)) * xp(q, n);
      for (unsigned i = 1; i < n; ++i) r *= xm(q, 2 * i);
      return r / gcd(BigInt(4), xp(q, n));
    case Family::Triality:
      return pow(q, 12) * (pow(q, 8) + pow(q, 4) + 1) * xm(q, 6) * xm(q, 2);
    case Family::G2:
      return pow(q, 6) * xm(q, 6) * xm(q, 2);
    case Family::F4:
      return pow(q, 24) * xm(q, 12) * xm(q, 8) * xm(q, 6) * xm(q, 2);
    case Family::E6:
      r = pow(q, 36) * xm(q, 12) * xm(q, 9) * xm(q, 8) * xm(q, 6) * xm(q, 5) * xm(q, 2);
      return r / gcd(BigInt(3), q - 1);
    case Family::TwistedE6:
      r = pow(q, 36) * xm(q, 12) * xp(q, 9) * xm(q, 8) * xm(q, 6) * xp(q, 5) * xm(q, 2);
      return r / gcd(BigInt(3), q + 1);
    case Family::E7:
      r = pow(q, 63);
      for (unsigned i : {2u, 6u, 8u, 10u, 12u, 14u, 18u}) r *= xm(q, i);
      return r / gcd(BigInt(2), q - 1);
    case Family::E8:
      r = pow(q, 120);
      for (unsigned i : {2u, 8u, 12u, 14u, 18u, 20u, 24u, 30u}) r *= xm(q, i);
      return r;
    case Family::Suzuki:
      return pow(q, 2) * xp(q, 2) * (q - 1);
    case Family::Ree:
      return pow(q, 3) * xp(q, 3) * (q - 1);
    case Family::ReeF4:
      return pow(q, 12) * xp(q, 6) * xm(q, 4) * xp(q, 3) * (q - 1);
    default:
      throw DomainError("not a Lie-type family: " + d.str());
  }
}

FactoredInteger factorial_factored(unsigned n) {
  FactoredInteger::Factors f;
  for (unsigned p = 2; p <= n; ++p) {
    bool prime = true;
    for (unsigned d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    unsigned long e = 0;
    for (unsigned long pk = p; pk <= n; pk *= p) e += n / pk;
    f.emplace(BigInt(p), e);
  }
  return FactoredInteger(f);
}

BigInt exact_div(const BigInt& a, const BigInt& b, const char* what) {
  if (b == 0 || a % b != 0) throw DomainError(std::string("non-integral degree formula: ") + what);
  return a / b;
}

}  // namespace

std::string_view family_name(Family f) { return info(f).name; }

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& i : kFamilies)
    if (i.name == name) return i.family;
  return std::nullopt;
}

bool is_lie_type(Family f) { return f != Family::Alt && f != Family::Tits && f != Family::Sporadic; }

std::optional<std::pair<BigInt, unsigned long>> prime_power_split(const BigInt& q) {
  if (q < 2) return std::nullopt;
  FactoredInteger fi = factorize(q);
  if (!fi.is_prime_power()) return std::nullopt;
  return *fi.factors().begin();
}

// ---------------------------------------------------------------------------
// GroupDescriptor

GroupDescriptor GroupDescriptor::alternating(unsigned n) {
  if (n < 5) throw DomainError("Alt(n) is simple only for n >= 5");
  GroupDescriptor d;
  d.family_ = Family::Alt;
  d.n_ = n;
  return d;
}

GroupDescriptor GroupDescriptor::lie(Family family, unsigned rank, const BigInt& field) {
  auto split = prime_power_split(field);
  if (!split) throw DomainError("field size " + to_string(field) + " is not a prime power");
  GroupDescriptor d;
  d.family_ = family;
  d.field_ = field;
  d.p_ = split->first;
  d.f_ = split->second;
  d.base_q_ = field;
  auto need = [&](bool ok, const std::string& why) {
    if (!ok) throw DomainError(d.str() + ": " + why);
  };
  switch (family) {
    case Family::A:
      d.n_ = rank;
      need(rank >= 1, "rank must be >= 1");
      need(rank != 1 || field >= 4, "A_1(2) and A_1(3) are not simple");
      break;
    case Family::TwistedA:
      d.n_ = rank;
      need(rank >= 2, "rank must be >= 2");
      need(!(rank == 2 && field == 2), "2A_2(2) is not simple");
      break;
    case Family::B:
    case Family::C:
      d.n_ = rank;
      need(rank >= 2, "rank must be >= 2");
      need(!(rank == 2 && field == 2), "B_2(2) = C_2(2) is not simple");
      break;
    case Family::D:
      d.n_ = rank;
      need(rank >= 4, "rank must be >= 4");
      break;
    case Family::TwistedD:
    case Family::TwistedE6:
      d.n_ = family == Family::TwistedD ? rank : 6;
      need(family != Family::TwistedD || rank >= 4, "rank must be >= 4");
      need(d.f_ % 2 == 0, "Q must be the square of a prime power");
      d.base_q_ = pow(d.p_, d.f_ / 2);
      break;
    case Family::Triality:
      d.n_ = 4;
      need(d.f_ % 3 == 0, "Q must be the cube of a prime power");
      d.base_q_ = pow(d.p_, d.f_ / 3);
      break;
    case Family::G2:
      d.n_ = 2;
      need(field >= 3, "G_2(2) is not simple");
      break;
    case Family::F4:
      d.n_ = 4;
      break;
    case Family::E6:
      d.n_ = 6;
      break;
    case Family::E7:
      d.n_ = 7;
      break;
    case Family::E8:
      d.n_ = 8;
      break;
    default:
      throw DomainError(std::string(family_name(family)) + " is not constructed from (rank, field)");
  }
  return d;
}

GroupDescriptor GroupDescriptor::suzuki_ree(Family family, unsigned m) {
  GroupDescriptor d;
  d.family_ = family;
  d.m_ = m;
  switch (family) {
    case Family::Suzuki:
      d.n_ = 2;
      d.p_ = 2;
      break;
    case Family::Ree:
      d.n_ = 2;
      d.p_ = 3;
      break;
    case Family::ReeF4:
      d.n_ = 4;
      d.p_ = 2;
      break;
    default:
      throw DomainError(std::string(family_name(family)) + " is not a Suzuki or Ree family");
  }
  if (m < 1) throw DomainError(std::string(family_name(family)) + " requires m >= 1 (m = 0 is not simple)");
  d.f_ = 2 * m + 1;
  d.field_ = pow(d.p_, d.f_);
  return d;
}

GroupDescriptor GroupDescriptor::tits() {
  GroupDescriptor d;
  d.family_ = Family::Tits;
  d.name_ = "Tits";
  return d;
}

GroupDescriptor GroupDescriptor::sporadic(std::string name) {
  if (!sporadic_names().contains(name)) throw DomainError("unknown sporadic group '" + name + "'");
  GroupDescriptor d;
  d.family_ = Family::Sporadic;
  d.name_ = std::move(name);
  return d;
}

std::string GroupDescriptor::str() const {
  switch (family_) {
    case Family::Alt:
      return "Alt(" + std::to_string(n_) + ")";
    case Family::Tits:
      return "2F_4(2)'";
    case Family::Sporadic:
      return name_;
    default:
      return std::string(info(family_).display) + "_" + std::to_string(n_) + "(" + to_string(field_) + ")";
  }
}

// ---------------------------------------------------------------------------
// Sporadic data

std::vector<SporadicRow> parse_sporadic_data(std::string_view text) {
  std::vector<SporadicRow> rows;
  std::set<std::string, std::less<>> seen_names;
  std::map<std::string, std::string> block;
  std::size_t block_line = 0;
  std::size_t line_no = 0;

  auto fail = [&](std::size_t line, const std::string& why) {
    throw std::invalid_argument("sporadic data line " + std::to_string(line) + ": " + why);
  };
  auto flush = [&]() {
    if (block_line == 0) return;
    for (const char* key : {"name", "order", "degree", "char_label", "out"})
      if (!block.contains(key)) fail(block_line, std::string("missing key '") + key + "'");
    SporadicRow row;
    row.name = block["name"];
    if (!seen_names.insert(row.name).second) fail(block_line, "duplicate group '" + row.name + "'");
    try {
      row.order = FactoredInteger::parse(block["order"]);
      row.min_ext_degree = parse_bigint(block["degree"]);
      row.out_exact = static_cast<unsigned>(std::stoul(block["out"]));
    } catch (const std::exception& e) {
      fail(block_line, row.name + ": " + e.what());
    }
    if (row.min_ext_degree <= 1) fail(block_line, row.name + ": degree must be > 1");
    row.char_label = block["char_label"];
    rows.push_back(std::move(row));
    block.clear();
  };

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (line == "[[group]]") {
      flush();
      block_line = line_no;
      continue;
    }
    if (block_line == 0) fail(line_no, "key outside a [[group]] block");
    auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected key = value");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    key.erase(key.find_last_not_of(" \t") + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    static const std::set<std::string> known = {"name", "order", "degree", "char_label", "out"};
    if (!known.contains(key)) fail(line_no, "unknown key '" + key + "'");
    if (block.contains(key)) fail(line_no, "repeated key '" + key + "'");
    if (!value.empty() && value.front() == '"') {
      if (value.size() < 2 || value.back() != '"') fail(line_no, "unterminated string");
      value = value.substr(1, value.size() - 2);
    }
    block[key] = value;
  }
  flush();
  return rows;
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("CODEGREE_DATA_DIR"); env && *env) return env;
  return CODEGREE_DEFAULT_DATA_DIR;
}

// ---------------------------------------------------------------------------
// Catalog

Catalog::Catalog(std::vector<SporadicRow> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& name = rows_[i].name;
    if (name != "Tits" && !sporadic_names().contains(name))
      throw std::invalid_argument("unknown group '" + name + "' in sporadic data");
    if (!by_name_.emplace(name, i).second) throw std::invalid_argument("duplicate group '" + name + "'");
  }
  if (by_name_.size() != sporadic_names().size() + 1 || !by_name_.contains("Tits"))
    throw std::invalid_argument("sporadic data must list all 26 sporadic groups and the Tits group");

  // Orders recoverable from the codegree argument itself.
  const auto fi22 = FactoredInteger::parse("2^17*3^9*5^2*7*11*13");
  if (rows_[by_name_.at("Fi22")].order != fi22) throw std::invalid_argument("Fi22 order disagrees with 2^17*3^9*5^2*7*11*13");
  const auto on = fi_div(factorize(10944).pow(3) * FactoredInteger::parse("5*7^3*11*31"),
                         FactoredInteger::parse("2^9*3^2*19^2"));
  if (rows_[by_name_.at("ON")].order != on) throw std::invalid_argument("ON order disagrees with 10944^3 / a");
}

Catalog Catalog::load(const std::filesystem::path& dir) {
  const auto path = dir / "sporadic.toml";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return Catalog(parse_sporadic_data(buf.str()));
}

const Catalog& Catalog::bundled() {
  static const Catalog c = load(data_dir());
  return c;
}

const SporadicRow& Catalog::sporadic_row(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) throw DomainError("unknown sporadic group '" + std::string(name) + "'");
  return rows_[it->second];
}

namespace {

// Phi_n(x) values recur across families and ranks; factor each once.
FactoredInteger factored_cyclotomic_value(unsigned n, const BigInt& x) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, BigInt>, FactoredInteger> cache;
  const auto key = std::make_pair(n, x);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  FactoredInteger f = factorize(cyclotomic_value(n, x));
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(f)).first->second;
}

}  // namespace

FactoredInteger Catalog::order(const GroupDescriptor& d) const {
  switch (d.family()) {
    case Family::Alt:
      return fi_div(factorial_factored(d.n()), factorize(2));
    case Family::Tits:
      return sporadic_row("Tits").order;
    case Family::Sporadic:
      return sporadic_row(d.sporadic_name()).order;
    default:
      break;
  }
  OrderShape s = shape_of(d);
  FactoredInteger r = FactoredInteger::prime_power(s.p, s.x_exponent * s.top);
  for (const auto& [n, e] : s.phi) r = r * factored_cyclotomic_value(n, s.x).pow(e);
  return fi_div(r, factorize(s.divisor));
}

BigInt Catalog::order_value(const GroupDescriptor& d) const {
  switch (d.family()) {
    case Family::Alt: {
      BigInt f;
      mpz_fac_ui(f.get_mpz_t(), d.n());
      return f / 2;
    }
    case Family::Tits:
    case Family::Sporadic:
      return order(d).value();
    default:
      return lie_order_direct(d);
  }
}

BigInt Catalog::steinberg_degree(const GroupDescriptor& d) const {
  if (!is_lie_type(d.family())) throw DomainError(d.str() + " is not of Lie type");
  OrderShape s = shape_of(d);
  return pow(s.p, s.x_exponent * s.top);
}

// ---------------------------------------------------------------------------
// Degrees

bool has_theta1(Family f) {
  switch (f) {
    case Family::A:
    case Family::TwistedA:
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::TwistedD:
    case Family::Triality:
    case Family::F4:
    case Family::E6:
    case Family::TwistedE6:
    case Family::E7:
    case Family::E8:
    case Family::Suzuki:
    case Family::ReeF4:
      return true;
    default:
      return false;
  }
}

BigInt theta1_degree(const GroupDescriptor& d) {
  if (!has_theta1(d.family()) || (d.family() == Family::A && d.n() < 2))
    throw DomainError(d.str() + " has no entry in the unipotent degree table");
  const unsigned n = d.n();
  const BigInt& q = d.base_q();
  auto phi = [&](unsigned k) { return cyclotomic_value(k, q); };
  switch (d.family()) {
    case Family::A:
      return exact_div(pow(q, n + 1) - q, q - 1, "A_n");
    case Family::TwistedA:
      return exact_div(pow(q, n + 1) + ((n + 1) % 2 == 0 ? q : BigInt(-q)), q + 1, "2A_n");
    case Family::B:
    case Family::C:
      return exact_div((pow(q, n) - 1) * (pow(q, n) - q), 2 * (q + 1), "B_n/C_n");
    case Family::D:
      return exact_div((pow(q, n) - 1) * (pow(q, n - 1) + q), q * q - 1, "D_n");
    case Family::TwistedD:
      return exact_div((pow(q, n) + 1) * (pow(q, n - 1) - q), q * q - 1, "2D_n");
    case Family::Triality:
      return q * phi(12);
    case Family::F4:
      return q * q * phi(3) * phi(3) * phi(6) * phi(6) * phi(12);
    case Family::E6:
      return q * phi(8) * phi(9);
    case Family::TwistedE6:
      return q * phi(8) * phi(18);
    case Family::E7:
      return q * phi(7) * phi(12) * phi(14);
    case Family::E8:
      return q * phi(4) * phi(4) * phi(8) * phi(12) * phi(20) * phi(24);
    case Family::Suzuki:
    case Family::ReeF4: {
      // q = sqrt(Q) = 2^m * sqrt(2) lives in Z[sqrt(2)].
      const QuadExpr root_q(0, Rational(pow(BigInt(2), d.m())), 2);
      const QuadExpr inv_sqrt2(0, Rational(1, 2), 2);
      auto at = [&](unsigned k) { return eval_poly(cyclotomic(k), root_q); };
      QuadExpr v = inv_sqrt2 * root_q * at(1) * at(2);
      // The Phi_6 factor of the 2F_4 row is Phi_6(q^2) = Phi_12(q).
      if (d.family() == Family::ReeF4) v = v * at(4) * at(4) * at(12);
      return quad_to_integer(v);
    }
    default:
      throw DomainError(d.str() + " has no entry in the unipotent degree table");
  }
}

BigInt alternating_theta(unsigned n) {
  if (n < 5) throw DomainError("alternating_theta requires n >= 5");
  if (n == 5) return 4;
  return BigInt(n) * (n - 3) / 2;
}

BigInt out_bound(const GroupDescriptor& d) {
  switch (d.family()) {
    case Family::G2:
      return d.field() % 6 == 3 ? BigInt(2 * d.f()) : d.field();
    case Family::Ree:
      return 2 * d.m() + 1;
    case Family::A:
      if (d.n() == 1) return gcd(BigInt(2), d.field() - 1) * d.f();
      break;
    case Family::Sporadic:
      if (d.sporadic_name() == "Fi22") return 2;
      break;
    default:
      break;
  }
  throw DomainError("no Out bound is used for " + d.str());
}

}  // namespace codegree
