#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "codegree/catalog.hpp"
#include "codegree/verifier.hpp"

using namespace codegree;
using boost::multiprecision::cpp_int;

namespace {

const Catalog& cat() { return Catalog::bundled(); }

GroupDescriptor lie(Family f, unsigned n, long q) { return GroupDescriptor::lie(f, n, BigInt(q)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupDescriptor from_row(const std::string& fam, unsigned n, const BigInt& field) {
  const auto f = *parse_family(fam);
  if (f == Family::Suzuki || f == Family::ReeF4 || f == Family::Ree) {
    const auto split = prime_power_split(field);
    REQUIRE(split);
    return GroupDescriptor::suzuki_ree(f, static_cast<unsigned>((split->second - 1) / 2));
  }
  return GroupDescriptor::lie(f, n, field);
}

std::string block(const std::string& name, const std::string& order, const std::string& extra = "") {
  return "[[group]]\nname = \"" + name + "\"\norder = \"" + order +
         "\"\ndegree = 10\nchar_label = \"chi_2\"\nout = 1\n" + extra;
}

// Independent oracle: |PSL(n+1, q)| via cpp_int and Euclid.
cpp_int psl_order(unsigned n, unsigned q) {
  cpp_int v = 1, qq = q;
  for (unsigned i = 0; i < n * (n + 1) / 2; ++i) v *= q;
  for (unsigned i = 2; i <= n + 1; ++i) {
    cpp_int t = 1;
    for (unsigned j = 0; j < i; ++j) t *= q;
    v *= t - 1;
  }
  unsigned a = n + 1, b = q - 1;
  while (b) {
    const unsigned r = a % b;
    a = b;
    b = r;
  }
  return v / a;
}

}  // namespace

TEST_CASE("order examples") {
  CHECK(cat().order(lie(Family::A, 1, 5)).value() == 60);
  CHECK(cat().order(lie(Family::G2, 2, 3)).value() == 4245696);
  CHECK(cat().order(GroupDescriptor::tits()).str() == "2^11*3^3*5^2*13");
  CHECK(cat().order(GroupDescriptor::sporadic("Fi22")).str() == "2^17*3^9*5^2*7*11*13");
}

TEST_CASE("order cross-checks") {
  CHECK(cat().order(lie(Family::A, 1, 4)).value() == 60);
  CHECK(cat().order(lie(Family::A, 1, 7)).value() == 168);
  CHECK(cat().order(lie(Family::A, 2, 2)).value() == 168);
  CHECK(cat().order(GroupDescriptor::tits()).value() == 17971200);
  CHECK(to_string(cat().order(GroupDescriptor::sporadic("Fi22")).value()) == "64561751654400");
  CHECK(to_string(cat().order(GroupDescriptor::sporadic("ON")).value()) == "460815505920");
}

TEST_CASE("orders match the bundled ATLAS list") {
  const auto text = read_file(std::string(CODEGREE_SOURCE_DIR) + "/data/lie_orders.txt");
  std::istringstream in(text);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string fam, field, order;
    unsigned n = 0;
    ls >> fam >> n >> field >> order;
    CAPTURE(line);
    const auto d = from_row(fam, n, parse_bigint(field));
    CHECK(to_string(cat().order(d).value()) == order);
    CHECK(to_string(cat().order_value(d)) == order);
    ++rows;
  }
  CHECK(rows >= 20);
}

TEST_CASE("A_n orders against an independent PSL formula") {
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
      if (n == 1 && q <= 3) continue;
      CAPTURE(n);
      CAPTURE(q);
      CHECK(to_string(cat().order(lie(Family::A, n, q)).value()) == psl_order(n, q).str());
    }
}

TEST_CASE("factored and direct orders agree across the grid") {
  GridConfig cfg;
  cfg.q_max = 64;
  cfg.n_max = 8;
  cfg.m_max = 4;
  for (const auto& d : lie_grid(cfg)) {
    CAPTURE(d.str());
    CHECK(cat().order(d).value() == cat().order_value(d));
  }
  for (unsigned q : {3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u}) {
    const auto d = lie(Family::G2, 2, q);
    CHECK(cat().order(d).value() == cat().order_value(d));
  }
  for (unsigned m = 1; m <= 4; ++m) {
    const auto d = GroupDescriptor::suzuki_ree(Family::Ree, m);
    CHECK(cat().order(d).value() == cat().order_value(d));
  }
}

TEST_CASE("B_n and C_n have equal orders") {
  for (unsigned n = 2; n <= 10; ++n)
    for (long q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49, 64, 81, 125}) {
      if (n == 2 && q == 2) continue;
      CHECK(cat().order(lie(Family::B, n, q)) == cat().order(lie(Family::C, n, q)));
    }
}

TEST_CASE("Steinberg cube bound and degree ordering on the grid") {
  GridConfig cfg;
  cfg.q_max = 128;
  cfg.n_max = 10;
  for (const auto& d : lie_grid(cfg)) {
    CAPTURE(d.str());
    const auto order = cat().order(d);
    const auto st = cat().steinberg_degree(d);
    CHECK(st == order.p_part(d.p()).value());
    CHECK(order.value() < st * st * st);
    if (!(d.family() == Family::A && d.n() == 1)) {
      const auto th = theta1_degree(d);
      CHECK(th > 1);
      CHECK(th < st);
    }
  }
}

TEST_CASE("theta1 examples") {
  CHECK(theta1_degree(lie(Family::A, 2, 3)) == 12);
  CHECK(theta1_degree(lie(Family::Triality, 4, 8)) == 26);
  CHECK(theta1_degree(GroupDescriptor::suzuki_ree(Family::Suzuki, 1)) == 14);
  CHECK(theta1_degree(GroupDescriptor::suzuki_ree(Family::ReeF4, 1)) > 1);
  CHECK_THROWS_AS(theta1_degree(lie(Family::G2, 2, 3)), DomainError);
  CHECK_THROWS_AS(theta1_degree(GroupDescriptor::suzuki_ree(Family::Ree, 1)), DomainError);
}

TEST_CASE("steinberg examples") {
  CHECK(cat().steinberg_degree(lie(Family::A, 1, 7)) == 7);
  CHECK(cat().steinberg_degree(lie(Family::G2, 2, 3)) == 729);
  CHECK(cat().steinberg_degree(lie(Family::A, 2, 2)) == 8);
  CHECK_THROWS_AS(cat().steinberg_degree(GroupDescriptor::alternating(5)), DomainError);
  CHECK_THROWS_AS(cat().steinberg_degree(GroupDescriptor::sporadic("M11")), DomainError);
}

TEST_CASE("sporadic rows") {
  CHECK(cat().sporadic_row("ON").min_ext_degree == 10944);
  CHECK(cat().sporadic_row("ON").char_label == "chi_2");
  CHECK(cat().sporadic_row("M11").min_ext_degree == 10);
  CHECK(cat().sporadic_row("M11").char_label == "chi_2");
  CHECK(cat().sporadic_row("B").min_ext_degree == 4371);
  CHECK(cat().sporadic_row("B").char_label == "chi_2");
  CHECK(cat().sporadic_row("Tits").min_ext_degree == 27);
  CHECK(cat().sporadic_rows().size() == 27);
  CHECK_THROWS(cat().sporadic_row("M13"));
  CHECK_THROWS(GroupDescriptor::sporadic("M13"));
  for (const auto& r : cat().sporadic_rows()) CHECK(r.min_ext_degree > 1);
}

TEST_CASE("alternating") {
  CHECK(alternating_theta(5) == 4);
  CHECK(alternating_theta(6) == 9);
  CHECK(alternating_theta(10) == 35);
  CHECK_THROWS_AS(alternating_theta(4), DomainError);
  for (unsigned n = 5; n <= 40; ++n) {
    cpp_int fact = 1;
    for (unsigned i = 2; i <= n; ++i) fact *= i;
    const auto d = GroupDescriptor::alternating(n);
    CHECK(to_string(cat().order(d).value()) == cpp_int(fact / 2).str());
    CHECK(cat().order_value(d) == cat().order(d).value());
  }
  CHECK_THROWS_AS(GroupDescriptor::alternating(4), DomainError);
}

TEST_CASE("out_bound examples") {
  CHECK(out_bound(lie(Family::G2, 2, 4)) == 4);
  CHECK(out_bound(lie(Family::G2, 2, 9)) == 4);
  CHECK(out_bound(lie(Family::G2, 2, 25)) == 25);
  CHECK(out_bound(lie(Family::G2, 2, 27)) == 6);
  CHECK(out_bound(GroupDescriptor::suzuki_ree(Family::Ree, 1)) == 3);
  CHECK(out_bound(GroupDescriptor::sporadic("Fi22")) == 2);
  CHECK_THROWS_AS(out_bound(lie(Family::E8, 8, 2)), DomainError);
  CHECK_THROWS_AS(out_bound(GroupDescriptor::sporadic("M11")), DomainError);
}

TEST_CASE("descriptor validation") {
  CHECK_THROWS_AS(lie(Family::A, 1, 2), DomainError);
  CHECK_THROWS_AS(lie(Family::A, 1, 3), DomainError);
  CHECK_THROWS_AS(lie(Family::G2, 2, 2), DomainError);
  CHECK_THROWS_AS(lie(Family::A, 2, 6), DomainError);
  CHECK_THROWS_AS(lie(Family::TwistedD, 4, 8), DomainError);
  CHECK_THROWS_AS(lie(Family::Triality, 4, 4), DomainError);
  CHECK_THROWS_AS(lie(Family::D, 3, 4), DomainError);
  CHECK_THROWS_AS(GroupDescriptor::suzuki_ree(Family::Suzuki, 0), DomainError);
  CHECK_THROWS_AS(GroupDescriptor::suzuki_ree(Family::G2, 1), DomainError);
  const auto d = lie(Family::TwistedD, 4, 9);
  CHECK(d.base_q() == 3);
  CHECK(d.p() == 3);
  CHECK(d.f() == 2);
  CHECK(GroupDescriptor::suzuki_ree(Family::Suzuki, 1).str() == "2B_2(8)");
  CHECK(lie(Family::A, 2, 3).str() == "A_2(3)");
  CHECK(GroupDescriptor::alternating(7).str() == "Alt(7)");
  CHECK(*parse_family("3D4") == Family::Triality);
  CHECK_FALSE(parse_family("X9"));
}

TEST_CASE("sporadic data parser") {
  const auto good = block("M11", "2^4*3^2*5*11");
  CHECK(parse_sporadic_data(good).size() == 1);
  CHECK_THROWS(parse_sporadic_data(good + block("M11", "2^4*3^2*5*11")));
  CHECK_THROWS(parse_sporadic_data(block("M11", "3^2*2^4*5*11")));
  CHECK_THROWS(parse_sporadic_data(block("M11", "2^4*3^2*5*12")));
  CHECK_THROWS(parse_sporadic_data(block("M11", "2^4*3^2*5*11", "colour = 3\n")));
  CHECK_THROWS(parse_sporadic_data(block("M11", "2^4*3^2*5*11", "degree = 11\n")));
  CHECK_THROWS(parse_sporadic_data("name = \"M11\"\n"));
  CHECK_THROWS(parse_sporadic_data("[[group]]\nname = \"M11\"\n"));
  CHECK_THROWS(Catalog(parse_sporadic_data(good)));
}

TEST_CASE("data directory override") {
  const auto text = read_file(std::string(CODEGREE_SOURCE_DIR) + "/data/sporadic.toml");
  const auto loaded = Catalog::load(std::string(CODEGREE_SOURCE_DIR) + "/data");
  CHECK(loaded.sporadic_rows().size() == 27);
  CHECK(parse_sporadic_data(text).size() == 27);
  CHECK_THROWS(Catalog::load("/nonexistent-directory"));
}
