#include "codegree/criterion.hpp"

#include <algorithm>

namespace codegree {

BigInt codegree(const CharEntry& e) {
  if (e.degree < 1 || e.kernel_index < 1) throw DomainError("degree and kernel index must be positive");
  if (e.kernel_index % e.degree != 0)
    throw DomainError("degree " + to_string(e.degree) + " does not divide |G:ker| = " + to_string(e.kernel_index));
  return e.kernel_index / e.degree;
}

const Rational& constant_a() {
  static const Rational a(FactoredInteger::parse("2^9*3^2*19^2").value(),
                          FactoredInteger::parse("5*7^3*11*31").value());
  return a;
}

CriterionReport criterion_holds(const std::vector<CharEntry>& entries, const Rational& k, unsigned s) {
  if (k.sign() <= 0) throw DomainError("k must be positive");
  if (s < 1) throw DomainError("s must be >= 1");
  CriterionReport report{k, s, true, {}, {}};
  for (const auto& e : entries) {
    if (e.degree == 1) continue;
    Rational lhs = k * Rational(codegree(e));
    BigInt rhs = pow(e.degree, s);
    auto ord = lhs <=> Rational(rhs);
    if (ord > 0)
      report.violations.push_back({e, lhs, rhs});
    else if (ord == 0)
      report.equalities.push_back({e, lhs, rhs});
  }
  report.holds = report.violations.empty();
  return report;
}

std::strong_ordering cube_equiv(const FactoredInteger& order, const BigInt& degree, const Rational& k) {
  const BigInt g = order.value();
  if (degree < 1 || g % degree != 0) throw DomainError("degree " + to_string(degree) + " does not divide |G|");
  return (k * Rational(g)) <=> Rational(pow(degree, 3));
}

SharpnessReport sharpness_scan(const Catalog& catalog) {
  SharpnessReport report;
  const Rational& a = constant_a();
  for (const auto& row : catalog.sporadic_rows()) {
    if (row.name == "Tits") continue;
    SharpnessRow r{row.name, row.min_ext_degree, row.order,
                   Rational(pow(row.min_ext_degree, 3), row.order.value())};
    r.versus_a = r.ratio <=> a;
    if (row.name == "Fi22")
      report.fi22 = r;
    else
      report.rows.push_back(std::move(r));
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const auto& x, const auto& y) { return x.name < y.name; });
  for (const auto& r : report.rows) {
    if (report.argmax.empty() || r.ratio > report.maximum) {
      report.maximum = r.ratio;
      report.argmax = {r.name};
    } else if (r.ratio == report.maximum) {
      report.argmax.push_back(r.name);
    }
  }
  report.maximum_is_a = report.maximum == a;
  report.unique_at_on = report.argmax == std::vector<std::string>{"ON"};
  report.fi22_exceeds_a = report.fi22.ratio > a;
  return report;
}

}  // namespace codegree
