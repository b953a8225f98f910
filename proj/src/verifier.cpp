#include "codegree/verifier.hpp"

#include <functional>

#include "codegree/criterion.hpp"
#include "codegree/cyclotomic.hpp"

namespace codegree {

namespace {

enum class Status { strict, equal, fail };

struct Outcome {
  Status status = Status::strict;
  CaseRecord record;
};

using Outcomes = std::vector<Outcome>;

// Claim: lhs > rhs. Equality is recorded separately; strict_claimed says
// whether equality contradicts the claim.
Outcome claim_greater(std::string params, const Rational& lhs, const Rational& rhs, bool strict_claimed = true) {
  auto ord = lhs <=> rhs;
  if (ord > 0) return {};
  return {ord == 0 ? Status::equal : Status::fail, {std::move(params), lhs.str(), ">", rhs.str(), strict_claimed}};
}

void aggregate(VerifyReport& report, const std::vector<Outcomes>& per_point) {
  for (const auto& outcomes : per_point) {
    for (const auto& o : outcomes) {
      ++report.cases_checked;
      switch (o.status) {
        case Status::strict:
          ++report.strict_passes;
          break;
        case Status::equal:
          report.equalities.push_back(o.record);
          break;
        case Status::fail:
          report.failures.push_back(o.record);
          break;
      }
    }
  }
}

Rational R(const BigInt& v) { return Rational(v); }
BigInt cube(const BigInt& v) { return v * v * v; }

std::string qparam(const char* tag, const BigInt& q) { return std::string(tag) + " q=" + to_string(q); }

}  // namespace

GridConfig::GridConfig() : k(constant_a()) {}

void GridConfig::validate() const {
  auto need = [](bool ok, const char* why) {
    if (!ok) throw DomainError(why);
  };
  need(q_max >= 4, "q_max must be >= 4");
  need(n_max >= 4, "n_max must be >= 4");
  need(alt_max >= 5, "alt_max must be >= 5");
  need(m_max >= 1, "m_max must be >= 1");
  need(f_max >= 1, "f_max must be >= 1");
  need(p_max >= 2, "p_max must be >= 2");
  need(t_max >= 2, "t_max must be >= 2");
  need(k.sign() > 0, "k must be positive");
}

bool VerifyReport::consistent() const {
  return cases_checked == strict_passes + equalities.size() + failures.size();
}

bool VerifyReport::clean(bool allow_equalities) const {
  if (!failures.empty()) return false;
  for (const auto& f : facts)
    if (!f.holds) return false;
  if (allow_equalities) return true;
  for (const auto& e : equalities)
    if (e.strict_claimed) return false;
  return true;
}

std::vector<unsigned long> primes_up_to(unsigned long n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<unsigned long> primes;
  for (unsigned long i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (unsigned long j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<BigInt> prime_powers_up_to(unsigned long q_max) {
  std::vector<unsigned long> out;
  for (unsigned long p : primes_up_to(q_max))
    for (unsigned long q = p; q <= q_max; q *= p) out.push_back(q);
  std::sort(out.begin(), out.end());
  return {out.begin(), out.end()};
}

std::vector<GroupDescriptor> lie_grid(const GridConfig& cfg) {
  std::vector<GroupDescriptor> grid;
  const auto qs = prime_powers_up_to(cfg.q_max);
  auto add = [&](auto make) {
    try {
      grid.push_back(make());
    } catch (const DomainError&) {
      // non-simple parameter
    }
  };
  for (Family fam : {Family::A, Family::TwistedA, Family::B, Family::C, Family::D, Family::TwistedD}) {
    const unsigned lo = (fam == Family::D || fam == Family::TwistedD) ? 4 : 2;
    for (unsigned n = lo; n <= cfg.n_max; ++n)
      for (const auto& q : qs) add([&] { return GroupDescriptor::lie(fam, n, fam == Family::TwistedD ? BigInt(q * q) : q); });
  }
  for (const auto& q : qs) add([&] { return GroupDescriptor::lie(Family::Triality, 4, pow(q, 3)); });
  for (Family fam : {Family::F4, Family::E6, Family::E7, Family::E8})
    for (const auto& q : qs) add([&] { return GroupDescriptor::lie(fam, 0, q); });
  for (const auto& q : qs) add([&] { return GroupDescriptor::lie(Family::TwistedE6, 6, BigInt(q * q)); });
  for (Family fam : {Family::Suzuki, Family::ReeF4})
    for (unsigned m = 1; m <= cfg.m_max; ++m) add([&] { return GroupDescriptor::suzuki_ree(fam, m); });
  return grid;
}

// ---------------------------------------------------------------------------

VerifyReport verify_lemma_p1(const GridConfig& cfg, const Catalog& catalog, Execution exec) {
  cfg.validate();
  VerifyReport report;
  report.check_name = "lemma-p1";
  const bool boundary = cfg.k == constant_a();

  // Lie type: the k-free claim |S| > theta_1(1)^3.
  const auto grid = lie_grid(cfg);
  auto lie = evaluate_points<Outcomes>(
      grid.size(),
      [&](std::size_t i) {
        const auto& d = grid[i];
        BigInt theta = (d.family() == Family::A && d.n() == 2 && d.field() == 2) ? BigInt(3) : theta1_degree(d);
        return Outcomes{claim_greater(d.str(), R(catalog.order_value(d)), R(cube(theta)))};
      },
      exec);
  aggregate(report, lie);

  // Sporadic (Fi22 excepted), Tits, alternating: k * |S| > theta(1)^3.
  std::vector<std::function<Outcome()>> others;
  for (const auto& row : catalog.sporadic_rows()) {
    if (row.name == "Fi22") continue;
    others.emplace_back([&, row_ptr = &row] {
      std::string label = row_ptr->name == "Tits" ? "2F_4(2)'" : row_ptr->name;
      return claim_greater(label, cfg.k * R(row_ptr->order.value()), R(cube(row_ptr->min_ext_degree)), !boundary);
    });
  }
  for (unsigned n = 5; n <= cfg.alt_max; ++n) {
    others.emplace_back([&, n] {
      auto d = GroupDescriptor::alternating(n);
      return claim_greater(d.str(), cfg.k * R(catalog.order_value(d)), R(cube(alternating_theta(n))), !boundary);
    });
  }
  auto rest = evaluate_points<Outcomes>(others.size(), [&](std::size_t i) { return Outcomes{others[i]()}; }, exec);
  aggregate(report, rest);
  return report;
}

VerifyReport verify_an_algebra(const GridConfig& cfg, const Catalog& catalog, Execution exec) {
  cfg.validate();
  VerifyReport report;
  report.check_name = "an-algebra";
  struct Point {
    unsigned n;
    BigInt q;
  };
  std::vector<Point> points;
  for (unsigned n = 2; n <= cfg.n_max; ++n)
    for (const auto& q : prime_powers_up_to(cfg.q_max))
      if (!(n == 2 && q == 2)) points.push_back({n, q});

  auto results = evaluate_points<Outcomes>(
      points.size(),
      [&](std::size_t i) {
        const auto& [n, q] = points[i];
        auto d = GroupDescriptor::lie(Family::A, n, q);
        const Rational direct = Rational(catalog.order_value(d), cube(theta1_degree(d)));
        Rational bound;
        Outcome o;
        std::string params = d.str();
        if (n >= 3) {
          // |S|/theta^3 > q^((n-1)^2-4) (q-1)^2, and that bound is >= 1.
          bound = R(pow(q, (n - 1) * (n - 1) - 4) * (q - 1) * (q - 1));
          auto ord = bound <=> Rational(1);
          if (ord < 0)
            o = {Status::fail, {params + " bound", bound.str(), ">=", "1", false}};
          else if (ord == 0)
            o = {Status::equal, {params + " bound", bound.str(), ">=", "1", false}};
        } else {
          // |S|/theta^3 > (q^3-1)/(q+1)^2 > 1
          bound = Rational(pow(q, 3) - 1, (q + 1) * (q + 1));
          o = claim_greater(params + " n=2 bound", R(pow(q, 3) - 1), R((q + 1) * (q + 1)));
        }
        if (direct < bound) o = {Status::fail, {params + " direct ratio", direct.str(), ">=", bound.str(), false}};
        return Outcomes{o};
      },
      exec);
  aggregate(report, results);
  return report;
}

VerifyReport verify_lemma_arith(const GridConfig& cfg, Execution exec) {
  cfg.validate();
  VerifyReport report;
  report.check_name = "lemma-arith";
  const auto primes = primes_up_to(cfg.p_max);
  struct Point {
    unsigned long p;
    unsigned long f;
  };
  std::vector<Point> points;
  for (unsigned long p : primes)
    for (unsigned long f = 1; f <= cfg.f_max; ++f) points.push_back({p, f});

  struct Result {
    bool qualifies = false;
    bool power_of_three = false;
    Outcome outcome;
  };
  auto results = evaluate_points<Result>(
      points.size(),
      [&](std::size_t i) {
        const auto [p, f] = points[i];
        BigInt q = pow(BigInt(p), f);
        Result r;
        if (q % 6 != 3) return r;
        r.qualifies = true;
        r.power_of_three = p == 3;
        // f < q^(1/3)  <=>  f^3 < q
        r.outcome = claim_greater("q=" + std::to_string(p) + "^" + std::to_string(f), R(q), R(cube(BigInt(f))));
        if (r.outcome.status != Status::strict) {
          std::swap(r.outcome.record.lhs, r.outcome.record.rhs);
          r.outcome.record.relation = "<";
        }
        return r;
      },
      exec);
  bool all_three = true;
  std::vector<Outcomes> outcomes;
  for (const auto& r : results) {
    if (!r.qualifies) continue;
    all_three = all_three && r.power_of_three;
    outcomes.push_back({r.outcome});
  }
  aggregate(report, outcomes);
  report.facts.push_back({"every q = 3 mod 6 is a power of 3", all_three});
  return report;
}

VerifyReport verify_lemma_simple(const GridConfig& cfg) {
  cfg.validate();
  VerifyReport report;
  report.check_name = "lemma-simple";
  std::vector<Outcomes> outcomes;
  // |S| >= 60, so sqrt|S| > 7 in squared form.
  outcomes.push_back({claim_greater("|S|_min=60 vs 7^2", 60, 49)});
  for (unsigned t = 2; t <= cfg.t_max; ++t) {
    // t^2 < |S|^(t - 3/2) at |S| = 60, squared: t^4 < 60^(2t-3)
    Outcome o = claim_greater("t=" + std::to_string(t), R(pow(BigInt(60), 2 * t - 3)), R(pow(BigInt(t), 4)));
    if (o.status != Status::strict) {
      std::swap(o.record.lhs, o.record.rhs);
      o.record.relation = "<";
    }
    outcomes.push_back({o});
  }
  aggregate(report, outcomes);
  return report;
}

VerifyReport verify_theorem_cases(const GridConfig& cfg, const Catalog& catalog, Execution exec) {
  cfg.validate();
  VerifyReport report;
  report.check_name = "theorem-cases";
  const Rational& k = cfg.k;
  const bool boundary = k == constant_a();
  const auto qs = prime_powers_up_to(cfg.q_max);

  std::vector<std::function<Outcomes()>> points;
  // (1) N = A_1(q): k q (q^2 - 1) > q^3
  for (const auto& q : qs) {
    if (q < 4) continue;
    points.emplace_back([&, q] {
      return Outcomes{claim_greater(qparam("(1) A_1", q), k * R(q * (q * q - 1)), R(pow(q, 3)), !boundary)};
    });
  }
  // (2) N = G_2(q), chi(1) <= |G:N| theta(1)
  for (const auto& q : qs) {
    if (q < 3) continue;
    points.emplace_back([&, q] {
      auto d = GroupDescriptor::lie(Family::G2, 2, q);
      const BigInt n_order = catalog.order_value(d);
      const BigInt bound = out_bound(d);
      Outcomes out;
      if (q % 6 != 3) {
        const BigInt chi = bound * (pow(q, 3) + 1);
        out.push_back(claim_greater(qparam("(2a) G_2", q), k * R(n_order), R(cube(chi)), !boundary));
      } else {
        const BigInt chi = bound * cyclotomic_value(3, q) * cyclotomic_value(6, q);
        out.push_back(claim_greater(qparam("(2b) G_2", q), k * R(n_order), R(cube(chi)), !boundary));
        if (q == 3) {
          // 2k * 3^5 (3^6 - 1) / (13^3 * 7^3) > 1
          Rational lhs = Rational(2) * k * Rational(BigInt(243 * 728), BigInt(2197 * 343));
          out.push_back(claim_greater("(2b) q=3 value 2k*3^5(3^6-1)/(13^3*7^3)", lhs, 1, !boundary));
        }
      }
      return out;
    });
  }
  // (3) N = 2G_2(Q), Q = 3^(2m+1)
  for (unsigned m = 1; m <= cfg.m_max; ++m) {
    points.emplace_back([&, m] {
      auto d = GroupDescriptor::suzuki_ree(Family::Ree, m);
      const BigInt& Q = d.field();
      const BigInt chi = out_bound(d) * (Q * Q - Q + 1);
      return Outcomes{claim_greater("(3) 2G_2 m=" + std::to_string(m) + " Q=" + to_string(Q),
                                    k * R(catalog.order_value(d)), R(cube(chi)), !boundary)};
    });
  }
  // (4) N = Fi22, |G:N| <= 2, theta(1) = 78
  points.emplace_back([&] {
    auto d = GroupDescriptor::sporadic("Fi22");
    const BigInt chi = out_bound(d) * 78;
    return Outcomes{claim_greater("(4) Fi22 2k|N| vs 156^3", k * R(2 * catalog.order_value(d)), R(cube(chi)), !boundary)};
  });

  aggregate(report, evaluate_points<Outcomes>(points.size(), [&](std::size_t i) { return points[i](); }, exec));
  return report;
}

VerifyReport verify_simple_g_cases(const GridConfig& cfg, const Catalog& catalog, Execution exec) {
  cfg.validate();
  VerifyReport report;
  report.check_name = "simple-g-cases";
  const Rational& k = cfg.k;
  const bool boundary = k == constant_a();
  const auto qs = prime_powers_up_to(cfg.q_max);

  std::vector<std::function<Outcomes()>> points;
  for (const auto& q : qs) {
    if (q < 4) continue;
    points.emplace_back([&, q] {
      auto d = GroupDescriptor::lie(Family::A, 1, q);
      const Rational kg = k * R(catalog.order_value(d));
      const BigInt mid = q * (q * q - 1);
      const BigInt chi = q - 1;
      return Outcomes{
          claim_greater(qparam("A_1 k|G| vs q(q^2-1)", q), kg, R(mid), !boundary),
          claim_greater(qparam("A_1 q(q^2-1) vs (q-1)^3", q), R(mid), R(cube(chi))),
          claim_greater(qparam("A_1 k|G| vs (q-1)^3", q), kg, R(cube(chi)), !boundary),
      };
    });
  }
  for (const auto& q : qs) {
    if (q < 3) continue;
    points.emplace_back([&, q] {
      auto d = GroupDescriptor::lie(Family::G2, 2, q);
      const BigInt order = catalog.order_value(d);
      const BigInt p1 = cyclotomic_value(1, q), p2 = cyclotomic_value(2, q), p3 = cyclotomic_value(3, q),
                   p6 = cyclotomic_value(6, q);
      const BigInt q6m1 = pow(q, 6) - 1, q2m1 = q * q - 1;
      // Displayed chain with the constant 3:
      //   3 q^6 (q^6-1)(q^2-1) / (Phi3 Phi6)^3 > 3 (q^2-1)^4 / (q^6-1) > 1
      const Rational left = Rational(3 * pow(q, 6) * q6m1 * q2m1, cube(p3 * p6));
      const Rational mid = Rational(3 * pow(q2m1, 4), q6m1);
      // Degree present in cd(G) by residue of q mod 6.
      const unsigned long r = BigInt(q % 6).get_ui();
      const BigInt chi = (r == 1 || r == 4) ? BigInt(p2 * p6) : (r == 3 ? BigInt(p3 * p6) : BigInt(p1 * p3));
      return Outcomes{
          claim_greater(qparam("G_2 displayed chain", q), left, mid),
          claim_greater(qparam("G_2 3(q^2-1)^4/(q^6-1) vs 1", q), mid, 1),
          claim_greater(qparam("G_2 Phi3Phi6 vs Phi2Phi6", q), R(p3 * p6), R(p2 * p6)),
          claim_greater(qparam("G_2 Phi2Phi6 vs Phi1Phi3", q), R(p2 * p6), R(p1 * p3)),
          claim_greater(qparam("G_2 k|G| vs (Phi3Phi6)^3", q), k * R(order), R(cube(p3 * p6)), !boundary),
          claim_greater(qparam("G_2 k|G| vs chi(1)^3", q), k * R(order), R(cube(chi)), !boundary),
      };
    });
  }
  for (unsigned m = 1; m <= cfg.m_max; ++m) {
    points.emplace_back([&, m] {
      auto d = GroupDescriptor::suzuki_ree(Family::Ree, m);
      const BigInt& Q = d.field();
      const std::string tag = "2G_2 m=" + std::to_string(m) + " Q=" + to_string(Q);
      return Outcomes{
          claim_greater(tag + " (Q-1)(Q+1)^3 vs Q^3-1", R((Q - 1) * cube(Q + 1)), R(pow(Q, 3) - 1)),
          claim_greater(tag + " k|G| vs (Q^2-Q+1)^3", k * R(catalog.order_value(d)), R(cube(Q * Q - Q + 1)), !boundary),
      };
    });
  }
  points.emplace_back([&] {
    auto d = GroupDescriptor::sporadic("Fi22");
    return Outcomes{claim_greater("Fi22 k|G| vs 78^3", k * R(catalog.order_value(d)), R(cube(BigInt(78))), !boundary)};
  });

  aggregate(report, evaluate_points<Outcomes>(points.size(), [&](std::size_t i) { return points[i](); }, exec));
  return report;
}

}  // namespace codegree
