#include "adjlab/monomial_ideal.hpp"

#include <algorithm>
#include <functional>

#include "adjlab/lp.hpp"

namespace adjlab {

bool is_monomial_ideal(const Ideal& I) {
  for (const auto& g : I.gens())
    if (!g.is_monomial()) return false;
  return true;
}

std::vector<ExponentVec> monomial_exponents(const Ideal& I) {
  std::vector<ExponentVec> es;
  es.reserve(I.gens().size());
  for (const auto& g : I.gens()) {
    if (!g.is_monomial())
      throw std::invalid_argument("monomial_exponents: non-monomial generator");
    es.push_back(g.leading_monomial());
  }
  return es;
}

std::vector<ExponentVec> minimalize_monomials(std::vector<ExponentVec> es) {
  std::sort(es.begin(), es.end(), [](const ExponentVec& a, const ExponentVec& b) {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  });
  es.erase(std::unique(es.begin(), es.end()), es.end());
  std::vector<ExponentVec> out;
  for (auto& e : es) {
    bool dominated = false;
    for (const auto& kept : out)
      if (divides(kept, e)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(std::move(e));
  }
  return out;
}

Ideal make_monomial_ideal(const RingPtr& ring, std::vector<ExponentVec> es) {
  es = minimalize_monomials(std::move(es));
  std::vector<Polynomial> gens;
  gens.reserve(es.size());
  for (auto& e : es)
    gens.push_back(Polynomial::monomial(ring, std::move(e), ring->field().one()));
  return Ideal(ring, std::move(gens));
}

Ideal monomial_intersection(const Ideal& I, const Ideal& J) {
  check_same_ring(I.ring(), J.ring(), "monomial_intersection");
  auto a = monomial_exponents(I);
  auto b = monomial_exponents(J);
  std::vector<ExponentVec> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(mono_lcm(x, y));
  return make_monomial_ideal(I.ring(), std::move(out));
}

Ideal monomial_quotient_by_monomial(const Ideal& I, const ExponentVec& u) {
  auto es = monomial_exponents(I);
  std::vector<ExponentVec> out;
  out.reserve(es.size());
  for (const auto& e : es) {
    ExponentVec q(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) q[i] = std::max(0, e[i] - u[i]);
    out.push_back(std::move(q));
  }
  return make_monomial_ideal(I.ring(), std::move(out));
}

bool newton_polyhedron_contains(const std::vector<ExponentVec>& gens,
                                const ExponentVec& u) {
  if (gens.empty()) return false;
  std::size_t k = gens.size();
  std::size_t n = u.size();
  // lambda >= 0, sum lambda = 1, sum lambda_e * e <= u componentwise
  std::vector<LinConstraint> cons;
  {
    LinConstraint c;
    c.a.assign(k, Rational(1));
    c.rel = Rel::Eq;
    c.rhs = 1;
    cons.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < n; ++i) {
    LinConstraint c;
    c.a.resize(k);
    for (std::size_t j = 0; j < k; ++j) c.a[j] = gens[j][i];
    c.rel = Rel::Le;
    c.rhs = u[i];
    cons.push_back(std::move(c));
  }
  return lp_feasible(cons, std::vector<Rational>(k, Rational(0)));
}

Ideal monomial_integral_closure(const Ideal& I) {
  if (!is_monomial_ideal(I))
    throw std::invalid_argument("monomial_integral_closure: non-monomial input");
  if (I.is_zero_ideal()) return I;
  auto gens = minimalize_monomials(monomial_exponents(I));
  std::size_t n = I.ring()->arity();

  // Minimal generators of the closure lie in the componentwise-max box:
  // a point with slack in coordinate i stays in the polyhedron after
  // decreasing that coordinate.
  ExponentVec box(n, 0);
  for (const auto& e : gens)
    for (std::size_t i = 0; i < n; ++i) box[i] = std::max(box[i], e[i]);

  std::uint64_t cells = 1;
  for (std::size_t i = 0; i < n; ++i) {
    cells *= static_cast<std::uint64_t>(box[i]) + 1;
    if (cells > 2000000)
      throw BudgetExceededError("monomial_integral_closure: candidate box too large");
  }

  // enumerate candidates by increasing total degree so divisors are seen
  // before their multiples
  std::vector<ExponentVec> candidates;
  ExponentVec cur(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      candidates.push_back(cur);
      return;
    }
    for (std::int32_t v = 0; v <= box[i]; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
    cur[i] = 0;
  };
  rec(0);
  std::sort(candidates.begin(), candidates.end(),
            [](const ExponentVec& a, const ExponentVec& b) {
              auto da = total_degree(a), db = total_degree(b);
              if (da != db) return da < db;
              return a < b;
            });

  std::vector<ExponentVec> closure_gens;
  for (const auto& u : candidates) {
    bool dominated = false;
    for (const auto& kept : closure_gens)
      if (divides(kept, u)) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    if (newton_polyhedron_contains(gens, u)) closure_gens.push_back(u);
  }
  return make_monomial_ideal(I.ring(), std::move(closure_gens));
}

SandwichCertificate sandwich_certificate(const Ideal& I, const Ideal& lower,
                                         const Ideal& upper,
                                         const GroebnerBudget& budget) {
  check_same_ring(I.ring(), lower.ring(), "sandwich_certificate");
  check_same_ring(I.ring(), upper.ring(), "sandwich_certificate");
  SandwichCertificate cert;

  cert.lower_contained = true;
  for (const auto& g : lower.gens()) {
    if (!I.contains(g, budget)) {
      cert.lower_contained = false;
      cert.failure_witness = "lower generator not in I: " + g.to_string();
      break;
    }
  }
  cert.upper_contains = true;
  for (const auto& g : I.gens()) {
    if (!upper.contains(g, budget)) {
      cert.upper_contains = false;
      cert.failure_witness = "I generator not in upper: " + g.to_string();
      break;
    }
  }
  if (is_monomial_ideal(lower) && is_monomial_ideal(upper)) {
    cert.closure_checked = true;
    Ideal cl = monomial_integral_closure(lower);
    Ideal cu = monomial_integral_closure(upper);
    cert.closures_equal = cl.equals(cu, budget);
    if (!cert.closures_equal && cert.failure_witness.empty())
      cert.failure_witness = "integral closures of lower and upper differ";
  }
  return cert;
}

}  // namespace adjlab
