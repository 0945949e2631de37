#include "adjlab/groebner.hpp"

#include <algorithm>
#include <list>
#include <set>

namespace adjlab {

namespace {

struct Pair {
  std::size_t i, j;  // i < j
  ExponentVec lcm;
  std::int64_t sugar;
  std::int64_t lcm_deg;
};

struct Ctx {
  const MonomialOrder* order;
  const CoeffField* field;
};

// selection key: min sugar, then min lcm degree, then lcm ascending in
// the order, then (i, j)
bool pair_before(const Ctx& ctx, const Pair& a, const Pair& b) {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
  int c = ctx.order->compare(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  if (f.is_zero() || basis.empty()) return f;
  const auto& ring = f.ring();
  const auto& F = ring->field();
  Polynomial rem = Polynomial::zero(ring);
  Polynomial work = f;
  while (!work.is_zero()) {
    const Term& lt = work.leading_term();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (divides(g.leading_monomial(), lt.mono)) {
        Coeff c = F.div(lt.coeff, g.leading_coeff());
        work = work - g.mono_multiplied(mono_div(lt.mono, g.leading_monomial()), c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      // move the leading term to the remainder
      rem = rem + Polynomial::monomial(ring, lt.mono, lt.coeff);
      work = work - Polynomial::monomial(ring, lt.mono, lt.coeff);
    }
  }
  return rem;
}

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens,
                                       const GroebnerBudget& budget) {
  std::vector<Polynomial> G;
  RingPtr ring;
  for (const auto& g : gens) {
    if (!ring) ring = g.ring();
    check_same_ring(ring, g.ring(), "groebner_basis");
    if (!g.is_zero()) G.push_back(g.normalized());
  }
  if (G.empty()) return {};
  const auto& order = ring->order();
  const auto& F = ring->field();
  Ctx ctx{&order, &F};

  std::vector<std::int64_t> sugar;
  sugar.reserve(G.size());
  for (const auto& g : G) sugar.push_back(g.degree());

  std::list<Pair> pairs;

  auto make_pair = [&](std::size_t i, std::size_t j) {
    ExponentVec l = mono_lcm(G[i].leading_monomial(), G[j].leading_monomial());
    std::int64_t ld = total_degree(l);
    std::int64_t si = sugar[i] + ld - total_degree(G[i].leading_monomial());
    std::int64_t sj = sugar[j] + ld - total_degree(G[j].leading_monomial());
    return Pair{i, j, std::move(l), std::max(si, sj), ld};
  };

  // Gebauer-Moeller update: add element index k, refresh the pair set.
  auto update_pairs = [&](std::size_t k) {
    const ExponentVec& ltk = G[k].leading_monomial();
    std::vector<Pair> fresh;
    fresh.reserve(k);
    for (std::size_t i = 0; i < k; ++i) fresh.push_back(make_pair(i, k));

    // criterion M: drop (i,k) when another new pair's lcm strictly divides
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || !keep[a]) continue;
        if (!keep[b]) continue;
        if (fresh[b].lcm != fresh[a].lcm && divides(fresh[b].lcm, fresh[a].lcm))
          keep[a] = false;
      }
    }
    // criterion F: among equal lcms keep the first
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      for (std::size_t b = a + 1; b < fresh.size(); ++b) {
        if (keep[b] && fresh[b].lcm == fresh[a].lcm) keep[b] = false;
      }
    }
    // product criterion
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      if (coprime(G[fresh[a].i].leading_monomial(), ltk)) keep[a] = false;
    }
    // criterion B on old pairs
    for (auto it = pairs.begin(); it != pairs.end();) {
      const Pair& p = *it;
      if (divides(ltk, p.lcm) &&
          mono_lcm(G[p.i].leading_monomial(), ltk) != p.lcm &&
          mono_lcm(G[p.j].leading_monomial(), ltk) != p.lcm) {
        it = pairs.erase(it);
      } else {
        ++it;
      }
    }
    for (std::size_t a = 0; a < fresh.size(); ++a)
      if (keep[a]) pairs.push_back(std::move(fresh[a]));
  };

  for (std::size_t k = 1; k < G.size(); ++k) update_pairs(k);

  std::int64_t processed = 0;
  while (!pairs.empty()) {
    auto best = pairs.begin();
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it)
      if (pair_before(ctx, *it, *best)) best = it;
    Pair p = *best;
    pairs.erase(best);

    if (p.lcm_deg > budget.max_degree)
      throw BudgetExceededError(
          "groebner_basis: S-pair degree " + std::to_string(p.lcm_deg) +
          " exceeds cap " + std::to_string(budget.max_degree));
    if (++processed > budget.max_pairs)
      throw BudgetExceededError("groebner_basis: pair budget exceeded (" +
                                std::to_string(budget.max_pairs) + ")");

    const Polynomial& fi = G[p.i];
    const Polynomial& fj = G[p.j];
    Coeff ci = F.inv(fi.leading_coeff());
    Coeff cj = F.inv(fj.leading_coeff());
    Polynomial s =
        fi.mono_multiplied(mono_div(p.lcm, fi.leading_monomial()), ci) -
        fj.mono_multiplied(mono_div(p.lcm, fj.leading_monomial()), cj);
    Polynomial r = normal_form(s, G);
    if (r.is_zero()) continue;
    r = r.normalized();
    G.push_back(r);
    sugar.push_back(std::max(p.sugar, r.degree()));
    if (static_cast<std::int64_t>(G.size()) > budget.max_basis)
      throw BudgetExceededError("groebner_basis: basis size budget exceeded");
    update_pairs(G.size() - 1);
  }

  // minimalize: drop g whose leading monomial is divisible by another's
  std::vector<bool> keep(G.size(), true);
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (!keep[i]) continue;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j || !keep[i]) continue;
      if (!keep[j]) continue;
      const auto& li = G[i].leading_monomial();
      const auto& lj = G[j].leading_monomial();
      if (divides(lj, li) && (li != lj || j < i)) keep[i] = false;
    }
  }
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < G.size(); ++i)
    if (keep[i]) minimal.push_back(G[i]);

  // inter-reduce to the unique reduced basis
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = normal_form(minimal[i], others);
    if (!r.is_zero()) reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return order.compare(a.leading_monomial(), b.leading_monomial()) > 0;
            });
  return reduced;
}

}  // namespace adjlab
