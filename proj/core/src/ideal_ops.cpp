#include "adjlab/ideal_ops.hpp"

#include <algorithm>
#include <unordered_map>

#include "adjlab/monomial_ideal.hpp"

namespace adjlab {

namespace {

std::string fresh_var_name(const PolyRing& ring, const std::string& stem) {
  std::string name = stem;
  int k = 0;
  while (ring.var_index(name)) name = stem + std::to_string(k++);
  return name;
}

Polynomial lift_prepend(const RingPtr& ext, const Polynomial& f) {
  std::vector<Term> ts;
  ts.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    ExponentVec e(t.mono.size() + 1, 0);
    for (std::size_t i = 0; i < t.mono.size(); ++i) e[i + 1] = t.mono[i];
    ts.push_back(Term{std::move(e), t.coeff});
  }
  return Polynomial::from_terms(ext, std::move(ts));
}

Polynomial drop_first_var(const RingPtr& orig, const Polynomial& f) {
  std::vector<Term> ts;
  ts.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    ExponentVec e(t.mono.begin() + 1, t.mono.end());
    ts.push_back(Term{std::move(e), t.coeff});
  }
  return Polynomial::from_terms(orig, std::move(ts));
}

bool free_of_first_var(const Polynomial& f) {
  for (const auto& t : f.terms())
    if (t.mono[0] != 0) return false;
  return true;
}

std::vector<Polynomial> dedupe_normalized(const RingPtr& ring,
                                          std::vector<Polynomial> gens) {
  std::vector<Polynomial> out;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial n = g.normalized();
    bool dup = false;
    for (const auto& h : out)
      if (h == n) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(n));
  }
  (void)ring;
  return out;
}

}  // namespace

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  check_same_ring(I.ring(), J.ring(), "ideal_sum");
  std::vector<Polynomial> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  if (is_monomial_ideal(I) && is_monomial_ideal(J))
    return make_monomial_ideal(I.ring(), monomial_exponents(Ideal(I.ring(), gens)));
  return Ideal(I.ring(), dedupe_normalized(I.ring(), std::move(gens)));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  check_same_ring(I.ring(), J.ring(), "ideal_product");
  if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal::zero(I.ring());
  std::vector<Polynomial> gens;
  gens.reserve(I.gens().size() * J.gens().size());
  for (const auto& f : I.gens())
    for (const auto& g : J.gens()) gens.push_back(f * g);
  if (is_monomial_ideal(I) && is_monomial_ideal(J))
    return make_monomial_ideal(I.ring(), monomial_exponents(Ideal(I.ring(), gens)));
  return Ideal(I.ring(), dedupe_normalized(I.ring(), std::move(gens)));
}

Ideal ideal_power(const Ideal& I, std::uint32_t k) {
  if (k == 0) return Ideal::unit(I.ring());
  Ideal acc = I;
  for (std::uint32_t i = 1; i < k; ++i) acc = ideal_product(acc, I);
  return acc;
}

namespace {

// replace a large generating set by its reduced basis; the extended-ring
// computations downstream profit from fewer, inter-reduced generators
std::vector<Polynomial> working_gens(const Ideal& I, const GroebnerBudget& budget) {
  if (I.gens().size() <= 8) return I.gens();
  return I.groebner(budget);
}

}  // namespace

Ideal ideal_intersection(const Ideal& I, const Ideal& J,
                         const GroebnerBudget& budget) {
  check_same_ring(I.ring(), J.ring(), "ideal_intersection");
  if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal::zero(I.ring());
  if (is_monomial_ideal(I) && is_monomial_ideal(J))
    return monomial_intersection(I, J);

  const RingPtr& ring = I.ring();
  std::vector<std::string> vars;
  vars.push_back(fresh_var_name(*ring, "_t"));
  for (const auto& v : ring->var_names()) vars.push_back(v);
  RingPtr ext = PolyRing::make(
      vars, ring->field(),
      MonomialOrder::block(MonomialOrder::Kind::GrevLex, 1));

  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one = Polynomial::from_int(ext, 1);
  std::vector<Polynomial> gens;
  for (const auto& f : working_gens(I, budget))
    gens.push_back(t * lift_prepend(ext, f));
  for (const auto& g : working_gens(J, budget))
    gens.push_back((one - t) * lift_prepend(ext, g));

  auto gb = groebner_basis(gens, budget);
  std::vector<Polynomial> out;
  for (const auto& h : gb)
    if (free_of_first_var(h)) out.push_back(drop_first_var(ring, h));
  return Ideal(ring, std::move(out));
}

namespace {

Ideal quotient_single(const Ideal& I, const Polynomial& g,
                      const GroebnerBudget& budget) {
  const RingPtr& ring = I.ring();
  if (g.is_zero()) return Ideal::unit(ring);
  if (I.is_zero_ideal()) return Ideal::zero(ring);  // ambient ring is a domain
  if (is_monomial_ideal(I) && g.is_monomial())
    return monomial_quotient_by_monomial(I, g.leading_monomial());
  Ideal K = ideal_intersection(I, Ideal(ring, {g}), budget);
  std::vector<Polynomial> out;
  out.reserve(K.gens().size());
  for (const auto& h : K.gens()) out.push_back(exact_divide(h, g));
  return Ideal(ring, dedupe_normalized(ring, std::move(out)));
}

}  // namespace

Ideal ideal_quotient(const Ideal& I, const Ideal& J, const GroebnerBudget& budget) {
  check_same_ring(I.ring(), J.ring(), "ideal_quotient");
  if (J.is_zero_ideal()) return Ideal::unit(I.ring());
  bool first = true;
  Ideal acc = Ideal::zero(I.ring());
  for (const auto& g : J.gens()) {
    Ideal q = quotient_single(I, g, budget);
    acc = first ? q : ideal_intersection(acc, q, budget);
    first = false;
  }
  return acc;
}

SaturationResult saturation(const Ideal& I, const Ideal& J,
                            const GroebnerBudget& budget, int max_iter) {
  check_same_ring(I.ring(), J.ring(), "saturation");
  Ideal cur = I;
  for (int k = 0; k < max_iter; ++k) {
    Ideal next = ideal_quotient(cur, J, budget);
    if (next.equals(cur, budget)) return SaturationResult{cur, k};
    cur = next;
  }
  throw BudgetExceededError("saturation: no stabilization within " +
                            std::to_string(max_iter) + " colon iterations");
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& vars,
                const GroebnerBudget& budget) {
  const RingPtr& ring = I.ring();
  std::vector<bool> kill(ring->arity(), false);
  for (auto v : vars) {
    if (v >= ring->arity()) throw std::out_of_range("eliminate: bad variable index");
    kill[v] = true;
  }
  std::size_t ne = 0;
  for (bool k : kill)
    if (k) ++ne;
  if (ne == 0) return I;

  // permuted ring: eliminated variables first, block order splits them off
  std::vector<std::size_t> perm;  // perm[new] = old
  for (std::size_t i = 0; i < ring->arity(); ++i)
    if (kill[i]) perm.push_back(i);
  for (std::size_t i = 0; i < ring->arity(); ++i)
    if (!kill[i]) perm.push_back(i);

  std::vector<std::string> names;
  names.reserve(ring->arity());
  for (auto old : perm) names.push_back(ring->var_name(old));
  RingPtr ext = PolyRing::make(
      names, ring->field(),
      MonomialOrder::block(MonomialOrder::Kind::GrevLex, ne));

  auto map_to = [&](const Polynomial& f) {
    std::vector<Term> ts;
    ts.reserve(f.term_count());
    for (const auto& t : f.terms()) {
      ExponentVec e(t.mono.size());
      for (std::size_t n = 0; n < perm.size(); ++n) e[n] = t.mono[perm[n]];
      ts.push_back(Term{std::move(e), t.coeff});
    }
    return Polynomial::from_terms(ext, std::move(ts));
  };
  auto map_back = [&](const Polynomial& f) {
    std::vector<Term> ts;
    ts.reserve(f.term_count());
    for (const auto& t : f.terms()) {
      ExponentVec e(t.mono.size());
      for (std::size_t n = 0; n < perm.size(); ++n) e[perm[n]] = t.mono[n];
      ts.push_back(Term{std::move(e), t.coeff});
    }
    return Polynomial::from_terms(ring, std::move(ts));
  };

  std::vector<Polynomial> gens;
  gens.reserve(I.gens().size());
  for (const auto& f : I.gens()) gens.push_back(map_to(f));
  auto gb = groebner_basis(gens, budget);

  std::vector<Polynomial> out;
  for (const auto& h : gb) {
    bool free = true;
    for (const auto& t : h.terms()) {
      for (std::size_t i = 0; i < ne && free; ++i)
        if (t.mono[i] != 0) free = false;
      if (!free) break;
    }
    if (free) out.push_back(map_back(h));
  }
  return Ideal(ring, std::move(out));
}

namespace {

std::uint64_t support_mask(const ExponentVec& e) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0) m |= (std::uint64_t{1} << i);
  return m;
}

int max_independent(const std::vector<std::uint64_t>& supports,
                    std::uint64_t allowed,
                    std::unordered_map<std::uint64_t, int>& memo) {
  auto it = memo.find(allowed);
  if (it != memo.end()) return it->second;
  const std::uint64_t* blocker = nullptr;
  for (const auto& s : supports) {
    if ((s & ~allowed) == 0) {
      blocker = &s;
      break;
    }
  }
  int best;
  if (!blocker) {
    best = static_cast<int>(__builtin_popcountll(allowed));
  } else {
    best = 0;
    std::uint64_t s = *blocker;
    while (s) {
      std::uint64_t bit = s & (~s + 1);
      s ^= bit;
      best = std::max(best, max_independent(supports, allowed & ~bit, memo));
    }
  }
  memo.emplace(allowed, best);
  return best;
}

}  // namespace

int krull_dimension(const Ideal& I, const GroebnerBudget& budget) {
  const RingPtr& ring = I.ring();
  if (ring->arity() > 63)
    throw std::invalid_argument("krull_dimension: more than 63 variables");
  if (I.is_zero_ideal()) return static_cast<int>(ring->arity());
  const auto& gb = I.groebner(budget);
  if (gb.size() == 1 && gb[0].is_one()) return kDimEmpty;

  std::vector<std::uint64_t> supports;
  for (const auto& g : gb) supports.push_back(support_mask(g.leading_monomial()));
  std::sort(supports.begin(), supports.end(), [](std::uint64_t a, std::uint64_t b) {
    return __builtin_popcountll(a) < __builtin_popcountll(b);
  });
  // keep minimal supports only: (not T subset of S) for minimal T implies
  // the same for any superset
  std::vector<std::uint64_t> minimal;
  for (auto s : supports) {
    bool dominated = false;
    for (auto m : minimal)
      if ((m & ~s) == 0) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(s);
  }
  std::uint64_t all =
      ring->arity() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << ring->arity()) - 1);
  std::unordered_map<std::uint64_t, int> memo;
  return max_independent(minimal, all, memo);
}

bool equal_mod_saturation(const Ideal& I, const Ideal& J, const Ideal& S,
                          const GroebnerBudget& budget) {
  Ideal a = saturation(I, S, budget).ideal;
  Ideal b = saturation(J, S, budget).ideal;
  return a.equals(b, budget);
}

Ideal compressed(const Ideal& I, const GroebnerBudget& budget) {
  if (I.is_zero_ideal()) return I;
  return Ideal(I.ring(), I.groebner(budget));
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f.ring(), g.ring(), "exact_divide");
  if (g.is_zero()) throw std::domain_error("exact_divide: division by zero");
  const auto& ring = f.ring();
  const auto& F = ring->field();
  Polynomial rem = f;
  Polynomial quot = Polynomial::zero(ring);
  while (!rem.is_zero()) {
    const Term& lt = rem.leading_term();
    if (!divides(g.leading_monomial(), lt.mono))
      throw std::logic_error("exact_divide: not exactly divisible");
    ExponentVec m = mono_div(lt.mono, g.leading_monomial());
    Coeff c = F.div(lt.coeff, g.leading_coeff());
    quot = quot + Polynomial::monomial(ring, m, c);
    rem = rem - g.mono_multiplied(m, c);
  }
  return quot;
}

}  // namespace adjlab
