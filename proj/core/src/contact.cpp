#include "adjlab/contact.hpp"

#include <functional>

namespace adjlab {

namespace {

// Exact dimension for monomial data by order-pattern stratification: a
// level-n jet has coordinate orders o_i in {0..n+1} ("n+1" = identically
// zero), the locus is the union of the linear strata picked out by the
// constraints, and each stratum {ord >= o} has dimension sum(n+1-o_i).
int contact_dim_monomial(const std::vector<ExponentVec>& gens,
                         const std::vector<ExponentVec>& zgens, std::size_t p,
                         std::size_t n, std::size_t N) {
  std::int64_t cap = static_cast<std::int64_t>(n) + 1;
  std::vector<std::int64_t> o(N, 0);
  std::int64_t best = -1;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == N) {
      for (const auto& e : gens) {
        std::int64_t tot = 0;
        for (std::size_t v = 0; v < N; ++v) tot += e[v] * o[v];
        if (tot < static_cast<std::int64_t>(p)) return;
      }
      for (const auto& u : zgens) {
        bool hit = false;
        for (std::size_t v = 0; v < N && !hit; ++v)
          if (u[v] > 0 && o[v] >= 1) hit = true;
        if (!hit) return;
      }
      std::int64_t dim = 0;
      for (std::size_t v = 0; v < N; ++v) dim += cap - o[v];
      best = std::max(best, dim);
      return;
    }
    for (std::int64_t val = 0; val <= cap; ++val) {
      o[i] = val;
      rec(i + 1);
    }
    o[i] = 0;
  };
  rec(0);
  return best < 0 ? kDimEmpty : static_cast<int>(best);
}

int contact_dim_groebner(const Ideal& I, std::size_t p, std::size_t n,
                         const Ideal& Z, const GroebnerBudget& budget) {
  const RingPtr& base = I.ring();
  JetRing jr = make_jet_ring(base, n);

  std::vector<PolySeries> images;
  for (std::size_t i = 0; i < base->arity(); ++i) {
    PolySeries s(jr.ring, n + 1);
    for (std::size_t j = 0; j <= n; ++j)
      s.set_coeff(j, Polynomial::variable(jr.ring, jr.var(i, j)));
    images.push_back(std::move(s));
  }

  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) {
    PolySeries e = evaluate_on_series(g, images, n + 1);
    for (std::size_t j = 0; j < p; ++j)
      if (!e.coeff(j).is_zero()) gens.push_back(e.coeff(j));
  }
  // base point in V(Z): substitute the level-0 coefficients
  std::vector<Polynomial> base_images;
  for (std::size_t i = 0; i < base->arity(); ++i)
    base_images.push_back(Polynomial::variable(jr.ring, jr.var(i, 0)));
  for (const auto& z : Z.gens()) {
    Polynomial zz = z.substitute(jr.ring, base_images);
    if (!zz.is_zero()) gens.push_back(std::move(zz));
  }
  Ideal locus(jr.ring, std::move(gens));
  return krull_dimension(locus, budget);
}

}  // namespace

ContactDimReport contact_locus_dim(const Ideal& I, std::size_t p, std::size_t n,
                                   const Ideal& Z, const GroebnerBudget& budget,
                                   bool allow_fast_path) {
  if (p > n + 1)
    throw std::invalid_argument("contact_locus_dim: requires p <= n+1");
  check_same_ring(I.ring(), Z.ring(), "contact_locus_dim");
  std::size_t N = I.ring()->arity();

  ContactDimReport rep;
  if (I.is_unit(budget)) {
    if (p >= 1) return rep;  // empty locus sentinel
  }

  bool monomial = allow_fast_path && is_monomial_ideal(I) && is_monomial_ideal(Z);
  double cells = 1;
  for (std::size_t i = 0; i < N; ++i) cells *= static_cast<double>(n + 2);
  monomial = monomial && cells <= 2e6;

  auto dim_at = [&](std::size_t pp) {
    if (monomial)
      return contact_dim_monomial(monomial_exponents(I), monomial_exponents(Z),
                                  pp, n, N);
    return contact_dim_groebner(I, pp, n, Z, budget);
  };

  rep.dim_ge_p = dim_at(p);
  if (p + 1 <= n + 1) {
    rep.next_known = true;
    rep.dim_ge_p1 = dim_at(p + 1);
    rep.exact_unambiguous = rep.dim_ge_p > rep.dim_ge_p1;
  }
  return rep;
}

Ideal truncation_image(const AffineSubscheme& Y, std::size_t n, std::size_t m,
                       const GroebnerBudget& budget) {
  if (m < n) throw std::invalid_argument("truncation_image: need m >= n");
  JetIdeal jm = jet_ideal(Y, m, budget);
  // eliminate all coefficient variables of level > n
  std::vector<std::size_t> kill;
  for (std::size_t i = 0; i < Y.ambient()->arity(); ++i)
    for (std::size_t j = n + 1; j <= m; ++j) kill.push_back(jm.jring.var(i, j));
  Ideal elim = eliminate(jm.ideal, kill, budget);

  // rewrite in the level-n jet ring
  JetRing low = make_jet_ring(Y.ambient(), n);
  std::vector<Polynomial> out;
  for (const auto& g : elim.gens()) {
    std::vector<Term> ts;
    for (const auto& t : g.terms()) {
      ExponentVec e(low.ring->arity(), 0);
      for (std::size_t v = 0; v < t.mono.size(); ++v) {
        if (t.mono[v] == 0) continue;
        auto idx = low.ring->var_index(jm.jring.ring->var_name(v));
        if (!idx) throw std::logic_error("truncation_image: variable escape");
        e[*idx] = t.mono[v];
      }
      ts.push_back(Term{std::move(e), t.coeff});
    }
    out.push_back(Polynomial::from_terms(low.ring, std::move(ts)));
  }
  return Ideal(low.ring, std::move(out));
}

StabilizationReport image_stabilization_probe(const AffineSubscheme& Y,
                                              std::size_t n, std::size_t m_hi,
                                              const GroebnerBudget& budget) {
  StabilizationReport rep;
  std::optional<Ideal> prev;
  for (std::size_t m = n; m <= m_hi; ++m) {
    Ideal img = truncation_image(Y, n, m, budget);
    if (prev && prev->equals(img, budget)) {
      rep.observed = true;
      rep.stable_at = m - 1;
      rep.image_strings = img.canonical_strings(budget);
      return rep;
    }
    prev = std::move(img);
  }
  return rep;
}

AdditivityReport order_additivity_check(const AffineSubscheme& X,
                                        const LciSlice& Y, std::uint32_t r,
                                        const TruncatedArc& arc,
                                        const SliceOptions& opts) {
  const GroebnerBudget& budget = opts.budget;
  AffineSubscheme Ysub(Y.slice_ideal, budget);
  JacobianOptions jopts;
  jopts.budget = budget;
  Ideal jy_on_x = X.on_x(jacobian_ideal(Ysub, jopts).ideal);

  JrxResult jrx = jrx_from_slice(X, Y, r, {}, opts);
  Ideal o_rd = divisorial_power(conductor_on_x(X, Y), r, X, budget);

  Rational rinv(1, static_cast<unsigned long>(r));
  OrderValue lhs = arc_order(jy_on_x, arc);
  OrderValue rhs =
      arc_order(jrx.ideal, arc).scaled(rinv) + arc_order(o_rd, arc).scaled(rinv);

  AdditivityReport rep{lhs, rhs, CheckStatus::Inconclusive};
  if (lhs.is_exact() && rhs.is_exact())
    rep.status = (lhs.value() == rhs.value()) ? CheckStatus::Pass : CheckStatus::Fail;
  return rep;
}

}  // namespace adjlab
