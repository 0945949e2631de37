#include "adjlab/mld_jets.hpp"

namespace adjlab {

JetEstimateReport mld_jet_estimate(std::size_t arity, const QIdeal& Q,
                                   const Ideal& Z, std::size_t n_max,
                                   const Rational& a_probe,
                                   const GroebnerBudget& budget) {
  if (Q.ring()->arity() != arity)
    throw std::invalid_argument("mld_jet_estimate: arity mismatch");
  check_same_ring(Q.ring(), Z.ring(), "mld_jet_estimate");

  // reduce the Q-ideal to (base)^exponent: factors must share an exponent,
  // so the contact order of the product base scales uniformly
  Rational exponent(0);
  Ideal base = Ideal::unit(Q.ring());
  if (!Q.factors().empty()) {
    exponent = Q.factors().front().exponent;
    bool first = true;
    for (const auto& f : Q.factors()) {
      if (!is_monomial_ideal(f.ideal))
        throw std::invalid_argument("mld_jet_estimate: monomial factors required");
      if (f.exponent != exponent)
        throw std::invalid_argument(
            "mld_jet_estimate: factors must share one exponent");
      base = first ? f.ideal : ideal_product(base, f.ideal);
      first = false;
    }
  }

  JetEstimateReport rep;
  if (Q.factors().empty() || exponent == 0) return rep;  // nothing to witness

  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t p = 1; p <= n; ++p) {
      ContactDimReport cd = contact_locus_dim(base, p, n, Z, budget);
      if (cd.dim_ge_p == kDimEmpty) continue;
      JetWitness w;
      w.level = n;
      w.order = p;
      w.dim = cd.dim_ge_p;
      w.ambiguous = !cd.exact_unambiguous;
      w.quantity = Rational(cd.dim_ge_p) -
                   Rational(static_cast<long>((n + 1) * arity)) +
                   Rational(static_cast<long>(p)) * exponent;
      rep.witnesses.push_back(w);
      if (w.ambiguous) continue;  // soundness: skip undetermined strata
      if (!rep.any_witness || w.quantity > rep.best_quantity) {
        rep.any_witness = true;
        rep.best_quantity = w.quantity;
      }
    }
  }
  if (rep.any_witness) {
    rep.implied_upper_bound = -rep.best_quantity;
    rep.certifies_below_probe = rep.best_quantity > -a_probe;
  }
  return rep;
}

}  // namespace adjlab
