#include "adjlab/qideal.hpp"

namespace adjlab {

std::optional<Rational> monomial_order_of_ideal(const MonomialValuation& w,
                                                const Ideal& I) {
  if (w.weights.size() != I.ring()->arity())
    throw std::invalid_argument("monomial_order_of_ideal: weight arity mismatch");
  if (I.is_zero_ideal()) return std::nullopt;
  std::optional<Rational> best;
  for (const auto& g : I.gens()) {
    for (const auto& t : g.terms()) {
      Rational v(0);
      for (std::size_t i = 0; i < w.weights.size(); ++i)
        v += Rational(static_cast<long>(w.weights[i])) * t.mono[i];
      if (!best || v < *best) best = v;
    }
  }
  return best;
}

QIdeal::QIdeal(RingPtr ring, std::vector<Factor> factors)
    : ring_(std::move(ring)), factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    check_same_ring(ring_, f.ideal.ring(), "QIdeal");
    if (f.exponent < 0)
      throw std::invalid_argument("QIdeal: exponents must be non-negative");
  }
  // drop exponent-zero factors
  std::vector<Factor> kept;
  for (auto& f : factors_)
    if (f.exponent != 0) kept.push_back(std::move(f));
  factors_ = std::move(kept);
}

QIdeal QIdeal::times(const QIdeal& o) const {
  check_same_ring(ring_, o.ring_, "QIdeal::times");
  std::vector<Factor> fs = factors_;
  fs.insert(fs.end(), o.factors_.begin(), o.factors_.end());
  return QIdeal(ring_, std::move(fs));
}

QIdeal QIdeal::power(const Rational& e) const {
  if (e < 0) throw std::invalid_argument("QIdeal::power: negative exponent");
  std::vector<Factor> fs;
  fs.reserve(factors_.size());
  for (const auto& f : factors_) fs.push_back(Factor{f.ideal, f.exponent * e});
  return QIdeal(ring_, std::move(fs));
}

std::uint32_t QIdeal::common_denominator() const {
  Integer den = 1;
  for (const auto& f : factors_) den = lcm(den, Integer(f.exponent.get_den()));
  if (!den.fits_uint_p())
    throw std::overflow_error("QIdeal: common denominator too large");
  return static_cast<std::uint32_t>(den.get_ui());
}

Ideal QIdeal::representative(std::uint32_t r) const {
  if (r == 0) throw std::invalid_argument("QIdeal::representative: r must be >= 1");
  Ideal acc = Ideal::unit(ring_);
  for (const auto& f : factors_) {
    Rational e = f.exponent * static_cast<long>(r);
    if (e.get_den() != 1)
      throw std::invalid_argument(
          "QIdeal::representative: r does not clear exponent denominator " +
          f.exponent.get_str());
    Integer z = e.get_num();
    if (!z.fits_uint_p())
      throw std::overflow_error("QIdeal::representative: power too large");
    acc = ideal_product(acc, ideal_power(f.ideal, static_cast<std::uint32_t>(z.get_ui())));
  }
  return acc;
}

std::optional<Rational> QIdeal::order_along(const MonomialValuation& w) const {
  Rational total(0);
  for (const auto& f : factors_) {
    auto v = monomial_order_of_ideal(w, f.ideal);
    if (!v) return std::nullopt;  // zero ideal with positive exponent
    total += f.exponent * (*v);
  }
  return total;
}

bool QIdeal::all_factors_monomial() const {
  for (const auto& f : factors_)
    if (!is_monomial_ideal(f.ideal)) return false;
  return true;
}

QIdealEquivalence qideal_equivalent(const QIdeal& a, const QIdeal& b,
                                    const GroebnerBudget& budget) {
  check_same_ring(a.ring(), b.ring(), "qideal_equivalent");
  std::uint32_t r = 1;
  {
    Integer den = lcm(Integer(a.common_denominator()), Integer(b.common_denominator()));
    r = static_cast<std::uint32_t>(den.get_ui());
  }
  Ideal ra = a.representative(r);
  Ideal rb = b.representative(r);
  if (is_monomial_ideal(ra) && is_monomial_ideal(rb)) {
    Ideal ca = monomial_integral_closure(ra);
    Ideal cb = monomial_integral_closure(rb);
    return ca.equals(cb, budget) ? QIdealEquivalence::Equivalent
                                 : QIdealEquivalence::Distinct;
  }
  bool ab = ra.contains(rb, budget);
  bool ba = rb.contains(ra, budget);
  if (ab && ba) return QIdealEquivalence::Equivalent;
  return QIdealEquivalence::Undetermined;
}

}  // namespace adjlab
