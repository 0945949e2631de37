// Q-ideals: formal finite products of ideals with non-negative rational
// exponents, with representative ideals at a common denominator and
// multiplicities along monomial valuations.
#pragma once

#include <optional>

#include "adjlab/monomial_ideal.hpp"
#include "adjlab/order_value.hpp"

namespace adjlab {

/// A monomial valuation centered at the origin: positive integer weights,
/// one per ring variable.
struct MonomialValuation {
  std::vector<std::int64_t> weights;

  explicit MonomialValuation(std::vector<std::int64_t> w) : weights(std::move(w)) {
    for (auto x : weights)
      if (x < 1)
        throw std::invalid_argument("MonomialValuation: weights must be >= 1");
  }
};

/// min over generators of the min weighted degree of their terms; exact
/// for monomial ideals; nullopt (= infinity) iff I = (0).
std::optional<Rational> monomial_order_of_ideal(const MonomialValuation& w,
                                                const Ideal& I);

class QIdeal {
public:
  struct Factor {
    Ideal ideal;
    Rational exponent;  // >= 0
  };

  QIdeal(RingPtr ring, std::vector<Factor> factors);

  static QIdeal trivial(RingPtr ring) { return QIdeal(std::move(ring), {}); }
  static QIdeal of(const Ideal& I, const Rational& e = Rational(1)) {
    return QIdeal(I.ring(), {Factor{I, e}});
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Factor>& factors() const { return factors_; }
  bool is_trivial() const { return factors_.empty(); }

  QIdeal times(const QIdeal& o) const;
  QIdeal power(const Rational& e) const;

  /// Least positive integer clearing every exponent denominator.
  std::uint32_t common_denominator() const;

  /// The r-th power as a usual ideal; r must clear all denominators.
  Ideal representative(std::uint32_t r) const;

  /// Multiplicity along a monomial valuation: sum of a_i * ord_w(I_i).
  /// nullopt = infinity (some positively-weighted factor is zero).
  std::optional<Rational> order_along(const MonomialValuation& w) const;

  bool all_factors_monomial() const;

private:
  RingPtr ring_;
  std::vector<Factor> factors_;
};

enum class QIdealEquivalence { Equivalent, Distinct, Undetermined };

/// Operational equivalence test per the closure semantics: representatives
/// at a common denominator are compared by monomial integral closure when
/// both are monomial, by mutual containment otherwise; a containment test
/// that proves neither inclusion reports Undetermined.
QIdealEquivalence qideal_equivalent(const QIdeal& a, const QIdeal& b,
                                    const GroebnerBudget& budget = {});

}  // namespace adjlab
