// Finite-level jet schemes: the jet ring in coefficient variables
// x_0..x_n per base variable, the level-n jet ideal by coefficient-wise
// Taylor expansion, truncated arcs, and order functions along arcs.
#pragma once

#include "adjlab/qideal.hpp"
#include "adjlab/series.hpp"
#include "adjlab/subscheme.hpp"

namespace adjlab {

struct JetRing {
  RingPtr ring;  // coefficient variable (i, j) sits at index i*(level+1)+j
  RingPtr base;
  std::size_t level;

  std::size_t var(std::size_t i, std::size_t j) const {
    return i * (level + 1) + j;
  }
};

JetRing make_jet_ring(const RingPtr& base, std::size_t level);

struct JetIdeal {
  JetRing jring;
  std::size_t level;
  Ideal ideal;  // generators ordered level-major: all t^0 coefficients of
                // every base generator, then all t^1 coefficients, ...
};

/// Level-n jet ideal of X: for each generator h of I_X, the coefficients
/// of t^0..t^n in h(sum_j x_{i,j} t^j).
JetIdeal jet_ideal(const AffineSubscheme& X, std::size_t n,
                   const GroebnerBudget& budget = {});

/// Generators of the level-n jet ideal mapped by variable name into the
/// level-m jet ring (m >= n); the prefix property of jet ideals.
std::vector<Polynomial> embed_jet_generators(const JetIdeal& low,
                                             const JetRing& high);

struct TruncatedArc {
  std::vector<TruncatedSeries> coords;  // one per base variable, equal precision

  std::size_t precision() const { return coords.empty() ? 0 : coords[0].precision(); }
  std::vector<Coeff> base_point() const;
};

TruncatedArc make_arc(const RingPtr& base, std::vector<TruncatedSeries> coords);

/// All generators of I vanish along the arc to its precision.
bool arc_on(const Ideal& I, const TruncatedArc& arc);

/// Coordinate truncation to precision n+1 (jets of level n).
TruncatedArc truncate_arc(const TruncatedArc& arc, std::size_t level);

/// t-adic order of an ideal along an arc: min over generators.
OrderValue arc_order(const Ideal& I, const TruncatedArc& arc);

/// Q-ideal order: sum of exponent-weighted factor orders; "at least"
/// markers propagate, they are never converted into exact values.
OrderValue arc_order(const QIdeal& Q, const TruncatedArc& arc);

/// Series with polynomial coefficients, truncated at a fixed precision;
/// the workhorse behind jet expansion and the fiber checks.
class PolySeries {
public:
  PolySeries(RingPtr coeff_ring, std::size_t precision)
      : ring_(std::move(coeff_ring)),
        coeffs_(precision, Polynomial::zero(ring_)) {}

  std::size_t precision() const { return coeffs_.size(); }
  const RingPtr& coeff_ring() const { return ring_; }
  const Polynomial& coeff(std::size_t i) const { return coeffs_.at(i); }
  void set_coeff(std::size_t i, Polynomial p) { coeffs_.at(i) = std::move(p); }

  PolySeries operator+(const PolySeries& o) const;
  PolySeries operator*(const PolySeries& o) const;
  PolySeries scaled(const Polynomial& p) const;

  static PolySeries constant(const RingPtr& ring, std::size_t precision,
                             Polynomial c);

private:
  RingPtr ring_;
  std::vector<Polynomial> coeffs_;
};

/// h evaluated on series coordinates (coefficients in an arbitrary ring).
PolySeries evaluate_on_series(const Polynomial& h,
                              const std::vector<PolySeries>& images,
                              std::size_t precision);

}  // namespace adjlab
