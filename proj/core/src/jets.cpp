#include "adjlab/jets.hpp"

namespace adjlab {

JetRing make_jet_ring(const RingPtr& base, std::size_t level) {
  std::vector<std::string> names;
  names.reserve(base->arity() * (level + 1));
  for (std::size_t i = 0; i < base->arity(); ++i)
    for (std::size_t j = 0; j <= level; ++j)
      names.push_back(base->var_name(i) + "_" + std::to_string(j));
  RingPtr ring = PolyRing::make(names, base->field(), MonomialOrder::grevlex());
  return JetRing{ring, base, level};
}

PolySeries PolySeries::constant(const RingPtr& ring, std::size_t precision,
                                Polynomial c) {
  PolySeries s(ring, precision);
  if (precision > 0) s.coeffs_[0] = std::move(c);
  return s;
}

PolySeries PolySeries::operator+(const PolySeries& o) const {
  std::size_t n = std::min(precision(), o.precision());
  PolySeries s(ring_, n);
  for (std::size_t i = 0; i < n; ++i) s.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  return s;
}

PolySeries PolySeries::operator*(const PolySeries& o) const {
  std::size_t n = std::min(precision(), o.precision());
  PolySeries s(ring_, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      s.coeffs_[i + j] = s.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
    }
  }
  return s;
}

PolySeries PolySeries::scaled(const Polynomial& p) const {
  PolySeries s(ring_, precision());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) s.coeffs_[i] = coeffs_[i] * p;
  return s;
}

PolySeries evaluate_on_series(const Polynomial& h,
                              const std::vector<PolySeries>& images,
                              std::size_t precision) {
  if (images.size() != h.ring()->arity())
    throw std::invalid_argument("evaluate_on_series: one image per variable");
  const RingPtr& cring = images.empty() ? h.ring() : images[0].coeff_ring();
  PolySeries acc(cring, precision);
  for (const auto& t : h.terms()) {
    PolySeries term = PolySeries::constant(
        cring, precision, Polynomial::constant(cring, t.coeff));
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      for (std::int32_t k = 0; k < t.mono[i]; ++k) term = term * images[i];
    acc = acc + term;
  }
  return acc;
}

JetIdeal jet_ideal(const AffineSubscheme& X, std::size_t n,
                   const GroebnerBudget& budget) {
  (void)budget;
  const RingPtr& base = X.ambient();
  JetRing jr = make_jet_ring(base, n);

  std::vector<PolySeries> images;
  images.reserve(base->arity());
  for (std::size_t i = 0; i < base->arity(); ++i) {
    PolySeries s(jr.ring, n + 1);
    for (std::size_t j = 0; j <= n; ++j)
      s.set_coeff(j, Polynomial::variable(jr.ring, jr.var(i, j)));
    images.push_back(std::move(s));
  }

  // level-major generator order: the level-n list is a prefix of the
  // level-m list for m >= n
  std::vector<Polynomial> gens;
  std::vector<PolySeries> expanded;
  expanded.reserve(X.ideal().gens().size());
  for (const auto& h : X.ideal().gens())
    expanded.push_back(evaluate_on_series(h, images, n + 1));
  for (std::size_t j = 0; j <= n; ++j)
    for (const auto& e : expanded)
      if (!e.coeff(j).is_zero()) gens.push_back(e.coeff(j));

  return JetIdeal{jr, n, Ideal(jr.ring, std::move(gens))};
}

std::vector<Polynomial> embed_jet_generators(const JetIdeal& low,
                                             const JetRing& high) {
  if (high.level < low.level)
    throw std::invalid_argument("embed_jet_generators: target level too small");
  std::vector<Polynomial> out;
  out.reserve(low.ideal.gens().size());
  for (const auto& g : low.ideal.gens()) {
    std::vector<Term> ts;
    ts.reserve(g.term_count());
    for (const auto& t : g.terms()) {
      ExponentVec e(high.ring->arity(), 0);
      for (std::size_t v = 0; v < t.mono.size(); ++v) {
        if (t.mono[v] == 0) continue;
        auto idx = high.ring->var_index(low.jring.ring->var_name(v));
        if (!idx) throw std::logic_error("embed_jet_generators: name mismatch");
        e[*idx] = t.mono[v];
      }
      ts.push_back(Term{std::move(e), t.coeff});
    }
    out.push_back(Polynomial::from_terms(high.ring, std::move(ts)));
  }
  return out;
}

std::vector<Coeff> TruncatedArc::base_point() const {
  std::vector<Coeff> p;
  p.reserve(coords.size());
  for (const auto& s : coords) p.push_back(s.coeff(0));
  return p;
}

TruncatedArc make_arc(const RingPtr& base, std::vector<TruncatedSeries> coords) {
  if (coords.size() != base->arity())
    throw std::invalid_argument("make_arc: one coordinate series per variable");
  for (const auto& s : coords)
    if (s.precision() != coords[0].precision())
      throw PrecisionError("make_arc: coordinates must share precision");
  return TruncatedArc{std::move(coords)};
}

bool arc_on(const Ideal& I, const TruncatedArc& arc) {
  for (const auto& g : I.gens()) {
    TruncatedSeries v = substitute_series(g, arc.coords, arc.precision());
    if (!v.known_zero()) return false;
  }
  return true;
}

TruncatedArc truncate_arc(const TruncatedArc& arc, std::size_t level) {
  if (level + 1 > arc.precision())
    throw PrecisionError("truncate_arc: level beyond arc precision");
  std::vector<TruncatedSeries> coords;
  coords.reserve(arc.coords.size());
  for (const auto& s : arc.coords) {
    // keep the ambient precision, zero out degrees above the level
    TruncatedSeries t(s.field(), s.precision());
    for (std::size_t i = 0; i <= level && i < s.precision(); ++i)
      t.set_coeff(i, s.coeff(i));
    coords.push_back(std::move(t));
  }
  return TruncatedArc{std::move(coords)};
}

OrderValue arc_order(const Ideal& I, const TruncatedArc& arc) {
  std::size_t P = arc.precision();
  OrderValue best = OrderValue::at_least(Rational(static_cast<long>(P)));
  for (const auto& g : I.gens()) {
    TruncatedSeries v = substitute_series(g, arc.coords, P);
    best = OrderValue::min(best, v.order());
  }
  return best;
}

OrderValue arc_order(const QIdeal& Q, const TruncatedArc& arc) {
  OrderValue total = OrderValue::exact(Rational(0));
  for (const auto& f : Q.factors())
    total = total + arc_order(f.ideal, arc).scaled(f.exponent);
  return total;
}

}  // namespace adjlab
