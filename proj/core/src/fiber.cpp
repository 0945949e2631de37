#include "adjlab/fiber.hpp"

namespace adjlab {

namespace {

Polynomial apply_subst(const Polynomial& f,
                       const std::vector<std::optional<Polynomial>>& subst) {
  const RingPtr& ring = f.ring();
  bool touched = false;
  for (const auto& t : f.terms()) {
    for (std::size_t v = 0; v < t.mono.size(); ++v)
      if (t.mono[v] > 0 && subst[v]) touched = true;
  }
  if (!touched) return f;
  std::vector<Polynomial> images;
  images.reserve(ring->arity());
  for (std::size_t v = 0; v < ring->arity(); ++v)
    images.push_back(subst[v] ? *subst[v] : Polynomial::variable(ring, v));
  return f.substitute(ring, images);
}

}  // namespace

FiberCheckReport fiber_dimension_check(const AffineSubscheme& Y,
                                       const TruncatedArc& arc, std::size_t n,
                                       std::size_t m) {
  if (m < n) throw std::invalid_argument("fiber_dimension_check: need m >= n");
  SnfResult snf = elementary_divisors_along_arc(Y, arc);
  std::size_t e = 0;
  for (auto d : snf.divisors) e += d;

  // the proposition's hypothesis; violating inputs are refused
  if (!(m >= n + e && n + e >= 2 * e))
    throw HypothesisError("fiber_dimension_check: hypothesis m >= n+e >= 2e "
                          "violated (n=" +
                          std::to_string(n) + ", m=" + std::to_string(m) +
                          ", e=" + std::to_string(e) + ")");
  if (snf.valid_precision < m + 1 || arc.precision() < m + 1)
    throw PrecisionError(
        "fiber_dimension_check: need arc precision with at least " +
        std::to_string(m + 1) + " trusted coefficients");

  const RingPtr& base = Y.ambient();
  const auto& F = base->field();
  std::size_t N = base->arity();
  std::size_t c = static_cast<std::size_t>(Y.codimension());
  std::size_t d = static_cast<std::size_t>(Y.dimension());
  std::size_t width = m - n;  // t-degrees of the perturbation coefficients

  // symbol ring: v{j}_{k} is the t^k coefficient of the j-th transformed
  // perturbation coordinate
  std::vector<std::string> names;
  for (std::size_t j = 0; j < N; ++j)
    for (std::size_t k = 0; k < width; ++k)
      names.push_back("v" + std::to_string(j) + "_" + std::to_string(k));
  RingPtr vring = PolyRing::make(names, F, MonomialOrder::grevlex());
  auto sym = [&](std::size_t j, std::size_t k) { return j * width + k; };

  std::size_t prec = m + 1;
  auto lift_series = [&](const TruncatedSeries& s) {
    PolySeries out(vring, prec);
    for (std::size_t i = 0; i < prec && i < s.precision(); ++i)
      out.set_coeff(i, Polynomial::constant(vring, s.coeff(i)));
    return out;
  };

  // v_j(t) and the coordinates x_i = gamma_n + t^(n+1) * (Q v)_i
  std::vector<PolySeries> v;
  for (std::size_t j = 0; j < N; ++j) {
    PolySeries s(vring, prec);
    for (std::size_t k = 0; k < width; ++k)
      s.set_coeff(k, Polynomial::variable(vring, sym(j, k)));
    v.push_back(std::move(s));
  }
  TruncatedArc gamma_n = truncate_arc(arc, n);
  std::vector<PolySeries> x;
  for (std::size_t i = 0; i < N; ++i) {
    PolySeries qv(vring, prec);
    for (std::size_t j = 0; j < N; ++j)
      qv = qv + lift_series(snf.right[i][j]) * v[j];
    // shift by t^(n+1)
    PolySeries shifted(vring, prec);
    for (std::size_t k = 0; k + n + 1 < prec; ++k)
      shifted.set_coeff(k + n + 1, qv.coeff(k));
    x.push_back(lift_series(gamma_n.coords[i]) + shifted);
  }

  // transformed equations g = P * h evaluated on x(t)
  std::vector<PolySeries> h_eval;
  for (const auto& h : Y.ideal().gens())
    h_eval.push_back(evaluate_on_series(h, x, prec));
  std::vector<PolySeries> g;
  for (std::size_t i = 0; i < c; ++i) {
    PolySeries acc(vring, prec);
    for (std::size_t l = 0; l < c; ++l)
      acc = acc + h_eval[l] * lift_series(snf.left[i][l]);
    g.push_back(std::move(acc));
  }

  FiberCheckReport rep;
  rep.e = e;
  rep.divisors = snf.divisors;
  rep.expected_dim = width * d + e;

  std::vector<std::optional<Polynomial>> subst(vring->arity());
  bool affine = true;

  // triangular solve in ascending t-degree of the solved coefficient
  for (std::size_t k = 0; k < width && affine; ++k) {
    for (std::size_t i = 0; i < c && affine; ++i) {
      std::size_t ei = snf.divisors[i];
      if (k + ei + 1 > width) continue;  // symbol stays free
      std::size_t target = sym(i, k);
      std::size_t degree = n + ei + k + 1;
      Polynomial C = apply_subst(g[i].coeff(degree), subst);
      // C must be affine in v_{i,k} with a constant unit coefficient and
      // involve only symbols of lower t-degree otherwise
      Polynomial dC = C.derivative(target);
      if (dC.is_zero() || !dC.is_constant()) {
        affine = false;
        break;
      }
      Coeff c0 = dC.leading_coeff();
      Polynomial rest =
          C - Polynomial::variable(vring, target).scaled(c0);
      // check rest only references resolved (lower-degree) symbols
      for (const auto& t : rest.terms()) {
        for (std::size_t vv = 0; vv < t.mono.size(); ++vv) {
          if (t.mono[vv] > 0 && vv % width >= k && !subst[vv]) {
            affine = false;
            break;
          }
        }
        if (!affine) break;
      }
      if (!affine) break;
      Polynomial expr = rest.scaled(F.neg(F.inv(c0)));
      subst[target] = apply_subst(expr, subst);
    }
  }

  if (affine) {
    // every residual coefficient must vanish identically in the free symbols
    for (std::size_t i = 0; i < c && affine; ++i) {
      for (std::size_t D = 0; D <= m && affine; ++D) {
        if (!apply_subst(g[i].coeff(D), subst).is_zero()) affine = false;
      }
    }
  }

  std::size_t free_count = 0;
  for (std::size_t vv = 0; vv < vring->arity(); ++vv)
    if (!subst[vv]) ++free_count;

  rep.affine_space = affine;
  rep.measured_dim = free_count;
  rep.pass = affine && rep.measured_dim == rep.expected_dim;
  return rep;
}

}  // namespace adjlab
