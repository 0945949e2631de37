#include "adjlab/snf.hpp"

#include <algorithm>

#include "adjlab/jacobian.hpp"

namespace adjlab {

namespace {

// series divided by t^e (drops e known coefficients; precision shrinks)
TruncatedSeries shift_down(const TruncatedSeries& s, std::size_t e) {
  if (e == 0) return s;
  std::vector<Coeff> cs;
  cs.reserve(s.precision() - e);
  for (std::size_t i = e; i < s.precision(); ++i) cs.push_back(s.coeff(i));
  return TruncatedSeries::from_coeffs(s.field(), std::move(cs));
}

std::optional<std::size_t> visible_order(const TruncatedSeries& s) {
  OrderValue o = s.order();
  if (!o.is_exact()) return std::nullopt;
  return static_cast<std::size_t>(o.value().get_num().get_si());
}

}  // namespace

SeriesMatrix series_matrix_mul(const SeriesMatrix& A, const SeriesMatrix& B) {
  std::size_t n = A.size(), k = B.size(), m = B.empty() ? 0 : B[0].size();
  if (!A.empty() && A[0].size() != k)
    throw std::invalid_argument("series_matrix_mul: shape mismatch");
  SeriesMatrix C;
  C.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<TruncatedSeries> row;
    row.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
      TruncatedSeries acc = A[i][0] * B[0][j];
      for (std::size_t l = 1; l < k; ++l) acc = acc + A[i][l] * B[l][j];
      row.push_back(std::move(acc));
    }
    C.push_back(std::move(row));
  }
  return C;
}

SnfResult elementary_divisors_along_arc(const AffineSubscheme& Y,
                                        const TruncatedArc& arc) {
  const RingPtr& ring = Y.ambient();
  const auto& F = ring->field();
  std::size_t P = arc.precision();
  std::size_t c = static_cast<std::size_t>(Y.codimension());
  std::size_t N = ring->arity();
  if (Y.ideal().gens().size() != c)
    throw std::invalid_argument(
        "elementary_divisors_along_arc: Y must be a complete intersection "
        "presented by codimension-many generators");
  if (!arc_on(Y.ideal(), arc))
    throw std::invalid_argument("elementary_divisors_along_arc: arc not on Y");

  // Jacobian along the arc
  PolyMatrix Jp = jacobian_matrix(Y.ideal());
  SeriesMatrix J;
  J.reserve(c);
  for (std::size_t i = 0; i < c; ++i) {
    std::vector<TruncatedSeries> row;
    row.reserve(N);
    for (std::size_t j = 0; j < N; ++j)
      row.push_back(substitute_series(Jp[i][j], arc.coords, P));
    J.push_back(std::move(row));
  }

  auto identity = [&](std::size_t n) {
    SeriesMatrix I(n, std::vector<TruncatedSeries>(n, TruncatedSeries(F, P)));
    for (std::size_t i = 0; i < n; ++i)
      I[i][i] = TruncatedSeries::monomial_t(F, P, 0, F.one());
    return I;
  };
  SeriesMatrix left = identity(c), right = identity(N);

  std::size_t effective = P;  // precision still trusted for later pivots
  std::vector<std::size_t> divisors;

  for (std::size_t k = 0; k < c; ++k) {
    // minimal visible order in the remaining block
    std::optional<std::size_t> best;
    std::size_t bi = k, bj = k;
    for (std::size_t i = k; i < c; ++i) {
      for (std::size_t j = k; j < N; ++j) {
        auto o = visible_order(J[i][j]);
        if (o && (!best || *o < *best)) {
          best = *o;
          bi = i;
          bj = j;
        }
      }
    }
    if (!best || *best >= effective)
      throw PrecisionError(
          "elementary_divisors_along_arc: divisor " + std::to_string(k + 1) +
          " not determined below precision " + std::to_string(P) +
          "; retry with a higher-precision arc");
    std::size_t e = *best;

    std::swap(J[k], J[bi]);
    std::swap(left[k], left[bi]);
    if (bj != k) {
      for (std::size_t i = 0; i < c; ++i) std::swap(J[i][k], J[i][bj]);
      for (std::size_t i = 0; i < N; ++i) std::swap(right[i][k], right[i][bj]);
    }

    // normalize the pivot to exactly t^e modulo the trusted precision
    TruncatedSeries unit = shift_down(J[k][k], e);
    TruncatedSeries uinv_short = unit.inverted();
    TruncatedSeries uinv(F, P);
    for (std::size_t i = 0; i < uinv_short.precision() && i < P; ++i)
      uinv.set_coeff(i, uinv_short.coeff(i));
    for (std::size_t j = 0; j < N; ++j) J[k][j] = J[k][j] * uinv;
    for (std::size_t j = 0; j < c; ++j) left[k][j] = left[k][j] * uinv;

    // clear the pivot column and row
    for (std::size_t i = 0; i < c; ++i) {
      if (i == k) continue;
      auto o = visible_order(J[i][k]);
      if (!o && J[i][k].known_zero()) continue;
      TruncatedSeries q = shift_down(J[i][k], e);
      TruncatedSeries qfull(F, P);
      for (std::size_t l = 0; l < q.precision(); ++l) qfull.set_coeff(l, q.coeff(l));
      for (std::size_t j = 0; j < N; ++j) J[i][j] = J[i][j] - qfull * J[k][j];
      for (std::size_t j = 0; j < c; ++j)
        left[i][j] = left[i][j] - qfull * left[k][j];
    }
    for (std::size_t j = 0; j < N; ++j) {
      if (j == k) continue;
      auto o = visible_order(J[k][j]);
      if (!o && J[k][j].known_zero()) continue;
      TruncatedSeries q = shift_down(J[k][j], e);
      TruncatedSeries qfull(F, P);
      for (std::size_t l = 0; l < q.precision(); ++l) qfull.set_coeff(l, q.coeff(l));
      for (std::size_t i = 0; i < c; ++i) J[i][j] = J[i][j] - J[i][k] * qfull;
      for (std::size_t i = 0; i < N; ++i)
        right[i][j] = right[i][j] - right[i][k] * qfull;
    }
    divisors.push_back(e);
    effective -= e;
  }

  std::sort(divisors.begin(), divisors.end());
  return SnfResult{std::move(divisors), std::move(left), std::move(right), effective};
}

}  // namespace adjlab
