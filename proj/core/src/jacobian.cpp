#include "adjlab/jacobian.hpp"

#include <algorithm>

namespace adjlab {

PolyMatrix jacobian_matrix(const Ideal& I) {
  PolyMatrix M;
  const RingPtr& ring = I.ring();
  M.reserve(I.gens().size());
  for (const auto& g : I.gens()) {
    std::vector<Polynomial> row;
    row.reserve(ring->arity());
    for (std::size_t j = 0; j < ring->arity(); ++j) row.push_back(g.derivative(j));
    M.push_back(std::move(row));
  }
  return M;
}

Polynomial poly_det(const PolyMatrix& M, const RingPtr& ring) {
  std::size_t n = M.size();
  if (n == 0) return Polynomial::from_int(ring, 1);
  if (n == 1) return M[0][0];

  // expand along the row with the fewest nonzero entries
  std::size_t best_row = 0, best_nz = n + 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t nz = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (!M[i][j].is_zero()) ++nz;
    if (nz < best_nz) {
      best_nz = nz;
      best_row = i;
    }
  }
  if (best_nz == 0) return Polynomial::zero(ring);

  Polynomial acc = Polynomial::zero(ring);
  for (std::size_t j = 0; j < n; ++j) {
    if (M[best_row][j].is_zero()) continue;
    PolyMatrix sub;
    sub.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == best_row) continue;
      std::vector<Polynomial> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(M[i][k]);
      sub.push_back(std::move(row));
    }
    Polynomial cof = M[best_row][j] * poly_det(sub, ring);
    acc = ((best_row + j) % 2 == 0) ? acc + cof : acc - cof;
  }
  return acc;
}

Polynomial poly_minor(const PolyMatrix& M, const RingPtr& ring,
                      const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols) {
  PolyMatrix sub;
  sub.reserve(rows.size());
  for (auto r : rows) {
    std::vector<Polynomial> row;
    row.reserve(cols.size());
    for (auto c : cols) row.push_back(M.at(r).at(c));
    sub.push_back(std::move(row));
  }
  return poly_det(sub, ring);
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (r > (~std::uint64_t{0}) / (n - k + i)) return ~std::uint64_t{0};
    r = r * (n - k + i) / i;
  }
  return r;
}

void enumerate_subsets(std::size_t n, std::size_t k,
                       const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::size_t> random_subset(XorShift64& rng, std::size_t n,
                                       std::size_t k) {
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j =
        i + static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n - i - 1)));
    std::swap(pool[i], pool[j]);
  }
  std::vector<std::size_t> out(pool.begin(), pool.begin() + k);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

JacobianIdealResult jacobian_ideal(const AffineSubscheme& X,
                                   const JacobianOptions& opts) {
  const RingPtr& ring = X.ambient();
  const Ideal& IX = X.ideal();
  std::size_t c = static_cast<std::size_t>(X.codimension());
  PolyMatrix J = jacobian_matrix(IX);
  std::size_t g = J.size();
  std::size_t N = ring->arity();

  std::vector<Polynomial> gens = IX.gens();
  if (c == 0 || c > g || c > N) {
    // no minors to take (X = ambient, or too few generators): the
    // Jacobian ideal degenerates to I_X itself
    return JacobianIdealResult{Ideal(ring, std::move(gens)), false, 0};
  }

  std::uint64_t count = binomial(g, c);
  std::uint64_t count2 = binomial(N, c);
  bool overflow = count == ~std::uint64_t{0} || count2 == ~std::uint64_t{0} ||
                  count > opts.max_minors / std::max<std::uint64_t>(count2, 1);
  std::uint64_t total = overflow ? ~std::uint64_t{0} : count * count2;

  if (!overflow && total <= opts.max_minors) {
    std::uint64_t used = 0;
    enumerate_subsets(g, c, [&](const std::vector<std::size_t>& rows) {
      enumerate_subsets(N, c, [&](const std::vector<std::size_t>& cols) {
        Polynomial m = poly_minor(J, ring, rows, cols);
        if (!m.is_zero()) gens.push_back(std::move(m));
        ++used;
      });
    });
    return JacobianIdealResult{Ideal(ring, std::move(gens)), false, used};
  }

  // sampling mode: grow by random minors until two stable rounds
  XorShift64 rng(opts.seed);
  Ideal current(ring, gens);
  std::uint64_t used = 0;
  int stable = 0;
  for (int round = 0; round < opts.max_rounds; ++round) {
    std::vector<Polynomial> fresh = current.gens();
    bool grew = false;
    for (std::size_t s = 0; s < opts.sample_round; ++s) {
      auto rows = random_subset(rng, g, c);
      auto cols = random_subset(rng, N, c);
      Polynomial m = poly_minor(J, ring, rows, cols);
      ++used;
      if (m.is_zero()) continue;
      if (!current.contains(m, opts.budget)) {
        fresh.push_back(std::move(m));
        grew = true;
      }
    }
    if (grew) {
      current = Ideal(ring, std::move(fresh));
      stable = 0;
    } else {
      ++stable;
      if (stable >= opts.stable_rounds)
        return JacobianIdealResult{std::move(current), true, used};
    }
  }
  throw BudgetExceededError(
      "jacobian_ideal: sampled minor ideal did not stabilize within " +
      std::to_string(opts.max_rounds) + " rounds");
}

}  // namespace adjlab
