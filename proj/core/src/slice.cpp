#include "adjlab/slice.hpp"

namespace adjlab {

std::int64_t XorShift64::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  for (;;) {
    std::uint64_t r = next();
    if (r < limit || limit == 0) return lo + static_cast<std::int64_t>(r % span);
  }
}

namespace {

// validation shared by random and explicit slices; returns an empty
// string on success, the failed check's name otherwise
std::string validate_slice(const AffineSubscheme& X, const Ideal& IY,
                           Ideal& residual_out, const GroebnerBudget& budget) {
  int c = X.codimension();
  int dim_y = krull_dimension(IY, budget);
  if (dim_y != X.dimension())
    return "slice dimension check failed: dim(I_Y) = " + std::to_string(dim_y) +
           ", expected " + std::to_string(X.dimension());
  if (!X.ideal().contains(IY, budget))
    return "slice containment check failed: I_Y not inside I_X";
  Ideal residual = ideal_quotient(IY, X.ideal(), budget);
  Ideal intersect = ideal_intersection(X.ideal(), residual, budget);
  if (!intersect.equals(IY, budget))
    return "scheme-union check failed: I_Y != I_X intersect (I_Y : I_X)";
  residual_out = std::move(residual);
  (void)c;
  return "";
}

}  // namespace

LciSlice general_lci_slice(const AffineSubscheme& X, std::uint64_t seed,
                           const SliceOptions& opts) {
  const auto& gens = X.ideal().gens();
  const RingPtr& ring = X.ambient();
  const auto& F = ring->field();
  std::size_t c = static_cast<std::size_t>(X.codimension());
  std::string last_error = "no attempt made";

  std::uint64_t attempt_seed = seed;
  for (int attempt = 0; attempt < opts.retries; ++attempt) {
    XorShift64 rng(attempt_seed);
    std::vector<Polynomial> combos;
    combos.reserve(c);
    for (std::size_t i = 0; i < c; ++i) {
      Polynomial f = Polynomial::zero(ring);
      for (const auto& g : gens) {
        std::int64_t lambda = rng.uniform_int(opts.coeff_lo, opts.coeff_hi);
        f = f + g.scaled(F.from_int(lambda));
      }
      combos.push_back(std::move(f));
    }
    Ideal IY(ring, std::move(combos));
    Ideal residual = Ideal::zero(ring);
    last_error = validate_slice(X, IY, residual, opts.budget);
    if (last_error.empty())
      return LciSlice{std::move(IY), std::move(residual), seed};
    attempt_seed = attempt_seed * 6364136223846793005ull + 1442695040888963407ull;
  }
  throw GenericityError("general_lci_slice: seed " + std::to_string(seed) + ": " +
                        last_error + " (after " + std::to_string(opts.retries) +
                        " retries)");
}

LciSlice explicit_slice(const AffineSubscheme& X, std::vector<Polynomial> gens,
                        const GroebnerBudget& budget) {
  Ideal IY(X.ambient(), std::move(gens));
  Ideal residual = Ideal::zero(X.ambient());
  std::string err = validate_slice(X, IY, residual, budget);
  if (!err.empty()) throw GenericityError("explicit_slice: " + err);
  return LciSlice{std::move(IY), std::move(residual), 0};
}

}  // namespace adjlab
